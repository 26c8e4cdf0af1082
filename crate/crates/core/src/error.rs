// SPDX-License-Identifier: MIT

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("quintuplet rejected: {}", .0.join("; "))]
    Rejected(Vec<String>),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("representations not equivalent or degenerate: {0}")]
    NotEquivalent(String),
    #[error("path error: {0}")]
    Path(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
