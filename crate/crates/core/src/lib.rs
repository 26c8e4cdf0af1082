// SPDX-License-Identifier: MIT

//! Finite-dimensional representations of the special rank-two Racah
//! algebra sR(4), the S5 symmetry acting on them, transition matrices
//! between equivalent representations, and the Racah, Tratnik and
//! Griffiths-like functions those matrices are made of.

pub mod algebra;
pub mod error;
pub mod io;
pub mod multivariate;
pub mod racah;
pub mod representation;
pub mod symmetry;
pub mod transitions;
pub mod verify;

pub use error::{Error, Result};
