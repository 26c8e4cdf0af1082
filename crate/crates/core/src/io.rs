// SPDX-License-Identifier: MIT

//! File formats: sparse JSON and dense CSV for matrices, CSV/JSON for
//! bivariate tables, and rational parsing of quintuplets.

use std::str::FromStr;

use nalgebra::DMatrix;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multivariate::BivariateTable;
use crate::representation::Quintuplet;
use crate::verify::Report;

/// Parses `"3/2"`, `"2"` or `"1.5"`.
pub fn parse_rational(s: &str) -> Result<f64> {
    let s = s.trim();
    if let Ok(r) = Ratio::<i64>::from_str(s) {
        return Ok(*r.numer() as f64 / *r.denom() as f64);
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(Error::Parse(format!("not a rational number: {s:?}"))),
    }
}

pub fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(parse_rational).collect()
}

pub fn parse_quintuplet(s: &str) -> Result<Quintuplet> {
    let v = parse_list(s)?;
    let a: [f64; 5] = v
        .try_into()
        .map_err(|v: Vec<f64>| Error::Parse(format!("expected 5 comma-separated values, got {}", v.len())))?;
    Ok(Quintuplet::from_array(a))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub basis: String,
    pub j: Vec<f64>,
    pub entries: Vec<(usize, usize, f64)>,
}

pub const BASIS_TAG: &str = "lex(n,p)";

impl MatrixFile {
    pub fn from_matrix(m: &DMatrix<f64>, j: &Quintuplet) -> MatrixFile {
        let mut entries = Vec::new();
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                if m[(r, c)] != 0.0 {
                    entries.push((r, c, m[(r, c)]));
                }
            }
        }
        MatrixFile { dim: m.nrows(), basis: BASIS_TAG.into(), j: j.to_array().to_vec(), entries }
    }

    pub fn to_matrix(&self) -> Result<DMatrix<f64>> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for &(r, c, v) in &self.entries {
            if r >= self.dim || c >= self.dim {
                return Err(Error::Parse(format!("entry ({r},{c}) outside a {0}x{0} matrix", self.dim)));
            }
            m[(r, c)] = v;
        }
        Ok(m)
    }
}

pub fn matrix_to_json(m: &DMatrix<f64>, j: &Quintuplet) -> String {
    serde_json::to_string_pretty(&MatrixFile::from_matrix(m, j)).expect("plain data serializes")
}

pub fn matrix_from_json(s: &str) -> Result<(DMatrix<f64>, Quintuplet)> {
    let f: MatrixFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if f.basis != BASIS_TAG {
        return Err(Error::Parse(format!("unknown basis {:?}", f.basis)));
    }
    let j: [f64; 5] = f.j.clone().try_into().map_err(|_| Error::Parse("j must have 5 entries".into()))?;
    Ok((f.to_matrix()?, Quintuplet::from_array(j)))
}

/// Dense row-major CSV. Values use the shortest round-trip representation.
pub fn matrix_to_csv(m: &DMatrix<f64>) -> String {
    let mut s = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|c| format!("{:?}", m[(r, c)])).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

pub fn matrix_from_csv(s: &str) -> Result<DMatrix<f64>> {
    let rows: Vec<Vec<f64>> = s
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',').map(|x| x.trim().parse::<f64>().map_err(|e| Error::Parse(format!("{x:?}: {e}")))).collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("CSV matrix is not square".into()));
    }
    Ok(DMatrix::from_fn(n, n, |r, c| rows[r][c]))
}

/// One row per check. Names are quoted because some contain commas.
pub fn report_to_csv(r: &Report) -> String {
    let mut s = String::from("suite,name,residual,tolerance,passed,informational\n");
    for c in &r.checks {
        let name = c.name.replace('"', "\"\"");
        s.push_str(&format!(
            "{},\"{name}\",{:e},{:e},{},{}\n",
            c.suite, c.residual, c.tolerance, c.passed, c.informational
        ));
    }
    s
}

pub fn table_to_csv(t: &BivariateTable) -> String {
    let mut s = String::from("n1,n2,m1,m2,value\n");
    for (a, b, c, d, v) in t.entries() {
        s.push_str(&format!("{a},{b},{c},{d},{v:?}\n"));
    }
    s
}

#[derive(Serialize)]
struct TableFile<'a> {
    kind: &'a crate::multivariate::Kind,
    big_n: usize,
    j: [f64; 5],
    entries: Vec<(usize, usize, usize, usize, f64)>,
}

pub fn table_to_json(t: &BivariateTable) -> String {
    let f = TableFile { kind: &t.kind, big_n: t.big_n, j: t.j.to_array(), entries: t.entries() };
    serde_json::to_string_pretty(&f).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), 1.5);
        assert_eq!(parse_rational(" 2 ").unwrap(), 2.0);
        assert_eq!(parse_rational("0.25").unwrap(), 0.25);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_quintuplet("1,1,2,1").is_err());
    }

    #[test]
    fn report_csv_quotes_names() {
        let r = crate::verify::run(crate::verify::Suite::Group, None, None, 1e-9).unwrap();
        let csv = report_to_csv(&r);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("suite,name,residual,tolerance,passed,informational"));
        assert_eq!(lines.count(), r.checks.len());
        assert!(csv.lines().skip(1).all(|l| l.starts_with("group,\"")));
    }

    #[test]
    fn json_roundtrip_is_exact() {
        let m = DMatrix::from_row_slice(2, 2, &[0.1, 0.0, 1.0 / 3.0, -2.5e-17]);
        let j = Quintuplet::new(1.0, 1.0, 2.0, 1.0, 1.0);
        let (back, jj) = matrix_from_json(&matrix_to_json(&m, &j)).unwrap();
        assert_eq!(back, m);
        assert_eq!(jj, j);
        assert_eq!(matrix_from_csv(&matrix_to_csv(&m)).unwrap(), m);
    }
}
