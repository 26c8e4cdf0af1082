// SPDX-License-Identifier: MIT

//! Verification suites shared by the command line and the test harness.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{casimir_values, relation_residuals, subset_sum_residual, Label, RepHandle};
use crate::error::{Error, Result};
use crate::multivariate as mv;
use crate::representation::{build_rep, check_irreducible, dimension, validate, Quintuplet};
use crate::symmetry::{group_certificates, GroupElement};
use crate::transitions::{
    align_residual, closed_form_edge, cycle_certificates, intertwiner_oracle, intertwining_residual,
    orthogonality_residual, EdgeKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Casimir,
    Group,
    Transitions,
    Cycles,
    Tratnik,
    Griffiths,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Algebra,
        Suite::Casimir,
        Suite::Group,
        Suite::Transitions,
        Suite::Cycles,
        Suite::Tratnik,
        Suite::Griffiths,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Casimir => "casimir",
            Suite::Group => "group",
            Suite::Transitions => "transitions",
            Suite::Cycles => "cycles",
            Suite::Tratnik => "tratnik",
            Suite::Griffiths => "griffiths",
            Suite::All => "all",
        }
    }

    pub fn needs_quintuplet(self) -> bool {
        self != Suite::Group
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Reported but not counted towards the verdict.
    pub informational: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| !c.informational).all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.informational && !c.passed).collect()
    }

    fn push(&mut self, suite: Suite, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            residual,
            tolerance,
            passed: residual < tolerance,
            informational: false,
        });
    }

    fn note(&mut self, suite: Suite, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.push(suite, name, residual, tolerance);
        self.checks.last_mut().unwrap().informational = true;
    }

    pub fn extend(&mut self, o: Report) {
        self.checks.extend(o.checks);
    }
}

/// Adds `eps` to entry `(r, c)` of one stored generator.
pub fn perturb(rep: &mut RepHandle, l: Label, r: usize, c: usize, eps: f64) -> Result<()> {
    let d = rep.dim();
    let m = rep.get_mut(l).ok_or_else(|| Error::Structural(format!("{l} is not stored")))?;
    if r >= d || c >= d {
        return Err(Error::Domain(format!("entry ({r},{c}) outside a {d}x{d} matrix")));
    }
    m[(r, c)] += eps;
    Ok(())
}

/// The 24 relations, plus the dimension and irreducibility checks when `N`
/// is known.
pub fn algebra_report(rep: &RepHandle, big_n: Option<usize>, tol: f64) -> Report {
    let mut out = Report::default();
    for r in relation_residuals(rep) {
        out.push(Suite::Algebra, format!("{}: {}", r.group, r.name), r.residual, tol);
    }
    if let Some(n) = big_n {
        let dim_ok = rep.dim() == dimension(n);
        out.push(
            Suite::Algebra,
            format!("dimension {} = binom(N+2,2)", rep.dim()),
            if dim_ok { 0.0 } else { 1.0 },
            0.5,
        );
        let irr = check_irreducible(rep, n);
        out.push(Suite::Algebra, "irreducibility", if irr { 0.0 } else { 1.0 }, 0.5);
    }
    out
}

pub fn casimir_report(rep: &RepHandle, tol: f64) -> Report {
    let mut out = Report::default();
    let c = casimir_values(rep);
    for (name, v) in ["w123", "w124", "w134", "w234", "x1234"].iter().zip(c.norms) {
        out.push(Suite::Casimir, *name, v, 10.0 * tol);
    }
    out.push(Suite::Casimir, "x1234 consistency", c.x_consistency, 10.0 * tol);
    out.push(Suite::Casimir, "subset sums", subset_sum_residual(rep), tol);
    out
}

pub fn group_report() -> Report {
    let mut out = Report::default();
    for c in group_certificates() {
        let name = if c.detail.is_empty() { c.name } else { format!("{} ({})", c.name, c.detail) };
        out.push(Suite::Group, name, if c.passed { 0.0 } else { 1.0 }, 0.5);
    }
    out
}

pub fn transitions_report(j: &Quintuplet, tol: f64) -> Result<Report> {
    let mut out = Report::default();
    let e = GroupElement::identity();
    for kind in [EdgeKind::T, EdgeKind::S, EdgeKind::I, EdgeKind::R] {
        let k = kind.letter();
        let t = closed_form_edge(kind, j)?;
        let o = intertwiner_oracle(&e, &kind.element(), j)?;
        out.push(
            Suite::Transitions,
            format!("{k}: closed form vs oracle"),
            align_residual(&t.matrix, &o.matrix),
            10.0 * tol,
        );
        out.push(Suite::Transitions, format!("{k}: orthogonality"), orthogonality_residual(&t.matrix), tol);
        out.push(
            Suite::Transitions,
            format!("{k}: intertwining"),
            intertwining_residual(&t.matrix, &e, &kind.element(), j)?,
            tol,
        );
    }
    Ok(out)
}

pub fn cycles_report(j: &Quintuplet, tol: f64) -> Result<Report> {
    let mut out = Report::default();
    for c in cycle_certificates(j)? {
        out.push(Suite::Cycles, c.name, c.residual, 10.0 * tol);
    }
    Ok(out)
}

pub fn tratnik_report(j: &Quintuplet, tol: f64) -> Result<Report> {
    let mut out = Report::default();
    let s = Suite::Tratnik;
    let t = mv::tratnik_table(j)?;
    out.push(s, "table vs T(e, r^2)", mv::transition_residual(&t)?, tol);
    let (row, col) = mv::unitarity(&t);
    out.push(s, "unitarity (rows)", row, tol);
    out.push(s, "unitarity (columns)", col, tol);
    for r in mv::tratnik_identities(j)? {
        out.push(s, r.name, r.residual, 10.0 * tol);
    }
    let c = mv::weight_report(j, mv::WeightForm::Corrected)?;
    out.push(s, "R2 factorization (corrected W, K)", c.factorization, tol);
    out.push(s, "R2 orthogonality (corrected W, K), relative", c.orthogonality, 100.0 * tol);
    out.push(s, "R2 polynomiality", mv::r2_polynomiality(j)?, 100.0 * tol);
    let p = mv::weight_report(j, mv::WeightForm::Literal)?;
    out.note(
        s,
        format!("R2 orthogonality (literal W, K; {} negative weights)", p.negative),
        p.orthogonality,
        100.0 * tol,
    );
    Ok(out)
}

pub fn griffiths_report(j: &Quintuplet, tol: f64) -> Result<Report> {
    let mut out = Report::default();
    let s = Suite::Griffiths;
    let g = mv::griffiths_table(j)?;
    out.push(s, "table vs T(e, t^2 r^2)", mv::transition_residual(&g)?, tol);
    out.push(s, "direct sum vs factored form", mv::griffiths_factorization_residual(j)?, tol / 10.0);
    let sym = mv::griffiths_symmetry(j)?;
    out.push(s, "j1 <-> j4 symmetry with sign (-1)^(n2+m2)", sym.signed, tol / 10.0);
    out.note(s, "j1 <-> j4 symmetry without sign", sym.literal, tol / 10.0);
    let (row, col) = mv::unitarity(&g);
    out.push(s, "unitarity (rows)", row, tol);
    out.push(s, "unitarity (columns)", col, tol);
    for r in mv::griffiths_identities(j)? {
        out.push(s, r.name, r.residual, 10.0 * tol);
    }
    Ok(out)
}

/// Runs one suite (or all of them, concurrently). `rep` replaces the built
/// representation in the algebra and casimir suites.
pub fn run(suite: Suite, j: Option<&Quintuplet>, rep: Option<&RepHandle>, tol: f64) -> Result<Report> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let need_j = || j.ok_or_else(|| Error::Parse(format!("suite {suite} needs a quintuplet (--j)")));
    let built;
    let (rep, big_n) = match (suite, rep) {
        (Suite::Group | Suite::Transitions | Suite::Cycles | Suite::Tratnik | Suite::Griffiths, _) => (None, None),
        (_, Some(r)) => (Some(r), j.map(validate).transpose()?),
        (_, None) => {
            built = build_rep(need_j()?)?;
            (Some(&built.rep), Some(built.big_n))
        }
    };
    if suite.needs_quintuplet() {
        validate(need_j()?)?;
    }
    match suite {
        Suite::Algebra => Ok(algebra_report(rep.unwrap(), big_n, tol)),
        Suite::Casimir => Ok(casimir_report(rep.unwrap(), tol)),
        Suite::Group => Ok(group_report()),
        Suite::Transitions => transitions_report(need_j()?, tol),
        Suite::Cycles => cycles_report(need_j()?, tol),
        Suite::Tratnik => tratnik_report(need_j()?, tol),
        Suite::Griffiths => griffiths_report(need_j()?, tol),
        Suite::All => {
            let j = need_j()?;
            let rep = rep.unwrap();
            let parts: Vec<Result<Report>> = std::thread::scope(|sc| {
                let hs: Vec<_> = Suite::EACH
                    .iter()
                    .map(|&s| {
                        sc.spawn(move || match s {
                            Suite::Algebra => Ok(algebra_report(rep, big_n, tol)),
                            Suite::Casimir => Ok(casimir_report(rep, tol)),
                            _ => run(s, Some(j), None, tol),
                        })
                    })
                    .collect();
                hs.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
            });
            let mut out = Report::default();
            for p in parts {
                out.extend(p?);
            }
            Ok(out)
        }
    }
}
