// SPDX-License-Identifier: MIT

//! Orthogonal transition matrices between the equivalent representations
//! `pi_g^J(X) = pi_e^{gJ}(g(X))`.
//!
//! Convention: `T_{h,g}(J) pi_g^J(X) = pi_h^J(X) T_{h,g}(J)`, rows indexed by
//! `(n, p)` and columns by `(m, q)` in the lexicographic basis.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::algebra::{max_abs, Label};
use crate::error::{Error, Result};
use crate::racah::{racah_p_table, RacahParams};
use crate::representation::{basis, build_rep_unchecked, dimension, position, Quintuplet};
use crate::symmetry::{act_on_label, act_on_quintuplet, vertex_of, Graph, GroupElement};

/// Gap threshold separating the kernel from the rest of the spectrum.
pub const NULL_GAP: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    S,
    T,
    I,
    R,
}

impl EdgeKind {
    pub fn from_letter(c: char) -> Result<EdgeKind> {
        match c {
            's' => Ok(EdgeKind::S),
            't' => Ok(EdgeKind::T),
            'i' => Ok(EdgeKind::I),
            'r' => Ok(EdgeKind::R),
            _ => Err(Error::Parse(format!("no edge of kind {c:?}"))),
        }
    }

    pub fn letter(self) -> char {
        match self {
            EdgeKind::S => 's',
            EdgeKind::T => 't',
            EdgeKind::I => 'i',
            EdgeKind::R => 'r',
        }
    }

    pub fn element(self) -> GroupElement {
        GroupElement::from_word(&self.letter().to_string()).expect("edge letter")
    }
}

#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub matrix: DMatrix<f64>,
    pub from: GroupElement,
    pub to: GroupElement,
    pub j: Quintuplet,
}

/// Flips the global sign so that the first nonzero entry (row-major) is positive.
pub fn canonical_sign(mut m: DMatrix<f64>) -> DMatrix<f64> {
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            let x = m[(r, c)];
            if x.abs() > 1e-12 {
                if x < 0.0 {
                    m.neg_mut();
                }
                return m;
            }
        }
    }
    m
}

/// Entrywise distance after aligning the sign of `b` on the largest entry of `a`.
pub fn align_residual(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    let k = a.iamax_full();
    let s = if a[k].signum() == b[k].signum() { 1.0 } else { -1.0 };
    max_abs(&(a - b * s))
}

pub fn orthogonality_residual(t: &DMatrix<f64>) -> f64 {
    let d = t.nrows();
    max_abs(&(t * t.transpose() - DMatrix::<f64>::identity(d, d)))
}

fn sgn(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

pub fn eta(j: &Quintuplet) -> Result<f64> {
    let n = j.big_n()? as f64;
    Ok(-sgn(j.j3) * sgn(n + 2.0 * j.j3 - 2.0 * j.j2 + 2.0))
}

/// Racah parameters of the `p`-th block of the t edge.
pub fn t_block_params(j: &Quintuplet, big_n: usize, p: usize) -> RacahParams {
    let nn = (big_n - p) as f64;
    RacahParams::new(-2.0 * j.j2 - 1.0, -2.0 * j.j1 - 1.0, big_n - p, nn - 2.0 * j.j2 + 2.0 * j.j3 + 1.0)
}

fn block_tables(j: &Quintuplet, big_n: usize) -> Result<Vec<Vec<Vec<f64>>>> {
    (0..=big_n)
        .map(|p| {
            racah_p_table(&t_block_params(j, big_n, p))
                .map_err(|e| Error::Domain(format!("block p={p} at J = {j}: {e}")))
        })
        .collect()
}

fn pow_sign(x: f64, k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        x
    }
}

/// Closed-form `T_{e,x}(J)` for a base edge, before sign normalization.
pub fn closed_form_raw(kind: EdgeKind, j: &Quintuplet) -> Result<DMatrix<f64>> {
    let big_n = j.big_n()?;
    let d = dimension(big_n);
    let b = basis(big_n);
    let mut t = DMatrix::zeros(d, d);
    match kind {
        EdgeKind::S => {
            for &(n, p) in &b {
                t[(position(n, p, big_n), position(p, n, big_n))] = 1.0;
            }
        }
        EdgeKind::I => {
            for &(n, p) in &b {
                let k = position(n, p, big_n);
                t[(k, k)] = pow_sign(-1.0, p);
            }
        }
        EdgeKind::T => {
            let e = eta(j)?;
            let tabs = block_tables(j, big_n)?;
            for &(n, p) in &b {
                for m in 0..=big_n - p {
                    t[(position(n, p, big_n), position(m, p, big_n))] =
                        pow_sign(-1.0, m) * pow_sign(e, p) * tabs[p][n][m];
                }
            }
        }
        EdgeKind::R => {
            let e = eta(j)?;
            let tabs = block_tables(j, big_n)?;
            for &(n, p) in &b {
                let m = p;
                for q in 0..=big_n - m {
                    t[(position(n, p, big_n), position(m, q, big_n))] = pow_sign(-e, m) * tabs[p][n][q];
                }
            }
        }
    }
    Ok(t)
}

pub fn closed_form_edge(kind: EdgeKind, j: &Quintuplet) -> Result<TransitionMatrix> {
    Ok(TransitionMatrix {
        matrix: canonical_sign(closed_form_raw(kind, j)?),
        from: GroupElement::identity(),
        to: kind.element(),
        j: *j,
    })
}

/// `pi_g^J` on the ten contiguous generators.
pub fn pi_g(g: &GroupElement, j: &Quintuplet) -> Result<BTreeMap<Label, DMatrix<f64>>> {
    let gj = act_on_quintuplet(g, j);
    let rep = build_rep_unchecked(&gj)?.rep;
    Ok(Label::contiguous().iter().map(|&x| (x, rep.reconstruct(act_on_label(g, x)))).collect())
}

/// Max over the ten generators of `|T pi_g(X) - pi_h(X) T|`.
pub fn intertwining_residual(t: &DMatrix<f64>, h: &GroupElement, g: &GroupElement, j: &Quintuplet) -> Result<f64> {
    let a = pi_g(g, j)?;
    let b = pi_g(h, j)?;
    Ok(Label::contiguous().iter().map(|x| max_abs(&(t * &a[x] - &b[x] * t))).fold(0.0, f64::max))
}

/// Solves `T pi_g(X) = pi_h(X) T` for all contiguous `X` through the
/// smallest right singular vector of the stacked system.
pub fn intertwiner_oracle(h: &GroupElement, g: &GroupElement, j: &Quintuplet) -> Result<TransitionMatrix> {
    let a = pi_g(g, j)?;
    let b = pi_g(h, j)?;
    let d = a.values().next().map(|m| m.nrows()).unwrap_or(0);
    let dd = d * d;
    let eye = DMatrix::<f64>::identity(d, d);
    let mut big = DMatrix::<f64>::zeros(10 * dd, dd);
    for (k, x) in Label::contiguous().iter().enumerate() {
        // vec(T A) - vec(B T) = (A^T (x) I - I (x) B) vec(T), column-major vec
        let blk = a[x].transpose().kronecker(&eye) - eye.kronecker(&b[x]);
        big.view_mut((k * dd, 0), (dd, dd)).copy_from(&blk);
    }
    let svd = big.svd(false, true);
    let vt = svd.v_t.ok_or_else(|| Error::NotEquivalent("SVD did not return V".into()))?;
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&x, &y| svd.singular_values[x].total_cmp(&svd.singular_values[y]));
    let smallest = svd.singular_values[order[0]];
    let next = order.get(1).map(|&k| svd.singular_values[k]).unwrap_or(f64::INFINITY);
    if smallest > NULL_GAP || next < NULL_GAP {
        return Err(Error::NotEquivalent(format!(
            "kernel is not one-dimensional (smallest singular values {smallest:e}, {next:e})"
        )));
    }
    let v: Vec<f64> = vt.row(order[0]).iter().copied().collect();
    let mut t = DMatrix::from_column_slice(d, d, &v);
    let scale = (d as f64).sqrt() / t.norm();
    t *= scale;
    Ok(TransitionMatrix { matrix: canonical_sign(t), from: h.clone(), to: g.clone(), j: *j })
}

/// Result of chaining edge matrices along a word.
#[derive(Clone, Debug)]
pub struct Chain {
    pub matrix: DMatrix<f64>,
    /// Edges where the closed form failed and the oracle was used instead.
    pub fallbacks: Vec<String>,
}

/// `T_{e,w}(J)` for a word `w = x1 ... xk` over s, t, i, r:
/// `T_{e,xk}(J) T_{e,x(k-1)}(xk J) ... T_{e,x1}(x2 ... xk J)`.
pub fn chain(word: &str, j: &Quintuplet) -> Result<Chain> {
    let big_n = j.big_n()?;
    let d = dimension(big_n);
    let mut t = DMatrix::<f64>::identity(d, d);
    let mut cur = *j;
    let mut fallbacks = Vec::new();
    for c in word.chars().rev() {
        if c == 'e' {
            continue;
        }
        let kind = EdgeKind::from_letter(c)?;
        let e = match closed_form_raw(kind, &cur) {
            Ok(m) => m,
            Err(Error::Domain(msg)) => {
                fallbacks.push(format!("{c} at {cur}: {msg}"));
                intertwiner_oracle(&GroupElement::identity(), &kind.element(), &cur)?.matrix
            }
            Err(e) => return Err(e),
        };
        t *= e;
        cur = act_on_quintuplet(&kind.element(), &cur);
    }
    Ok(Chain { matrix: t, fallbacks })
}

/// `T_{h,g}(J) ~ T_{e, g h^{-1}}(hJ)`.
pub fn transition(h: &GroupElement, g: &GroupElement, j: &Quintuplet) -> Result<TransitionMatrix> {
    let x = g.mul(&h.inverse()).canonical();
    let hj = act_on_quintuplet(h, j);
    let m = chain(&x.word, &hj)?.matrix;
    Ok(TransitionMatrix { matrix: canonical_sign(m), from: h.clone(), to: g.clone(), j: *j })
}

/// Product of the edge transitions along consecutive adjacent vertices.
pub fn compose_path(path: &[GroupElement], j: &Quintuplet) -> Result<TransitionMatrix> {
    let big_n = j.big_n()?;
    let d = dimension(big_n);
    let Some(first) = path.first() else {
        return Ok(TransitionMatrix {
            matrix: DMatrix::identity(d, d),
            from: GroupElement::identity(),
            to: GroupElement::identity(),
            j: *j,
        });
    };
    let graph = Graph::build();
    let mut t = DMatrix::<f64>::identity(d, d);
    for pair in path.windows(2) {
        let (u, v) = (vertex_of(&pair[0]), vertex_of(&pair[1]));
        if !graph.adjacent(&u, &v) {
            return Err(Error::Path(format!("{u} and {v} are not adjacent")));
        }
        t *= transition(&pair[0], &pair[1], j)?.matrix;
    }
    Ok(TransitionMatrix { matrix: canonical_sign(t), from: first.clone(), to: path.last().unwrap().clone(), j: *j })
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleResidual {
    pub name: &'static str,
    pub residual: f64,
}

fn q(word: &str, j: &Quintuplet) -> Result<Quintuplet> {
    Ok(act_on_quintuplet(&GroupElement::from_word(word)?, j))
}

/// Triangle (t^3), pentagon (r^5) and six-product certificates, each
/// measured as the distance to the identity up to sign.
pub fn cycle_certificates(j: &Quintuplet) -> Result<Vec<CycleResidual>> {
    let big_n = j.big_n()?;
    let d = dimension(big_n);
    let eye = DMatrix::<f64>::identity(d, d);
    let tt = |w: &str| -> Result<DMatrix<f64>> { closed_form_raw(EdgeKind::T, &q(w, j)?) };
    let p = closed_form_raw(EdgeKind::S, j)?;

    let triangle = tt("")? * tt("t")? * tt("tt")?;
    let pentagon = chain("rrrrr", j)?.matrix;

    let u = "ststts";
    let uj = q(u, j)?;
    let ttu = |w: &str| -> Result<DMatrix<f64>> { closed_form_raw(EdgeKind::T, &q(w, &uj)?) };
    let t_u = &p * tt("s")? * tt("ts")? * &p * tt("stts")? * &p;
    let six = &p * tt("s")? * tt("ts")? * &p * tt("stts")? * ttu("s")? * ttu("ts")? * &p * ttu("stts")? * &p;
    let t_u_chain = chain(u, j)?.matrix;
    let t_u_at_uj = chain(u, &uj)?.matrix;

    Ok(vec![
        CycleResidual { name: "triangle t^3", residual: align_residual(&eye, &triangle) },
        CycleResidual { name: "pentagon r^5", residual: align_residual(&eye, &pentagon) },
        CycleResidual { name: "six-product", residual: align_residual(&eye, &six) },
        CycleResidual { name: "u-factorization", residual: align_residual(&t_u_chain, &t_u) },
        CycleResidual { name: "u^2 = e", residual: align_residual(&eye, &(t_u_chain * t_u_at_uj)) },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sign_flips() {
        let m = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        assert_eq!(canonical_sign(m)[(0, 1)], 1.0);
    }

    #[test]
    fn align_ignores_global_sign() {
        let m = DMatrix::from_row_slice(2, 2, &[0.6, -0.8, 0.8, 0.6]);
        assert_eq!(align_residual(&m, &(-&m)), 0.0);
    }
}
