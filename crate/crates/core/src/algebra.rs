// SPDX-License-Identifier: MIT

//! Generators `C_I` of R(4), the contiguous basis, defining relations and
//! Casimir elements evaluated on concrete matrices.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonempty subset of {1,2,3,4}; bit `i-1` marks index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label(u8);

impl Label {
    pub const FULL: Label = Label(0b1111);

    pub fn from_bits(bits: u8) -> Option<Label> {
        if bits == 0 || bits > 0b1111 {
            None
        } else {
            Some(Label(bits))
        }
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn new(indices: &[u8]) -> Result<Label> {
        let mut bits = 0u8;
        for &i in indices {
            if !(1..=4).contains(&i) {
                return Err(Error::Parse(format!("generator index {i} not in 1..4")));
            }
            bits |= 1 << (i - 1);
        }
        Label::from_bits(bits).ok_or_else(|| Error::Parse("empty generator label".into()))
    }

    /// Parses "12", "C123", "1234".
    pub fn parse(s: &str) -> Result<Label> {
        let s = s.trim().trim_start_matches('C');
        let idx: Vec<u8> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse(format!("bad label {s:?}"))))
            .collect::<Result<_>>()?;
        Label::new(&idx)
    }

    pub fn indices(self) -> Vec<u8> {
        (1..=4).filter(|i| self.0 & (1 << (i - 1)) != 0).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_central(self) -> bool {
        self.len() == 1 || self == Label::FULL
    }

    pub fn union(self, other: Label) -> Label {
        Label(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: Label) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Label) -> bool {
        self.0 & !other.0 == 0
    }

    /// Generators commute when their index sets are disjoint or nested.
    pub fn commutes_with(self, other: Label) -> bool {
        self.is_disjoint(other) || self.is_subset(other) || other.is_subset(self)
    }

    /// All 15 labels in the order: singletons, pairs, triples, full set.
    pub fn all() -> Vec<Label> {
        let mut v: Vec<Label> = (1u8..16).map(Label).collect();
        v.sort_by_key(|l| (l.len(), l.indices()));
        v
    }

    /// The ten generators of the contiguous basis.
    pub fn contiguous() -> [Label; 10] {
        [
            Label(0b0001),
            Label(0b0010),
            Label(0b0100),
            Label(0b1000),
            Label::FULL,
            Label(0b0011),
            Label(0b0110),
            Label(0b1100),
            Label(0b0111),
            Label(0b1110),
        ]
    }

    /// The five non-central contiguous generators.
    pub fn contiguous_noncentral() -> [Label; 5] {
        [Label(0b0011), Label(0b0110), Label(0b1100), Label(0b0111), Label(0b1110)]
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

fn lab(s: &str) -> Label {
    Label::parse(s).expect("static label")
}

/// Linear combination of contiguous generators (central ones included).
pub type ContiguousExpansion = Vec<(f64, Label)>;

/// Expresses any label through the contiguous basis.
pub fn expansion(label: Label) -> ContiguousExpansion {
    let e = |terms: &[(f64, &str)]| terms.iter().map(|&(c, s)| (c, lab(s))).collect();
    match label.bits() {
        // C13
        0b0101 => e(&[(-1.0, "23"), (1.0, "123"), (-1.0, "12"), (1.0, "1"), (1.0, "2"), (1.0, "3")]),
        // C24
        0b1010 => e(&[(1.0, "234"), (-1.0, "23"), (-1.0, "34"), (1.0, "2"), (1.0, "3"), (1.0, "4")]),
        // C14
        0b1001 => e(&[(1.0, "1234"), (-1.0, "123"), (-1.0, "234"), (1.0, "23"), (1.0, "1"), (1.0, "4")]),
        // C124
        0b1011 => e(&[(1.0, "1234"), (-1.0, "123"), (-1.0, "34"), (1.0, "12"), (1.0, "3"), (1.0, "4")]),
        // C134
        0b1101 => e(&[(1.0, "1234"), (-1.0, "234"), (-1.0, "12"), (1.0, "34"), (1.0, "1"), (1.0, "2")]),
        _ => vec![(1.0, label)],
    }
}

/// Matrices for the ten contiguous generators plus the central values.
#[derive(Clone, Debug)]
pub struct RepHandle {
    dim: usize,
    mats: BTreeMap<Label, DMatrix<f64>>,
    /// mu1, mu2, mu3, mu4, mu0
    pub mu: [f64; 5],
}

impl RepHandle {
    pub fn new(mats: BTreeMap<Label, DMatrix<f64>>, mu: [f64; 5]) -> Result<RepHandle> {
        let dim =
            mats.values().next().map(|m| m.nrows()).ok_or_else(|| Error::Structural("no matrices supplied".into()))?;
        for l in Label::contiguous() {
            let m = mats.get(&l).ok_or_else(|| Error::Structural(format!("missing contiguous generator {l}")))?;
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::Structural(format!("{l} is {}x{}, expected {dim}x{dim}", m.nrows(), m.ncols())));
            }
        }
        Ok(RepHandle { dim, mats, mu })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Stored matrix of a contiguous generator.
    pub fn get(&self, l: Label) -> Option<&DMatrix<f64>> {
        self.mats.get(&l)
    }

    pub fn get_mut(&mut self, l: Label) -> Option<&mut DMatrix<f64>> {
        self.mats.get_mut(&l)
    }

    pub fn contiguous_matrices(&self) -> &BTreeMap<Label, DMatrix<f64>> {
        &self.mats
    }

    /// Matrix of any generator through the contiguous expansion.
    pub fn reconstruct(&self, l: Label) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(self.dim, self.dim);
        for (c, t) in expansion(l) {
            out += &self.mats[&t] * c;
        }
        out
    }

    /// Same, allowing the empty label (zero by convention).
    pub fn reconstruct_bits(&self, bits: u8) -> DMatrix<f64> {
        match Label::from_bits(bits) {
            Some(l) => self.reconstruct(l),
            None => DMatrix::zeros(self.dim, self.dim),
        }
    }
}

/// Largest absolute entry.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |a, &x| a.max(x.abs()))
}

pub fn comm(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

pub fn anticomm(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b + b * a
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedResidual {
    pub group: &'static str,
    pub name: String,
    pub residual: f64,
}

/// All 24 relations of R(4) written in the contiguous basis.
pub fn relation_residuals(rep: &RepHandle) -> Vec<NamedResidual> {
    let g = |s: &str| rep.mats[&lab(s)].clone();
    let (c1, c2, c3, c4, c0) = (g("1"), g("2"), g("3"), g("4"), g("1234"));
    let (c12, c23, c34, c123, c234) = (g("12"), g("23"), g("34"), g("123"), g("234"));
    let mut out = Vec::with_capacity(24);
    let mut push = |group: &'static str, name: String, m: DMatrix<f64>| {
        out.push(NamedResidual { group, name, residual: max_abs(&m) })
    };

    for (a, b) in [("12", "34"), ("12", "123"), ("23", "123"), ("23", "234"), ("34", "234")] {
        push("commutation", format!("[C{a},C{b}]"), comm(&g(a), &g(b)));
    }

    // 1/2 [X,[X,Y]] = X^2 + {X,Y} - S X - L
    let r3 = |x: &DMatrix<f64>, y: &DMatrix<f64>, s: &DMatrix<f64>, l: DMatrix<f64>| {
        comm(x, &comm(x, y)) * 0.5 - (x * x + anticomm(x, y) - s * x - l)
    };
    let s = &c1 + &c2 + &c3 + &c123;
    push("r3", "C12,C23".into(), r3(&c12, &c23, &s, (&c1 - &c2) * (&c3 - &c123)));
    push("r3", "C23,C12".into(), r3(&c23, &c12, &s, (&c1 - &c123) * (&c3 - &c2)));
    let s = &c2 + &c3 + &c4 + &c234;
    push("r3", "C23,C34".into(), r3(&c23, &c34, &s, (&c2 - &c3) * (&c4 - &c234)));
    push("r3", "C34,C23".into(), r3(&c34, &c23, &s, (&c2 - &c234) * (&c4 - &c3)));
    let s = &c1 + &c2 + &c34 + &c0;
    push("r3", "C12,C234".into(), r3(&c12, &c234, &s, (&c1 - &c2) * (&c34 - &c0)));
    push("r3", "C234,C12".into(), r3(&c234, &c12, &s, (&c1 - &c0) * (&c34 - &c2)));
    let s = &c12 + &c3 + &c4 + &c0;
    push("r3", "C34,C123".into(), r3(&c34, &c123, &s, (&c12 - &c0) * (&c4 - &c3)));
    push("r3", "C123,C34".into(), r3(&c123, &c34, &s, (&c12 - &c3) * (&c4 - &c0)));
    let s = &c1 + &c23 + &c4 + &c0;
    push("r3", "C234,C123".into(), r3(&c234, &c123, &s, (&c1 - &c0) * (&c4 - &c23)));
    push("r3", "C123,C234".into(), r3(&c123, &c234, &s, (&c1 - &c23) * (&c4 - &c0)));

    push(
        "r4-cubic",
        "commutator sum".into(),
        comm(&c12, &c23) + comm(&c23, &c34) - comm(&c123, &c34) - comm(&c12, &c234) + comm(&c123, &c234),
    );
    push(
        "r4-cubic",
        "[C34,[C12,C23]]".into(),
        comm(&c34, &comm(&c12, &c23)) * 0.5
            - (&c12 * (&c23 + &c34 - &c234 - &c3) + &c23 * (&c34 - &c0) - &c34 * &c2 + &c123 * (&c234 - &c34 - &c2)
                - &c234 * &c3
                + (&c2 + &c3) * &c0
                + &c2 * &c3),
    );
    push(
        "r4-cubic",
        "[C23,[C123,C34]]".into(),
        comm(&c23, &comm(&c123, &c34)) * 0.5
            - (&c12 * (-&c23 + &c234 - &c4)
                + &c23 * (&c123 - &c4)
                + &c34 * (&c23 - &c1)
                + &c123 * (&c34 - &c234 - &c3)
                - &c234 * &c3
                + (&c1 + &c3) * &c4
                + &c1 * &c3),
    );
    push(
        "r4-cubic",
        "[C234,[C23,C12]]".into(),
        comm(&c234, &comm(&c23, &c12)) * 0.5
            - (&c12 * (&c234 - &c4) + &c23 * (&c12 - &c34 + &c234 - &c1) - &c34 * &c1 + &c123 * (&c34 - &c234 - &c2)
                - &c234 * &c2
                + (&c1 + &c2) * &c4
                + &c1 * &c2),
    );
    push(
        "r4-cubic",
        "[C234,[C123,C34]]".into(),
        comm(&c234, &comm(&c123, &c34)) * 0.5
            - (&c12 * (-&c23 + &c234 + &c4)
                + &c34 * (&c23 - &c123 - &c234 + &c0)
                + &c23 * &c0
                + &c123 * (-&c234 + &c2)
                + &c234 * &c4
                - (&c2 + &c0) * &c4
                - &c2 * &c0),
    );

    let k1 = comm(&c12, &c23);
    let k2 = comm(&c23, &c34);
    let k3 = comm(&c12, &c234);
    let k4 = comm(&c34, &c123);
    push(
        "r4-quartic",
        "1".into(),
        (&c12 + &c234 - &c2 - &c0) * &k1
            + (&c12 - &c2 + &c1) * &k2
            + (&c123 - &c23 - &c12 + &c2) * &k3
            + (&c12 - &c2 - &c1) * &k4,
    );
    push(
        "r4-quartic",
        "2".into(),
        (-&c234 + &c34 + &c2) * &k1 + (&c12 - &c1 + &c2) * &k2 + (&c23 - &c2 - &c3) * &k3 + &c2 * &k4 * 2.0,
    );
    push(
        "r4-quartic",
        "3".into(),
        (-&c34 - &c3 + &c4) * &k1 + (&c123 - &c12 - &c3) * &k2 + &c3 * &k3 * 2.0 + (&c23 - &c2 - &c3) * &k4,
    );
    push(
        "r4-quartic",
        "4".into(),
        (-&c34 + &c3 - &c4) * &k1
            + (-&c123 - &c34 + &c3 + &c0) * &k2
            + (&c34 - &c4 - &c3) * &k3
            + (&c234 - &c23 - &c34 + &c3) * &k4,
    );
    out
}

/// Casimir element `w_{I,J,K}` for disjoint nonempty `I, J, K`.
pub fn casimir_w(rep: &RepHandle, i: Label, j: Label, k: Label) -> Result<DMatrix<f64>> {
    if !(i.is_disjoint(j) && j.is_disjoint(k) && i.is_disjoint(k)) {
        return Err(Error::Structural(format!("{i}, {j}, {k} are not disjoint")));
    }
    let ij = rep.reconstruct(i.union(j));
    let jk = rep.reconstruct(j.union(k));
    let ijk = rep.reconstruct(i.union(j).union(k));
    let (ci, cj, ck) = (rep.reconstruct(i), rep.reconstruct(j), rep.reconstruct(k));
    let kk = comm(&ij, &jk);
    let ij2 = &ij * &ij;
    let jk2 = &jk * &jk;
    let a = anticomm(&ij, &jk);
    let w = &kk * &kk * 0.25 - anticomm(&ij2, &jk) * 0.5 - anticomm(&ij, &jk2) * 0.5
        + &ij2
        + &jk2
        + &a
        + (&ci + &cj + &ck + &ijk) * (&a - &ij * 2.0 - &jk * 2.0) * 0.5
        - (&ci - &ijk) * (&cj - &ck) * &ij
        - (&ci - &cj) * (&ijk - &ck) * &jk
        + (&ci * &ck - &ijk * &cj) * (&ijk - &ci + &cj - &ck)
        + (&ci + &ck) * (&ijk + &cj);
    Ok(w)
}

#[derive(Clone, Debug, Serialize)]
pub struct CasimirReport {
    /// w123, w124, w134, w234, x1234
    pub norms: [f64; 5],
    /// Pairwise differences between the three expressions of x1234.
    pub x_consistency: f64,
}

pub fn casimir_values(rep: &RepHandle) -> CasimirReport {
    let w = |a: &str, b: &str, c: &str| casimir_w(rep, lab(a), lab(b), lab(c)).expect("disjoint");
    let ws = [w("1", "2", "3"), w("1", "2", "4"), w("1", "3", "4"), w("2", "3", "4")];
    let x1 = (w("12", "3", "4") - &ws[2] - &ws[3]) * 0.5;
    let x2 = (w("1", "23", "4") - &ws[1] - &ws[2]) * 0.5;
    let x3 = (w("1", "2", "34") - &ws[0] - &ws[1]) * 0.5;
    CasimirReport {
        norms: [max_abs(&ws[0]), max_abs(&ws[1]), max_abs(&ws[2]), max_abs(&ws[3]), max_abs(&x1)],
        x_consistency: max_abs(&(&x1 - &x2)).max(max_abs(&(&x1 - &x3))),
    }
}

/// Residual of `C_I = 1/2 sum_{i != j} C_ij - (|I|-2) sum_i C_i` over all
/// labels with at least three indices.
pub fn subset_sum_residual(rep: &RepHandle) -> f64 {
    let mut worst: f64 = 0.0;
    for l in Label::all().into_iter().filter(|l| l.len() >= 3) {
        let idx = l.indices();
        let mut rhs = DMatrix::zeros(rep.dim, rep.dim);
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                rhs += rep.reconstruct(Label::new(&[i, j]).unwrap());
            }
            rhs -= rep.reconstruct(Label::new(&[i]).unwrap()) * (idx.len() as f64 - 2.0);
        }
        worst = worst.max(max_abs(&(rep.reconstruct(l) - rhs)));
    }
    worst
}
