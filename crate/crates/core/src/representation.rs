// SPDX-License-Identifier: MIT

//! Finite-dimensional real symmetric irreducible representations of sR(4)
//! on the triangular basis `|n,p>`, `n + p <= N`.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::{Label, RepHandle};
use crate::error::{Error, Result};
use crate::racah::SINGULAR_EPS;

/// Tolerance for integrality of N and for the ordering constraints.
pub const INTEGRALITY_TOL: f64 = 1e-9;
/// Square-root arguments above `-SQRT_SLACK` are clamped to zero.
const SQRT_SLACK: f64 = 1e-10;

/// The labels `(j1, j2, j3, j4, j0)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quintuplet {
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
    pub j4: f64,
    pub j0: f64,
}

impl Quintuplet {
    pub fn new(j1: f64, j2: f64, j3: f64, j4: f64, j0: f64) -> Self {
        Quintuplet { j1, j2, j3, j4, j0 }
    }

    pub fn from_array(a: [f64; 5]) -> Self {
        Quintuplet::new(a[0], a[1], a[2], a[3], a[4])
    }

    pub fn to_array(self) -> [f64; 5] {
        [self.j1, self.j2, self.j3, self.j4, self.j0]
    }

    /// `j1 + j2 - j3 + j4 + j0` as a real number.
    pub fn n_real(&self) -> f64 {
        self.j1 + self.j2 - self.j3 + self.j4 + self.j0
    }

    /// N rounded to an integer when it is a positive integer.
    pub fn big_n(&self) -> Result<usize> {
        let x = self.n_real();
        let r = x.round();
        if (x - r).abs() > INTEGRALITY_TOL {
            return Err(Error::Rejected(vec![format!("N = {x} is not an integer")]));
        }
        if r < 1.0 {
            return Err(Error::Rejected(vec![format!("N = {r} is not positive")]));
        }
        Ok(r as usize)
    }

    /// Central values `mu = j(j+1)` in the order mu1, mu2, mu3, mu4, mu0.
    pub fn mu(&self) -> [f64; 5] {
        self.to_array().map(mu)
    }

    pub fn max_abs_diff(&self, o: &Quintuplet) -> f64 {
        self.to_array().iter().zip(o.to_array()).fold(0.0f64, |a, (x, y)| a.max((x - y).abs()))
    }
}

impl fmt::Display for Quintuplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {}, {})", self.j1, self.j2, self.j3, self.j4, self.j0)
    }
}

pub fn mu(j: f64) -> f64 {
    j * (j + 1.0)
}

fn sgn(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Checks the canonical constraints and returns N.
pub fn validate(j: &Quintuplet) -> Result<usize> {
    let tol = INTEGRALITY_TOL;
    let mut bad = Vec::new();
    for (name, v) in [("j1", j.j1), ("j2", j.j2), ("j3", j.j3), ("j4", j.j4), ("j0", j.j0)] {
        if !v.is_finite() {
            bad.push(format!("{name} is not finite"));
        } else if v < -tol {
            bad.push(format!("{name} = {v} is negative"));
        }
    }
    if j.j1 < j.j2 - tol {
        bad.push(format!("j1 = {} < j2 = {}", j.j1, j.j2));
    }
    if j.j2 < j.j4 - tol {
        bad.push(format!("j2 = {} < j4 = {}", j.j2, j.j4));
    }
    if j.j0 < j.j4 - tol {
        bad.push(format!("j0 = {} < j4 = {}", j.j0, j.j4));
    }
    let lower = j.j1 + j.j2 + j.j0 - j.j4;
    let upper = j.j1 + j.j2 + j.j0 + j.j4;
    if j.j3 < lower - tol {
        bad.push(format!("j3 = {} violates the lower bound j1+j2+j0-j4 = {lower}", j.j3));
    }
    if j.j3 > upper + tol {
        bad.push(format!("j3 = {} violates the upper bound j1+j2+j0+j4 = {upper}", j.j3));
    }
    match j.big_n() {
        Ok(_) => {}
        Err(Error::Rejected(v)) => bad.extend(v),
        Err(e) => return Err(e),
    }
    if bad.is_empty() {
        j.big_n()
    } else {
        Err(Error::Rejected(bad))
    }
}

pub fn dimension(big_n: usize) -> usize {
    (big_n + 1) * (big_n + 2) / 2
}

/// Lexicographic basis `(n, p)`.
pub fn basis(big_n: usize) -> Vec<(usize, usize)> {
    (0..=big_n).flat_map(|n| (0..=big_n - n).map(move |p| (n, p))).collect()
}

/// Position of `(n, p)` in the lexicographic basis.
pub fn position(n: usize, p: usize, big_n: usize) -> usize {
    n * (big_n + 1) - n * (n.saturating_sub(1)) / 2 + p
}

pub fn in_domain(n: i64, p: i64, big_n: usize) -> bool {
    n >= 0 && p >= 0 && n + p <= big_n as i64
}

/// `prod (z - c_k) / (2z(2z-1))`, cancelling a vanishing denominator factor
/// against a matching root. Fails when no root matches.
pub fn q_reduced(z: f64, roots: [f64; 4]) -> Result<f64> {
    let mut roots: Vec<f64> = roots.to_vec();
    let mut val = 1.0;
    for r0 in [0.0, 0.5] {
        if (z - r0).abs() < SINGULAR_EPS {
            let k = roots
                .iter()
                .position(|c| (c - r0).abs() < SINGULAR_EPS)
                .ok_or_else(|| Error::Singular(format!("Q denominator vanishes at z = {z}")))?;
            roots.remove(k);
            val *= 0.5;
        } else {
            val /= 2.0 * (z - r0);
        }
    }
    Ok(roots.iter().fold(val, |v, c| v * (z - c)))
}

/// `Q_p(z)` with `j_p = p + a123`.
pub fn q_p(j: &Quintuplet, a123: f64, p: i64, z: f64) -> Result<f64> {
    let jp = p as f64 + a123;
    q_reduced(z, [j.j1 - j.j2, -j.j1 - j.j2 - 1.0, j.j3 - jp, j.j3 + jp + 1.0])
}

/// `Q^_n(z)` with `j_n = n + a12`.
pub fn q_hat_n(j: &Quintuplet, a12: f64, n: i64, z: f64) -> Result<f64> {
    let jn = n as f64 + a12;
    q_reduced(z, [j.j0 - j.j4, -j.j0 - j.j4 - 1.0, j.j3 - jn, j.j3 + jn + 1.0])
}

/// Generic tridiagonal data for arbitrary shifts `a12`, `a123`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenericCoeffs {
    /// `psi^{+0}_{n,p} psi^{-0}_{n,p}`
    pub psi_product: f64,
    pub psi00: f64,
    /// `rho^{0+}_{n,p} rho^{0-}_{n,p}`
    pub rho_product: f64,
    pub rho00: f64,
}

pub fn generic_coeffs(j: &Quintuplet, a12: f64, a123: f64, n: i64, p: i64) -> Result<GenericCoeffs> {
    let jn = n as f64 + a12;
    let jp = p as f64 + a123;
    let psi_product = q_p(j, a123, p, jn)? * q_p(j, a123, p, -jn)?;
    let psi00 = -q_p(j, a123, p, jn + 1.0)? - q_p(j, a123, p, -jn)? + (j.j2 - j.j3 + 1.0) * (j.j2 - j.j3);
    let rho_product = q_hat_n(j, a12, n, jp)? * q_hat_n(j, a12, n, -jp)?;
    let rho00 = -q_hat_n(j, a12, n, jp + 1.0)? - q_hat_n(j, a12, n, -jp)? + (j.j3 - j.j4 - 1.0) * (j.j3 - j.j4);
    Ok(GenericCoeffs { psi_product, psi00, rho_product, rho00 })
}

/// The diagonal of `C23` written through the central values instead of `Q`.
pub fn psi00_from_mu(j: &Quintuplet, a12: f64, a123: f64, n: i64, p: i64) -> Result<f64> {
    let [m1, m2, m3, _, _] = j.mu();
    let mn = mu(n as f64 + a12);
    let mp = mu(p as f64 + a123);
    if mn.abs() < SINGULAR_EPS {
        return Err(Error::Singular(format!("mu_n vanishes at n = {n}")));
    }
    Ok((mn + m2 - m1) * (mp - m3 - mn) / (2.0 * mn) + m2 + m3)
}

// num/den, with an exactly vanishing numerator giving 0 whatever den is.
fn removable(num: f64, den: f64) -> Option<f64> {
    if num == 0.0 {
        Some(0.0)
    } else if den.abs() < SINGULAR_EPS {
        None
    } else {
        Some(num / den)
    }
}

#[derive(Clone, Debug)]
struct Grid {
    side: usize,
    v: Vec<f64>,
}

impl Grid {
    fn new(side: usize) -> Self {
        Grid { side, v: vec![0.0; side * side] }
    }
    fn get(&self, n: i64, p: i64) -> f64 {
        if n < 0 || p < 0 || n as usize >= self.side || p as usize >= self.side {
            0.0
        } else {
            self.v[n as usize * self.side + p as usize]
        }
    }
    fn set(&mut self, n: usize, p: usize, x: f64) {
        self.v[n * self.side + p] = x;
    }
}

/// Every matrix-entry function of the symmetric representation, tabulated.
/// Out-of-range arguments return 0.
#[derive(Clone, Debug)]
pub struct CoeffBundle {
    pub j: Quintuplet,
    pub big_n: usize,
    psi: Grid,
    rho: Grid,
    phi_d: Grid,
    phi_a: Grid,
    phi_h: Grid,
    phi_v: Grid,
    psi00: Grid,
    rho00: Grid,
    phi00: Grid,
    phi00_first: Grid,
    phi00_second: Grid,
    phi_00bar: Grid,
    phi_0bar0: Grid,
}

impl CoeffBundle {
    /// Tabulates the coefficients for any quintuplet with a positive integer
    /// N. Canonical quintuplets and their S5 images are the intended inputs.
    pub fn new(j: &Quintuplet) -> Result<CoeffBundle> {
        let big_n = j.big_n()?;
        let nn = big_n as f64;
        let Quintuplet { j1, j2, j3, j4, j0 } = *j;
        let [m1, m2, _m3, m4, m0] = j.mu();
        let side = big_n + 2;
        let sq = |x: f64, what: &str, n: usize, p: usize| -> Result<f64> {
            if x < -SQRT_SLACK {
                Err(Error::Domain(format!("negative square-root argument {x:e} in {what}({n},{p}) for J = {j}")))
            } else {
                Ok(x.max(0.0).sqrt())
            }
        };
        let ratio = |num: f64, den: f64, what: &str| -> Result<f64> {
            if num == 0.0 {
                return Ok(0.0);
            }
            if den.abs() < SINGULAR_EPS {
                return Err(Error::Singular(format!("{what} denominator vanishes for J = {j}")));
            }
            Ok(num / den)
        };
        let pn = |n: f64| -> Result<f64> {
            ratio(
                n * (2.0 * j1 + 1.0 - n) * (2.0 * j2 + 1.0 - n) * (2.0 * j1 + 2.0 * j2 + 2.0 - n),
                (2.0 * j1 + 2.0 * j2 + 2.0 - 2.0 * n).powi(2)
                    * (2.0 * j1 + 2.0 * j2 + 1.0 - 2.0 * n)
                    * (2.0 * j1 + 2.0 * j2 + 3.0 - 2.0 * n),
                "psi",
            )
        };
        let pp = |p: f64| -> Result<f64> {
            ratio(
                p * (2.0 * j4 + 1.0 - p) * (2.0 * j0 + 1.0 - p) * (2.0 * j4 + 2.0 * j0 + 2.0 - p),
                (2.0 * j0 + 2.0 * j4 + 2.0 - 2.0 * p).powi(2)
                    * (2.0 * j0 + 2.0 * j4 + 1.0 - 2.0 * p)
                    * (2.0 * j0 + 2.0 * j4 + 3.0 - 2.0 * p),
                "rho",
            )
        };
        let mun = |n: f64| (n - j1 - j2 - 1.0) * (n - j1 - j2);
        let mup = |p: f64| (p - j0 - j4 - 1.0) * (p - j0 - j4);
        let inf = |n: i64, p: i64| in_domain(n, p, big_n);

        let mut b = CoeffBundle {
            j: *j,
            big_n,
            psi: Grid::new(side),
            rho: Grid::new(side),
            phi_d: Grid::new(side),
            phi_a: Grid::new(side),
            phi_h: Grid::new(side),
            phi_v: Grid::new(side),
            psi00: Grid::new(side),
            rho00: Grid::new(side),
            phi00: Grid::new(side),
            phi00_first: Grid::new(side),
            phi00_second: Grid::new(side),
            phi_00bar: Grid::new(side),
            phi_0bar0: Grid::new(side),
        };

        for n in 0..side {
            for p in 0..side {
                let (ni, pi) = (n as i64, p as i64);
                let (x, y) = (n as f64, p as f64);
                let k = nn - x - y;
                if inf(ni, pi) && n > 0 {
                    let v = pn(x)?
                        * (k + 2.0 * j3 + 2.0)
                        * (k + 1.0)
                        * (y - x - nn + 2.0 * j1 + 2.0 * j2 + 1.0)
                        * (x - y - nn + 2.0 * j0 + 2.0 * j4);
                    b.psi.set(n, p, sq(v, "psi", n, p)?);
                }
                if inf(ni, pi) && p > 0 {
                    let v = pp(y)?
                        * (k + 2.0 * j3 + 2.0)
                        * (k + 1.0)
                        * (y - x - nn + 2.0 * j1 + 2.0 * j2)
                        * (x - y - nn + 2.0 * j0 + 2.0 * j4 + 1.0);
                    b.rho.set(n, p, sq(v, "rho", n, p)?);
                }
                if inf(ni, pi) && n > 0 && p > 0 {
                    let v = pn(x)? * pp(y)? * (k + 2.0 * j3 + 2.0) * (k + 2.0 * j3 + 3.0) * (k + 1.0) * (k + 2.0);
                    let s =
                        sgn((x - y - 2.0 * j1 - 2.0 * j2 + nn + 2.0 * j3) * (y - x + 2.0 * j1 + 2.0 * j2 - nn + 1.0));
                    b.phi_d.set(n, p, s * sq(v, "phiD", n, p)?);
                }
                if inf(ni - 1, pi) && inf(ni, pi - 1) && n > 0 && p > 0 {
                    let v = pn(x)?
                        * (x - y - 2.0 * j1 - 2.0 * j2 + 2.0 * j3 + nn)
                        * pp(y)?
                        * (y - x - 2.0 * j0 - 2.0 * j4 + 2.0 * j3 + nn)
                        * (y - x - nn + 2.0 * j1 + 2.0 * j2 + 1.0)
                        * (x - y - nn + 2.0 * j0 + 2.0 * j4 + 1.0);
                    let s = sgn(x + y - nn - 2.0 * j3 - 2.0);
                    b.phi_a.set(n, p, s * sq(v, "phiA", n, p)?);
                }
                let psi = b.psi.get(ni, pi);
                if psi != 0.0 {
                    let f = removable(m0 - m4, 2.0 * mup(y))
                        .ok_or_else(|| Error::Singular(format!("phiH at ({n},{p}) for J = {j}")))?;
                    b.phi_h.set(n, p, (0.5 + f) * psi);
                }
                let rho = b.rho.get(ni, pi);
                if rho != 0.0 {
                    let f = removable(m1 - m2, 2.0 * mun(x))
                        .ok_or_else(|| Error::Singular(format!("phiV at ({n},{p}) for J = {j}")))?;
                    b.phi_v.set(n, p, (0.5 + f) * rho);
                }
            }
        }

        let a12 = -j1 - j2 - 1.0;
        let a123 = -j4 - j0 - 1.0;
        for (n, p) in basis(big_n) {
            let g = generic_coeffs(j, a12, a123, n as i64, p as i64)?;
            b.psi00.set(n, p, g.psi00);
            b.rho00.set(n, p, g.rho00);
            let (x, y) = (n as f64, p as f64);
            let first = |s: f64| {
                removable((m1 - m2) * (g.rho00 - m0), 2.0 * mun(x))
                    .map(|f| f + s * (m1 + m2 + m0 - mun(x) + g.rho00) / 2.0)
            };
            let second = |s: f64| {
                removable((m0 - m4) * (g.psi00 - m1), 2.0 * mup(y))
                    .map(|f| f + s * (m1 + m4 + m0 - mup(y) + g.psi00) / 2.0)
            };
            let phi00 = second(1.0)
                .or_else(|| first(1.0))
                .ok_or_else(|| Error::Singular(format!("phi00 at ({n},{p}) for J = {j}")))?;
            b.phi00.set(n, p, phi00);
            b.phi00_first.set(n, p, first(1.0).unwrap_or(f64::NAN));
            b.phi00_second.set(n, p, second(1.0).unwrap_or(f64::NAN));
            b.phi_00bar.set(n, p, first(-1.0).unwrap_or(f64::NAN));
            b.phi_0bar0.set(n, p, second(-1.0).unwrap_or(f64::NAN));
        }
        Ok(b)
    }

    pub fn psi(&self, n: i64, p: i64) -> f64 {
        self.psi.get(n, p)
    }
    pub fn rho(&self, n: i64, p: i64) -> f64 {
        self.rho.get(n, p)
    }
    pub fn phi_d(&self, n: i64, p: i64) -> f64 {
        self.phi_d.get(n, p)
    }
    pub fn phi_a(&self, n: i64, p: i64) -> f64 {
        self.phi_a.get(n, p)
    }
    pub fn phi_h(&self, n: i64, p: i64) -> f64 {
        self.phi_h.get(n, p)
    }
    pub fn phi_v(&self, n: i64, p: i64) -> f64 {
        self.phi_v.get(n, p)
    }
    pub fn phi_h_tilde(&self, n: i64, p: i64) -> f64 {
        self.phi_h.get(n, p) - self.psi.get(n, p)
    }
    pub fn phi_v_tilde(&self, n: i64, p: i64) -> f64 {
        self.phi_v.get(n, p) - self.rho.get(n, p)
    }
    pub fn psi00(&self, n: i64, p: i64) -> f64 {
        self.psi00.get(n, p)
    }
    pub fn rho00(&self, n: i64, p: i64) -> f64 {
        self.rho00.get(n, p)
    }
    pub fn phi00(&self, n: i64, p: i64) -> f64 {
        self.phi00.get(n, p)
    }
    /// The closed form of `phi00` built on `rho00` (NaN where singular).
    pub fn phi00_via_rho(&self, n: i64, p: i64) -> f64 {
        self.phi00_first.get(n, p)
    }
    /// The closed form of `phi00` built on `psi00` (NaN where singular).
    pub fn phi00_via_psi(&self, n: i64, p: i64) -> f64 {
        self.phi00_second.get(n, p)
    }
    pub fn phi_00bar(&self, n: i64, p: i64) -> f64 {
        self.phi_00bar.get(n, p)
    }
    pub fn phi_0bar0(&self, n: i64, p: i64) -> f64 {
        self.phi_0bar0.get(n, p)
    }
    pub fn phi_0bar0bar(&self, n: i64, p: i64) -> f64 {
        if !in_domain(n, p, self.big_n) {
            return 0.0;
        }
        let [_, m2, m3, m4, _] = self.j.mu();
        self.phi00(n, p) - self.rho00(n, p) - self.psi00(n, p) + m2 + m3 + m4
    }

    pub fn mu_n(&self, n: i64) -> f64 {
        let x = n as f64 - self.j.j1 - self.j.j2;
        (x - 1.0) * x
    }

    pub fn mu_p(&self, p: i64) -> f64 {
        let x = p as f64 - self.j.j0 - self.j.j4;
        (x - 1.0) * x
    }
}

/// A built representation together with its coefficient tables.
#[derive(Clone, Debug)]
pub struct Representation {
    pub j: Quintuplet,
    pub big_n: usize,
    pub rep: RepHandle,
    pub coeffs: CoeffBundle,
}

/// Builds the representation for a canonical quintuplet.
pub fn build_rep(j: &Quintuplet) -> Result<Representation> {
    validate(j)?;
    build_rep_unchecked(j)
}

/// Builds the same matrices for any quintuplet with positive integer N
/// (used for the S5 images of a canonical quintuplet).
pub fn build_rep_unchecked(j: &Quintuplet) -> Result<Representation> {
    let c = CoeffBundle::new(j)?;
    let big_n = c.big_n;
    let d = dimension(big_n);
    let mut m12 = DMatrix::zeros(d, d);
    let mut m123 = DMatrix::zeros(d, d);
    let mut m23 = DMatrix::zeros(d, d);
    let mut m34 = DMatrix::zeros(d, d);
    let mut m234 = DMatrix::zeros(d, d);
    for (n, p) in basis(big_n) {
        let k = position(n, p, big_n);
        let (n, p) = (n as i64, p as i64);
        m12[(k, k)] = c.mu_n(n);
        m123[(k, k)] = c.mu_p(p);
        m23[(k, k)] = c.psi00(n, p);
        m34[(k, k)] = c.rho00(n, p);
        m234[(k, k)] = c.phi00(n, p);
        let put = |m: &mut DMatrix<f64>, nn: i64, pp: i64, v: f64| {
            if in_domain(nn, pp, big_n) {
                m[(position(nn as usize, pp as usize, big_n), k)] += v;
            }
        };
        put(&mut m23, n + 1, p, c.psi(n + 1, p));
        put(&mut m23, n - 1, p, c.psi(n, p));
        put(&mut m34, n, p + 1, c.rho(n, p + 1));
        put(&mut m34, n, p - 1, c.rho(n, p));
        put(&mut m234, n + 1, p + 1, c.phi_d(n + 1, p + 1));
        put(&mut m234, n, p + 1, c.phi_v(n, p + 1));
        put(&mut m234, n - 1, p + 1, c.phi_a(n, p + 1));
        put(&mut m234, n + 1, p, c.phi_h(n + 1, p));
        put(&mut m234, n - 1, p, c.phi_h(n, p));
        put(&mut m234, n + 1, p - 1, c.phi_a(n + 1, p));
        put(&mut m234, n, p - 1, c.phi_v(n, p));
        put(&mut m234, n - 1, p - 1, c.phi_d(n, p));
    }
    let muv = j.mu();
    let eye = DMatrix::<f64>::identity(d, d);
    let mut mats = BTreeMap::new();
    for (s, v) in [("1", muv[0]), ("2", muv[1]), ("3", muv[2]), ("4", muv[3]), ("1234", muv[4])] {
        mats.insert(Label::parse(s)?, &eye * v);
    }
    mats.insert(Label::parse("12")?, m12);
    mats.insert(Label::parse("123")?, m123);
    mats.insert(Label::parse("23")?, m23);
    mats.insert(Label::parse("34")?, m34);
    mats.insert(Label::parse("234")?, m234);
    Ok(Representation { j: *j, big_n, rep: RepHandle::new(mats, muv)?, coeffs: c })
}

/// Nondegenerate joint spectrum of (C12, C123) and nonvanishing
/// off-diagonal entries of C23, C34 inside the domain.
pub fn check_irreducible(rep: &RepHandle, big_n: usize) -> bool {
    let d = rep.dim();
    if d != dimension(big_n) {
        return false;
    }
    let c12 = rep.get(Label::parse("12").unwrap()).unwrap();
    let c123 = rep.get(Label::parse("123").unwrap()).unwrap();
    let c23 = rep.get(Label::parse("23").unwrap()).unwrap();
    let c34 = rep.get(Label::parse("34").unwrap()).unwrap();
    for r in 0..d {
        for c in 0..d {
            if r != c && (c12[(r, c)] != 0.0 || c123[(r, c)] != 0.0) {
                return false;
            }
        }
    }
    let pairs: Vec<(f64, f64)> = (0..d).map(|k| (c12[(k, k)], c123[(k, k)])).collect();
    for a in 0..d {
        for b in a + 1..d {
            let sep = (pairs[a].0 - pairs[b].0).abs().max((pairs[a].1 - pairs[b].1).abs());
            if sep <= 1e-9 {
                return false;
            }
        }
    }
    for (n, p) in basis(big_n) {
        let k = position(n, p, big_n);
        if n > 0 && c23[(position(n - 1, p, big_n), k)].abs() <= 1e-12 {
            return false;
        }
        if p > 0 && c34[(position(n, p - 1, big_n), k)].abs() <= 1e-12 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_lexicographic() {
        for big_n in 0..6 {
            for (k, (n, p)) in basis(big_n).into_iter().enumerate() {
                assert_eq!(position(n, p, big_n), k);
            }
            assert_eq!(basis(big_n).len(), dimension(big_n));
        }
    }

    #[test]
    fn validation_examples() {
        assert_eq!(validate(&Quintuplet::new(1.0, 1.0, 2.0, 1.0, 1.0)).unwrap(), 2);
        assert_eq!(validate(&Quintuplet::new(2.0, 2.0, 4.0, 2.0, 2.0)).unwrap(), 4);
        match validate(&Quintuplet::new(2.0, 2.0, 3.0, 2.0, 2.0)) {
            Err(Error::Rejected(v)) => assert!(v.iter().any(|s| s.contains("lower bound"))),
            other => panic!("expected rejection, got {other:?}"),
        }
        assert!(validate(&Quintuplet::new(0.0, 0.0, 0.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn q_cancellation() {
        // z = 0 with a root at 0: (z - 0) cancels 2z
        let v = q_reduced(0.0, [0.0, 1.0, 2.0, 3.0]).unwrap();
        assert!((v - -0.5 * (-2.0) * (-3.0) / (-1.0)).abs() < 1e-15);
        assert!(q_reduced(0.5, [0.0, 1.0, 2.0, 3.0]).is_err());
    }
}
