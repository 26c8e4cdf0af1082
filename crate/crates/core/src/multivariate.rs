// SPDX-License-Identifier: MIT

//! Bivariate Tratnik function `T_{n1,n2}(m1,m2)` and the Griffiths-like
//! function `G_{n1,n2}(m1,m2)`, both built from normalized Racah factors.
//!
//! Tables are `d x d` matrices in the lexicographic `(n1,n2)` / `(m1,m2)`
//! basis, the same layout as the transition matrices they realize.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::algebra::max_abs;
use crate::error::{Error, Result};
use crate::racah::{poch, racah_p_table, racah_r_unnormalized, RacahParams};
use crate::representation::{basis, dimension, in_domain, position, CoeffBundle, Quintuplet};
use crate::symmetry::{act_on_quintuplet, GroupElement};
use crate::transitions::{align_residual, orthogonality_residual, t_block_params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    Tratnik,
    Griffiths,
}

#[derive(Clone, Debug)]
pub struct BivariateTable {
    pub kind: Kind,
    pub j: Quintuplet,
    pub big_n: usize,
    /// Row `(n1,n2)`, column `(m1,m2)`.
    pub values: DMatrix<f64>,
}

impl BivariateTable {
    pub fn get(&self, n1: usize, n2: usize, m1: usize, m2: usize) -> f64 {
        let nn = self.big_n;
        self.values[(position(n1, n2, nn), position(m1, m2, nn))]
    }

    /// `(n1, n2, m1, m2, value)` in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, f64)> {
        let b = basis(self.big_n);
        let mut out = Vec::with_capacity(b.len() * b.len());
        for &(n1, n2) in &b {
            for &(m1, m2) in &b {
                out.push((n1, n2, m1, m2, self.get(n1, n2, m1, m2)));
            }
        }
        out
    }
}

fn swap14(j: &Quintuplet) -> Quintuplet {
    Quintuplet::new(j.j4, j.j2, j.j3, j.j1, j.j0)
}

fn second_params(j: &Quintuplet, big_n: usize, m1: usize) -> RacahParams {
    let nn = (big_n - m1) as f64;
    RacahParams::new(-2.0 * j.j0 - 1.0, -2.0 * j.j4 - 1.0, big_n - m1, nn - 2.0 * j.j0 - 2.0 * j.j1 - 1.0)
}

fn tables(params: impl Iterator<Item = RacahParams>, what: &str, j: &Quintuplet) -> Result<Vec<Vec<Vec<f64>>>> {
    params
        .enumerate()
        .map(|(k, p)| racah_p_table(&p).map_err(|e| Error::Domain(format!("{what} factor {k} at J = {j}: {e}"))))
        .collect()
}

/// The three families of normalized Racah tables entering both functions.
struct Factors {
    big_n: usize,
    // first[n2][n1][m1]
    first: Vec<Vec<Vec<f64>>>,
    // second[m1][n2][m2]
    second: Vec<Vec<Vec<f64>>>,
    // third[m2][m1][a]
    third: Vec<Vec<Vec<f64>>>,
}

impl Factors {
    fn new(j: &Quintuplet, with_third: bool) -> Result<Factors> {
        let big_n = j.big_n()?;
        let first = tables((0..=big_n).map(|k| t_block_params(j, big_n, k)), "first", j)?;
        let second = tables((0..=big_n).map(|k| second_params(j, big_n, k)), "second", j)?;
        let third = if with_third {
            let js = swap14(j);
            tables((0..=big_n).map(|k| t_block_params(&js, big_n, k)), "third", j)?
        } else {
            Vec::new()
        };
        Ok(Factors { big_n, first, second, third })
    }

    fn tratnik(&self, n1: usize, n2: usize, m1: usize, m2: usize) -> f64 {
        if n2 + m1 > self.big_n {
            return 0.0;
        }
        self.first[n2][n1][m1] * self.second[m1][n2][m2]
    }

    fn griffiths(&self, n1: usize, n2: usize, m1: usize, m2: usize) -> f64 {
        let top = (self.big_n - n2).min(self.big_n - m2);
        (0..=top).map(|a| sign(a + m2) * self.first[n2][n1][a] * self.second[a][n2][m2] * self.third[m2][m1][a]).sum()
    }

    fn griffiths_factored(&self, n1: usize, n2: usize, m1: usize, m2: usize) -> f64 {
        let mut s = 0.0;
        for a in 0..=self.big_n - m2 {
            s += sign(a + m2) * self.tratnik(n1, n2, a, m2) * self.third[m2][m1][a];
        }
        s
    }
}

fn sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_indices(n1: usize, n2: usize, m1: usize, m2: usize, big_n: usize) -> Result<()> {
    if n1 + n2 > big_n || m1 + m2 > big_n {
        return Err(Error::Domain(format!("indices ({n1},{n2};{m1},{m2}) outside the triangle N = {big_n}")));
    }
    Ok(())
}

pub fn tratnik(n1: usize, n2: usize, m1: usize, m2: usize, j: &Quintuplet) -> Result<f64> {
    check_indices(n1, n2, m1, m2, j.big_n()?)?;
    Ok(Factors::new(j, false)?.tratnik(n1, n2, m1, m2))
}

/// Direct a-sum of three normalized Racah factors.
pub fn griffiths(n1: usize, n2: usize, m1: usize, m2: usize, j: &Quintuplet) -> Result<f64> {
    check_indices(n1, n2, m1, m2, j.big_n()?)?;
    Ok(Factors::new(j, true)?.griffiths(n1, n2, m1, m2))
}

/// The same value through `sum_a (-1)^(a+m2) T_{n1,n2}(a,m2) P_{m1}(a)`.
pub fn griffiths_factored(n1: usize, n2: usize, m1: usize, m2: usize, j: &Quintuplet) -> Result<f64> {
    check_indices(n1, n2, m1, m2, j.big_n()?)?;
    Ok(Factors::new(j, true)?.griffiths_factored(n1, n2, m1, m2))
}

fn fill(big_n: usize, f: impl Fn(usize, usize, usize, usize) -> f64) -> DMatrix<f64> {
    let d = dimension(big_n);
    let b = basis(big_n);
    let mut t = DMatrix::zeros(d, d);
    for &(n1, n2) in &b {
        for &(m1, m2) in &b {
            t[(position(n1, n2, big_n), position(m1, m2, big_n))] = f(n1, n2, m1, m2);
        }
    }
    t
}

pub fn tratnik_table(j: &Quintuplet) -> Result<BivariateTable> {
    let f = Factors::new(j, false)?;
    let values = fill(f.big_n, |a, b, c, d| f.tratnik(a, b, c, d));
    Ok(BivariateTable { kind: Kind::Tratnik, j: *j, big_n: f.big_n, values })
}

pub fn griffiths_table(j: &Quintuplet) -> Result<BivariateTable> {
    let f = Factors::new(j, true)?;
    let values = fill(f.big_n, |a, b, c, d| f.griffiths(a, b, c, d));
    Ok(BivariateTable { kind: Kind::Griffiths, j: *j, big_n: f.big_n, values })
}

/// Max difference between the direct and the factored Griffiths sums.
pub fn griffiths_factorization_residual(j: &Quintuplet) -> Result<f64> {
    let f = Factors::new(j, true)?;
    let a = fill(f.big_n, |a, b, c, d| f.griffiths(a, b, c, d));
    let b = fill(f.big_n, |a, b, c, d| f.griffiths_factored(a, b, c, d));
    Ok(max_abs(&(a - b)))
}

/// Row (`M M^t = I`) and column (`M^t M = I`) unitarity residuals.
pub fn unitarity(t: &BivariateTable) -> (f64, f64) {
    (orthogonality_residual(&t.values), orthogonality_residual(&t.values.transpose()))
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    /// `max |G(J)[n,m] - G(J')[m,n]|` with `J'` the j1 <-> j4 swap.
    pub literal: f64,
    /// The same with the sign `(-1)^(n2+m2)` on the right.
    pub signed: f64,
}

pub fn griffiths_symmetry(j: &Quintuplet) -> Result<SymmetryReport> {
    let g = griffiths_table(j)?;
    let h = griffiths_table(&swap14(j))?;
    let (mut literal, mut signed): (f64, f64) = (0.0, 0.0);
    for (n1, n2, m1, m2, v) in g.entries() {
        let w = h.get(m1, m2, n1, n2);
        literal = literal.max((v - w).abs());
        signed = signed.max((v - sign(n2 + m2) * w).abs());
    }
    Ok(SymmetryReport { literal, signed })
}

/// Distance up to sign between a table and the chained transition matrix
/// (`rr` for Tratnik, `ttrr` for Griffiths).
pub fn transition_residual(t: &BivariateTable) -> Result<f64> {
    let word = match t.kind {
        Kind::Tratnik => "rr",
        Kind::Griffiths => "ttrr",
    };
    let m = crate::transitions::chain(word, &t.j)?.matrix;
    Ok(align_residual(&t.values, &m))
}

// ---------------------------------------------------------------------------
// Weights of the R2 orthogonality.

/// `Gamma(z)` for `z` a positive integer or half-integer, as a finite product.
pub fn gamma_half(z: f64) -> Result<f64> {
    let twice = 2.0 * z;
    if z <= 0.0 || (twice - twice.round()).abs() > 1e-9 {
        return Err(Error::Domain(format!("gamma argument {z} is not a positive (half-)integer")));
    }
    let t = twice.round() as i64;
    if t % 2 == 0 {
        Ok(poch(1.0, (t / 2 - 1) as usize))
    } else {
        Ok(std::f64::consts::PI.sqrt() * poch(0.5, ((t - 1) / 2) as usize))
    }
}

fn factorial(k: i64) -> Result<f64> {
    if k < 0 {
        return Err(Error::Domain(format!("factorial of {k}")));
    }
    Ok(poch(1.0, k as usize))
}

/// Which transcription of the weights to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightForm {
    /// The closed-form products taken literally.
    Literal,
    /// `W -> -W` and `K -> K / (k1+k2+2j1+2j0-N+1)`.
    Corrected,
}

pub fn weight_w(x1: usize, x2: usize, j: &Quintuplet, form: WeightForm) -> Result<f64> {
    let big_n = j.big_n()?;
    if x1 > x2 || x2 > big_n {
        return Err(Error::Domain(format!("(x1, x2) = ({x1}, {x2}) outside 0 <= x1 <= x2 <= {big_n}")));
    }
    let Quintuplet { j1, j2, j3, j4, j0 } = *j;
    let (x1f, x2f, nf) = (x1 as f64, x2 as f64, big_n as f64);
    let g = gamma_half;
    let w = (2.0 * x1f - 2.0 * j1 - 2.0 * j2 - 1.0) * (2.0 * x2f - 2.0 * j1 - 2.0 * j2 + 2.0 * j3 + 1.0)
        / (factorial(x1 as i64)? * factorial((x2 - x1) as i64)? * factorial((big_n - x2) as i64)?)
        * g(2.0 * j1 + 1.0 - x1f)?
        * g(2.0 * j1 + 2.0 * j2 + 1.0 - x1f - x2f)?
        * g(x2f - x1f + 2.0 * j3 + 2.0)?
        / (g(2.0 * j2 + 1.0 - x1f)? * g(2.0 * j1 + 2.0 * j2 + 2.0 - x1f)?)
        * g(x1f + x2f - 2.0 * j1 - 2.0 * j2 + 2.0 * j3 + 1.0)?
        * g(x2f - nf + 2.0 * j0 + 1.0)?
        / (g(nf + x2f - 2.0 * j1 - 2.0 * j2 + 2.0 * j3 + 2.0)? * g(x2f - nf + 2.0 * j4 + 1.0)?);
    Ok(match form {
        WeightForm::Literal => w,
        WeightForm::Corrected => -w,
    })
}

pub fn weight_k(k1: usize, k2: usize, j: &Quintuplet, form: WeightForm) -> Result<f64> {
    let big_n = j.big_n()?;
    if k1 + k2 > big_n {
        return Err(Error::Domain(format!("(k1, k2) = ({k1}, {k2}) outside k1 + k2 <= {big_n}")));
    }
    let Quintuplet { j1, j2, j3, j4, j0 } = *j;
    let (a, b, nf) = (k1 as f64, k2 as f64, big_n as f64);
    let g = gamma_half;
    let k = factorial((big_n - k1 - k2) as i64)? / (factorial(k1 as i64)? * factorial(k2 as i64)?)
        * (2.0 * a - 2.0 * j2 + 2.0 * j3 + 1.0)
        * (2.0 * a + 2.0 * b - 2.0 * j2 + 2.0 * j3 - 2.0 * j4 + 1.0)
        * g(a - 2.0 * j2 + 2.0 * j3 + 1.0)?
        * g(2.0 * j2 + 1.0 - a)?
        * g(2.0 * j4 + 1.0 - b)?
        / (g(a + 2.0 * j3 + 2.0)? * g(a + b + 2.0 * j1 - nf + 1.0)? * g(a + b + 2.0 * j0 - nf + 1.0)?)
        * g(2.0 * a + b - 2.0 * j2 + 2.0 * j3 - 2.0 * j4 + 1.0)?
        / (g(2.0 * a + b - 2.0 * j2 + 2.0 * j3 + 2.0)? * g(a + b + 2.0 * j1 + 2.0 * j0 - nf + 1.0)?);
    Ok(match form {
        WeightForm::Literal => k,
        WeightForm::Corrected => k / (a + b + 2.0 * j1 + 2.0 * j0 - nf + 1.0),
    })
}

/// `(W(x1,x2), K(k1,k2))`.
pub fn tratnik_weight(
    x1: usize,
    x2: usize,
    k1: usize,
    k2: usize,
    j: &Quintuplet,
    form: WeightForm,
) -> Result<(f64, f64)> {
    Ok((weight_w(x1, x2, j, form)?, weight_k(k1, k2, j, form)?))
}

/// `R2(k1,k2; x1,x2)` as a product of two Racah polynomials with cleared
/// denominators.
pub fn r2(k1: usize, k2: usize, x1: usize, x2: usize, j: &Quintuplet) -> Result<f64> {
    let big_n = j.big_n()?;
    if k1 + k2 > big_n || x1 > x2 || x2 > big_n {
        return Err(Error::Domain(format!("R2({k1},{k2}; {x1},{x2}) outside its domain for N = {big_n}")));
    }
    let Quintuplet { j1, j2, j3, j4, .. } = *j;
    let x2f = x2 as f64;
    let p1 = RacahParams::new(-2.0 * j2 - 1.0, 2.0 * j3 + 1.0, x2, x2f - 2.0 * j1 - 2.0 * j2 - 1.0);
    let first = racah_r_unnormalized(k1, x1, &p1);
    if x2 < k1 {
        return Ok(0.0);
    }
    let k1f = k1 as f64;
    let p2 = RacahParams::new(
        2.0 * k1f - 2.0 * j2 + 2.0 * j3 + 1.0,
        -2.0 * j4 - 1.0,
        big_n - k1,
        k1f + big_n as f64 - 2.0 * j1 - 2.0 * j2 + 2.0 * j3 + 1.0,
    );
    Ok(first * racah_r_unnormalized(k2, x2 - k1, &p2))
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub form: WeightForm,
    /// Number of `(x1,x2)` with `W < 0` plus `(k1,k2)` with `K < 0`.
    pub negative: usize,
    /// Max distance up to sign between the Tratnik table and
    /// `(-1)^(N+x1-x2) sqrt(WK) R2`; infinite when some `WK < 0`.
    pub factorization: f64,
    /// Max relative residual of `sum W R2(k) R2(k') = delta / K(k)`.
    pub orthogonality: f64,
}

pub fn weight_report(j: &Quintuplet, form: WeightForm) -> Result<WeightReport> {
    let big_n = j.big_n()?;
    let t = tratnik_table(j)?;
    let nodes: Vec<(usize, usize)> = (0..=big_n).flat_map(|x2| (0..=x2).map(move |x1| (x1, x2))).collect();
    let ks = basis(big_n);
    let ws: Vec<f64> = nodes.iter().map(|&(x1, x2)| weight_w(x1, x2, j, form)).collect::<Result<_>>()?;
    let kv: Vec<f64> = ks.iter().map(|&(k1, k2)| weight_k(k1, k2, j, form)).collect::<Result<_>>()?;
    let negative = ws.iter().chain(kv.iter()).filter(|&&x| x < 0.0).count();
    let mut r = vec![vec![0.0; nodes.len()]; ks.len()];
    for (a, &(k1, k2)) in ks.iter().enumerate() {
        for (b, &(x1, x2)) in nodes.iter().enumerate() {
            r[a][b] = r2(k1, k2, x1, x2, j)?;
        }
    }

    let mut factorization = 0.0_f64;
    let mut built = DMatrix::zeros(t.values.nrows(), t.values.ncols());
    'outer: for (b, &(x1, x2)) in nodes.iter().enumerate() {
        for (a, &(k1, k2)) in ks.iter().enumerate() {
            let wk = ws[b] * kv[a];
            if wk < 0.0 {
                factorization = f64::INFINITY;
                break 'outer;
            }
            let s = sign(big_n + x1 - x2);
            built[(position(x1, big_n - x2, big_n), position(k1, big_n - k1 - k2, big_n))] = s * wk.sqrt() * r[a][b];
        }
    }
    if factorization.is_finite() {
        factorization = align_residual(&t.values, &built);
    }

    let mut orthogonality = 0.0_f64;
    for a in 0..ks.len() {
        for c in 0..ks.len() {
            let s: f64 = (0..nodes.len()).map(|b| ws[b] * r[a][b] * r[c][b]).sum();
            let target = if a == c { 1.0 / kv[a] } else { 0.0 };
            orthogonality = orthogonality.max((s - target).abs() / (1.0 / kv[a]).abs());
        }
    }
    Ok(WeightReport { form, negative, factorization, orthogonality })
}

/// For every `(k1,k2)` with `k1+k2 < N`, least-squares fits `R2` on the
/// `(x1,x2)` triangle by a polynomial of total degree `k1+k2` in
/// `l1 = x1(x1-2j1-2j2-1)` and `l2 = x2(x2-2j1-2j2+2j3+1)`; returns the
/// largest relative misfit. Degree `N` is skipped since it interpolates.
pub fn r2_polynomiality(j: &Quintuplet) -> Result<f64> {
    let big_n = j.big_n()?;
    let Quintuplet { j1, j2, j3, .. } = *j;
    let nodes: Vec<(usize, usize)> = (0..=big_n).flat_map(|x2| (0..=x2).map(move |x1| (x1, x2))).collect();
    let l1 = |x: f64| x * (x - 2.0 * j1 - 2.0 * j2 - 1.0);
    let l2 = |x: f64| x * (x - 2.0 * j1 - 2.0 * j2 + 2.0 * j3 + 1.0);
    let mut worst = 0.0_f64;
    for (k1, k2) in basis(big_n) {
        let deg = k1 + k2;
        if deg >= big_n {
            continue;
        }
        let mons: Vec<(i32, i32)> =
            (0..=deg as i32).flat_map(|a| (0..=(deg as i32 - a)).map(move |b| (a, b))).collect();
        let a = DMatrix::from_fn(nodes.len(), mons.len(), |r, c| {
            let (x1, x2) = nodes[r];
            l1(x1 as f64).powi(mons[c].0) * l2(x2 as f64).powi(mons[c].1)
        });
        let y = nodes.iter().map(|&(x1, x2)| r2(k1, k2, x1, x2, j)).collect::<Result<Vec<f64>>>()?;
        let y = nalgebra::DVector::from_vec(y);
        let coef = a
            .clone()
            .svd(true, true)
            .solve(&y, 1e-12)
            .map_err(|e| Error::Singular(format!("least squares for R2({k1},{k2}): {e}")))?;
        let scale = y.amax().max(1.0);
        worst = worst.max((&a * coef - &y).amax() / scale);
    }
    Ok(worst)
}

// ---------------------------------------------------------------------------
// Recurrence and difference relations.

#[derive(Clone, Debug, Serialize)]
pub struct StencilResidual {
    pub name: &'static str,
    pub residual: f64,
}

type Coef<'a> = &'a dyn Fn(i64, i64) -> f64;

struct Stencil<'a> {
    v: Coef<'a>,
    h: Coef<'a>,
    d: Coef<'a>,
    a: Coef<'a>,
    z: Coef<'a>,
}

impl Stencil<'_> {
    // Nine-point operator at (i,k) on f; f vanishes off the triangle.
    fn apply(&self, f: &dyn Fn(i64, i64) -> f64, i: i64, k: i64) -> f64 {
        (self.v)(i, k + 1) * f(i, k + 1)
            + (self.v)(i, k) * f(i, k - 1)
            + (self.h)(i + 1, k) * f(i + 1, k)
            + (self.h)(i, k) * f(i - 1, k)
            + (self.d)(i + 1, k + 1) * f(i + 1, k + 1)
            + (self.d)(i, k) * f(i - 1, k - 1)
            + (self.a)(i + 1, k) * f(i + 1, k - 1)
            + (self.a)(i, k + 1) * f(i - 1, k + 1)
            + (self.z)(i, k) * f(i, k)
    }
}

fn bundle_at(word: &str, j: &Quintuplet) -> Result<CoeffBundle> {
    CoeffBundle::new(&act_on_quintuplet(&GroupElement::from_word(word)?, j))
}

fn lam(x: f64) -> f64 {
    (x - 1.0) * x
}

// Row or column of a table as a function on the triangle.
fn row_fn(t: &DMatrix<f64>, big_n: usize, n: usize) -> impl Fn(i64, i64) -> f64 + '_ {
    move |a, b| if in_domain(a, b, big_n) { t[(n, position(a as usize, b as usize, big_n))] } else { 0.0 }
}

fn col_fn(t: &DMatrix<f64>, big_n: usize, m: usize) -> impl Fn(i64, i64) -> f64 + '_ {
    move |a, b| if in_domain(a, b, big_n) { t[(position(a as usize, b as usize, big_n), m)] } else { 0.0 }
}

/// Largest `|r(fixed, (x,y))|` over the fixed index and the triangle, with
/// `r` given the row (or column) function and the point.
fn sweep(
    big_n: usize,
    mut r: impl FnMut(usize, usize, &dyn Fn(i64, i64) -> f64, i64, i64) -> f64,
    t: &DMatrix<f64>,
    rows: bool,
) -> f64 {
    let b = basis(big_n);
    let mut worst = 0.0_f64;
    for (fixed, &(f1, f2)) in b.iter().enumerate() {
        for &(x, y) in &b {
            let v = if rows {
                let f = row_fn(t, big_n, fixed);
                r(f1, f2, &f, x as i64, y as i64)
            } else {
                let f = col_fn(t, big_n, fixed);
                r(f1, f2, &f, x as i64, y as i64)
            };
            worst = worst.max(v.abs());
        }
    }
    worst
}

/// The two difference (rows fixed) and two recurrence (columns fixed)
/// relations of the Tratnik table.
pub fn tratnik_identities(j: &Quintuplet) -> Result<Vec<StencilResidual>> {
    let t = tratnik_table(j)?;
    let big_n = t.big_n;
    let tv = &t.values;
    let b = CoeffBundle::new(j)?;
    let b2 = bundle_at("rr", j)?;
    let Quintuplet { j1, j2, j3, j4, j0 } = *j;

    let phi2 = Stencil {
        v: &|x, y| b2.phi_v(x, y),
        h: &|x, y| b2.phi_h(x, y),
        d: &|x, y| b2.phi_d(x, y),
        a: &|x, y| b2.phi_a(x, y),
        z: &|x, y| b2.phi00(x, y),
    };
    let phi = Stencil {
        v: &|x, y| b.phi_v(x, y),
        h: &|x, y| b.phi_h(x, y),
        d: &|x, y| b.phi_d(x, y),
        a: &|x, y| b.phi_a(x, y),
        z: &|x, y| b.phi00(x, y),
    };

    let diff1 = sweep(big_n, |n1, _, f, m1, m2| phi2.apply(f, m1, m2) - lam(n1 as f64 - j1 - j2) * f(m1, m2), tv, true);
    let diff2 = sweep(
        big_n,
        |_, n2, f, m1, m2| {
            b2.rho(m1, m2 + 1) * f(m1, m2 + 1) + b2.rho(m1, m2) * f(m1, m2 - 1) + b2.rho00(m1, m2) * f(m1, m2)
                - lam(n2 as f64 - j0 - j4) * f(m1, m2)
        },
        tv,
        true,
    );
    let rec1 = sweep(
        big_n,
        |m1, _, g, n1, n2| {
            let e = lam(m1 as f64 - j2 + j3 + 1.0);
            b.psi00(n1, n2) * g(n1, n2) + b.psi(n1 + 1, n2) * g(n1 + 1, n2) + b.psi(n1, n2) * g(n1 - 1, n2)
                - e * g(n1, n2)
        },
        tv,
        false,
    );
    let rec2 = sweep(big_n, |_, m2, g, n1, n2| phi.apply(g, n1, n2) - lam(m2 as f64 - j0 - j1) * g(n1, n2), tv, false);
    Ok(vec![
        StencilResidual { name: "difference phi(r^2 J)", residual: diff1 },
        StencilResidual { name: "difference rho(r^2 J)", residual: diff2 },
        StencilResidual { name: "recurrence psi(J)", residual: rec1 },
        StencilResidual { name: "recurrence phi(J)", residual: rec2 },
    ])
}

/// The four nine-point relations of the Griffiths table.
pub fn griffiths_identities(j: &Quintuplet) -> Result<Vec<StencilResidual>> {
    let g = griffiths_table(j)?;
    let big_n = g.big_n;
    let gv = &g.values;
    let b = CoeffBundle::new(j)?;
    let bt = bundle_at("ttrr", j)?;
    let Quintuplet { j1, j2, j4, j0, .. } = *j;

    let s1 = Stencil {
        v: &|x, y| bt.phi_v_tilde(x, y),
        h: &|x, y| bt.phi_h(x, y),
        d: &|x, y| bt.phi_d(x, y),
        a: &|x, y| bt.phi_a(x, y),
        z: &|x, y| bt.phi_00bar(x, y),
    };
    let s2 = Stencil {
        v: &|x, y| bt.phi_v(x, y),
        h: &|x, y| bt.phi_h_tilde(x, y),
        d: &|x, y| bt.phi_d(x, y),
        a: &|x, y| bt.phi_a(x, y),
        z: &|x, y| bt.phi_0bar0(x, y),
    };
    let s3 = Stencil {
        v: &|x, y| b.phi_v_tilde(x, y),
        h: &|x, y| b.phi_h_tilde(x, y),
        d: &|x, y| b.phi_d(x, y),
        a: &|x, y| b.phi_a(x, y),
        z: &|x, y| b.phi_0bar0bar(x, y),
    };
    let s4 = Stencil {
        v: &|x, y| b.phi_v(x, y),
        h: &|x, y| b.phi_h(x, y),
        d: &|x, y| b.phi_d(x, y),
        a: &|x, y| b.phi_a(x, y),
        z: &|x, y| b.phi00(x, y),
    };

    let diff1 = sweep(big_n, |n1, _, f, m1, m2| -s1.apply(f, m1, m2) - lam(n1 as f64 - j1 - j2) * f(m1, m2), gv, true);
    let diff2 = sweep(big_n, |_, n2, f, m1, m2| -s2.apply(f, m1, m2) - lam(n2 as f64 - j0 - j4) * f(m1, m2), gv, true);
    let rec1 = sweep(big_n, |m1, _, f, n1, n2| s3.apply(f, n1, n2) - lam(m1 as f64 - j2 - j4) * f(n1, n2), gv, false);
    let rec2 = sweep(big_n, |_, m2, f, n1, n2| s4.apply(f, n1, n2) - lam(m2 as f64 - j0 - j1) * f(n1, n2), gv, false);
    Ok(vec![
        StencilResidual { name: "difference phi-00bar(t^2 r^2 J)", residual: diff1 },
        StencilResidual { name: "difference phi-0bar0(t^2 r^2 J)", residual: diff2 },
        StencilResidual { name: "recurrence phi-0bar0bar(J)", residual: rec1 },
        StencilResidual { name: "recurrence phi(J)", residual: rec2 },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_half_values() {
        assert_eq!(gamma_half(1.0).unwrap(), 1.0);
        assert_eq!(gamma_half(5.0).unwrap(), 24.0);
        let pi = std::f64::consts::PI;
        assert!((gamma_half(0.5).unwrap() - pi.sqrt()).abs() < 1e-15);
        assert!((gamma_half(2.5).unwrap() - 0.75 * pi.sqrt()).abs() < 1e-14);
        assert!(gamma_half(0.0).is_err());
        assert!(gamma_half(1.3).is_err());
    }

    #[test]
    fn theta_zeros() {
        let j = Quintuplet::new(1.0, 1.0, 2.0, 1.0, 1.0);
        let t = tratnik_table(&j).unwrap();
        assert_eq!(t.get(0, 2, 1, 0), 0.0);
        assert_eq!(t.get(0, 1, 2, 0), 0.0);
    }

    #[test]
    fn r2_degree_zero_is_one() {
        let j = Quintuplet::new(1.0, 1.0, 2.0, 1.0, 1.0);
        for x2 in 0..=2 {
            for x1 in 0..=x2 {
                assert_eq!(r2(0, 0, x1, x2, &j).unwrap(), 1.0);
            }
        }
    }
}
