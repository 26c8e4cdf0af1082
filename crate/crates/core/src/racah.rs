// SPDX-License-Identifier: MIT

//! Racah polynomials with the truncation gamma = -N-1.
//!
//! `r_n(m)` is the terminating 4F3 at unit argument, `P_n(m)` its orthonormal
//! rescaling. Everything is evaluated in f64 with Pochhammer products.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Denominators below this magnitude are treated as structural zeros.
pub const SINGULAR_EPS: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RacahParams {
    pub alpha: f64,
    pub beta: f64,
    pub big_n: usize,
    pub delta: f64,
}

impl RacahParams {
    pub fn new(alpha: f64, beta: f64, big_n: usize, delta: f64) -> Self {
        RacahParams { alpha, beta, big_n, delta }
    }

    fn nf(&self) -> f64 {
        self.big_n as f64
    }
}

/// Rising factorial `(y)_k`.
pub fn poch(y: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (y + i as f64))
}

fn nonzero(den: f64, what: impl FnOnce() -> String) -> Result<f64> {
    if den.abs() < SINGULAR_EPS {
        Err(Error::Singular(what()))
    } else {
        Ok(den)
    }
}

/// Terminating 4F3 with the upper argument `-m` replaced by a real `-x`.
/// The sum stops at `k = n` (and earlier when `x` is a smaller integer).
pub fn racah_r_at(n: usize, x: f64, p: &RacahParams) -> Result<f64> {
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let nf = n as f64;
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..=n {
        let k1 = (k - 1) as f64;
        let num = (-nf + k1) * (nf + a + b + 1.0 + k1) * (-x + k1) * (x - nn + d + k1);
        if num == 0.0 {
            break;
        }
        let den = (a + 1.0 + k1) * (b + d + 1.0 + k1) * (-nn + k1) * k as f64;
        let den = nonzero(den, || format!("vanishing lower Pochhammer factor at k={k} in r_{n}({x})"))?;
        term *= num / den;
        sum += term;
    }
    Ok(sum)
}

/// `r_n(m; alpha, beta, -N-1, delta)` for integer `0 <= n, m <= N`.
pub fn racah_r(n: usize, m: usize, p: &RacahParams) -> Result<f64> {
    if n > p.big_n || m > p.big_n {
        return Err(Error::Domain(format!("index (n={n}, m={m}) outside [0, {}]", p.big_n)));
    }
    racah_r_at(n, m as f64, p)
}

/// `(alpha+1)_n (beta+delta+1)_n (-N)_n r_n(m)`, written without division so
/// that it stays finite (and vanishes) when `n` exceeds `N`.
pub fn racah_r_unnormalized(n: usize, m: usize, p: &RacahParams) -> f64 {
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let (nf, mf) = (n as f64, m as f64);
    let mut sum = 0.0;
    let mut fact = 1.0;
    for k in 0..=n.min(m) {
        if k > 0 {
            fact *= k as f64;
        }
        let kf = k as f64;
        let upper = poch(-nf, k) * poch(nf + a + b + 1.0, k) * poch(-mf, k) * poch(mf - nn + d, k);
        let lower = poch(a + 1.0 + kf, n - k) * poch(b + d + 1.0 + kf, n - k) * poch(-nn + kf, n - k);
        sum += upper / fact * lower;
    }
    sum
}

/// Recurrence (`A`, `C`) and difference (`B`, `D`) coefficients at one index.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecCoeffs {
    pub a: f64,
    pub c: f64,
    pub b: f64,
    pub d: f64,
}

pub fn coeff_a(n: usize, p: &RacahParams) -> Result<f64> {
    if n == p.big_n {
        return Ok(0.0);
    }
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let x = n as f64;
    let den = nonzero((2.0 * x + a + b + 1.0) * (2.0 * x + a + b + 2.0), || format!("A_{n} denominator"))?;
    Ok((x + a + 1.0) * (x + b + d + 1.0) * (x - nn) * (x + a + b + 1.0) / den)
}

pub fn coeff_c(n: usize, p: &RacahParams) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let x = n as f64;
    let den = nonzero((2.0 * x + a + b) * (2.0 * x + a + b + 1.0), || format!("C_{n} denominator"))?;
    Ok(x * (x + a + b + nn + 1.0) * (x + a - d) * (x + b) / den)
}

pub fn coeff_b(m: usize, p: &RacahParams) -> Result<f64> {
    if m == p.big_n {
        return Ok(0.0);
    }
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let x = m as f64;
    let den = nonzero((2.0 * x - nn + d) * (2.0 * x - nn + d + 1.0), || format!("B_{m} denominator"))?;
    Ok((x + a + 1.0) * (x + b + d + 1.0) * (x - nn) * (x - nn + d) / den)
}

pub fn coeff_d(m: usize, p: &RacahParams) -> Result<f64> {
    if m == 0 {
        return Ok(0.0);
    }
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let x = m as f64;
    let den = nonzero((2.0 * x - nn - 1.0 + d) * (2.0 * x - nn + d), || format!("D_{m} denominator"))?;
    Ok(x * (x - nn - 1.0 - a + d) * (x - nn - 1.0 - b) * (x + d) / den)
}

pub fn recurrence_coeffs(idx: usize, p: &RacahParams) -> Result<RecCoeffs> {
    if idx > p.big_n {
        return Err(Error::Domain(format!("index {idx} outside [0, {}]", p.big_n)));
    }
    Ok(RecCoeffs { a: coeff_a(idx, p)?, c: coeff_c(idx, p)?, b: coeff_b(idx, p)?, d: coeff_d(idx, p)? })
}

fn prefactor(p: &RacahParams) -> Result<f64> {
    let nn = p.big_n;
    let num = poch(p.alpha - p.delta + 1.0, nn) * poch(p.beta + 1.0, nn);
    let den = poch(p.alpha + p.beta + 2.0, nn) * poch(-p.delta, nn);
    let den = nonzero(den, || "normalization prefactor denominator".into())?;
    let v = num / den;
    if v <= 0.0 {
        return Err(Error::Domain(format!("normalization prefactor {v:e} is not positive")));
    }
    Ok(v.sqrt())
}

/// Cumulative products `prod_{i<n} A_i / sqrt(A_i C_{i+1})` for n = 0..=upto.
fn n_factors(p: &RacahParams, upto: usize) -> Result<Vec<f64>> {
    let mut out = vec![1.0];
    for i in 0..upto {
        let a = coeff_a(i, p)?;
        let c = coeff_c(i + 1, p)?;
        if a * c <= 0.0 {
            return Err(Error::Domain(format!("A_{i} C_{} = {:e} is not positive", i + 1, a * c)));
        }
        out.push(out[i] * a.signum() * (a / c).sqrt());
    }
    Ok(out)
}

fn m_factors(p: &RacahParams, upto: usize) -> Result<Vec<f64>> {
    let mut out = vec![1.0];
    for j in 0..upto {
        let b = coeff_b(j, p)?;
        let d = coeff_d(j + 1, p)?;
        if b * d <= 0.0 {
            return Err(Error::Domain(format!("B_{j} D_{} = {:e} is not positive", j + 1, b * d)));
        }
        out.push(out[j] * b.signum() * (b / d).sqrt());
    }
    Ok(out)
}

/// Normalized `P_n(m)`.
pub fn racah_p(n: usize, m: usize, p: &RacahParams) -> Result<f64> {
    if n > p.big_n || m > p.big_n {
        return Err(Error::Domain(format!("index (n={n}, m={m}) outside [0, {}]", p.big_n)));
    }
    let f = prefactor(p)?;
    let nf = n_factors(p, n)?;
    let mf = m_factors(p, m)?;
    Ok(f * nf[n] * mf[m] * racah_r(n, m, p)?)
}

/// Full `(N+1) x (N+1)` table of `P_n(m)`, rows indexed by `n`.
pub fn racah_p_table(p: &RacahParams) -> Result<Vec<Vec<f64>>> {
    let nn = p.big_n;
    let f = prefactor(p)?;
    let nf = n_factors(p, nn)?;
    let mf = m_factors(p, nn)?;
    let mut t = vec![vec![0.0; nn + 1]; nn + 1];
    for n in 0..=nn {
        for m in 0..=nn {
            t[n][m] = f * nf[n] * mf[m] * racah_r(n, m, p)?;
        }
    }
    Ok(t)
}

/// True when every positivity condition needed by `racah_p_table` holds.
pub fn is_normalizable(p: &RacahParams) -> bool {
    prefactor(p).is_ok() && n_factors(p, p.big_n).is_ok() && m_factors(p, p.big_n).is_ok()
}

/// One line of an identity report.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityResidual {
    pub name: String,
    pub max_residual: f64,
    /// Largest magnitude among the terms entering the identity.
    pub scale: f64,
    pub evaluated: usize,
    pub skipped: usize,
}

impl IdentityResidual {
    fn new(name: &str) -> Self {
        IdentityResidual { name: name.into(), max_residual: 0.0, scale: 0.0, evaluated: 0, skipped: 0 }
    }

    fn record(&mut self, r: Option<(f64, f64)>) {
        match r {
            Some((res, scale)) => {
                self.evaluated += 1;
                self.max_residual = self.max_residual.max(res.abs());
                self.scale = self.scale.max(scale);
            }
            None => self.skipped += 1,
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.evaluated > 0 && self.max_residual < tol
    }
}

// A linear combination sum c_k r_{n_k}(m_k) under shifted parameters.
// Terms with an exactly zero coefficient drop out; any other term that
// leaves the index range or hits a singular denominator makes the whole
// point not evaluable.
fn combine(terms: &[(f64, i64, i64)], p: &RacahParams) -> Option<(f64, f64)> {
    let mut s = 0.0;
    let mut scale: f64 = 0.0;
    let top = p.big_n as i64;
    for &(c, n, m) in terms {
        if c == 0.0 {
            continue;
        }
        if !c.is_finite() || n < 0 || m < 0 || n > top || m > top {
            return None;
        }
        let v = racah_r(n as usize, m as usize, p).ok()?;
        s += c * v;
        scale = scale.max((c * v).abs());
    }
    Some((s, scale))
}

fn ratio(num: f64, den: f64) -> Option<f64> {
    if den.abs() < SINGULAR_EPS {
        None
    } else {
        Some(num / den)
    }
}

/// Max residuals of the swap, duality, Whipple, recurrence, difference and
/// four contiguous relations over the full `(n, m)` grid.
pub fn racah_identities(p: &RacahParams) -> Vec<IdentityResidual> {
    let names = [
        "swap",
        "duality",
        "whipple",
        "recurrence",
        "difference",
        "contiguous-1",
        "contiguous-2",
        "contiguous-3",
        "contiguous-4",
    ];
    let mut out: Vec<IdentityResidual> = names.iter().map(|s| IdentityResidual::new(s)).collect();
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let big = p.big_n;
    let swapped = RacahParams::new(b + d, a - d, big, d);
    let dual = RacahParams::new(a, d - a - nn - 1.0, big, a + b + nn + 1.0);
    let whip = RacahParams::new(b, a, big, -d);
    let up = RacahParams::new(a, b, big + 1, d + 1.0);
    let down = if big > 0 { Some(RacahParams::new(a, b, big - 1, d - 1.0)) } else { None };

    for n in 0..=big {
        for m in 0..=big {
            let r = match racah_r(n, m, p) {
                Ok(v) => v,
                Err(_) => {
                    out.iter_mut().for_each(|o| o.record(None));
                    continue;
                }
            };
            let (x, y) = (n as f64, m as f64);
            let (ni, mi) = (n as i64, m as i64);

            out[0].record(racah_r(n, m, &swapped).ok().map(|v| (r - v, r.abs().max(v.abs()))));
            out[1].record(racah_r(m, n, &dual).ok().map(|v| (r - v, r.abs().max(v.abs()))));
            out[2].record((|| {
                let num = poch(a - d + 1.0, n) * poch(b + 1.0, n);
                let f = ratio(num, poch(b + d + 1.0, n) * poch(a + 1.0, n))?;
                let v = f * racah_r(n, big - m, &whip).ok()?;
                Some((r - v, r.abs().max(v.abs())))
            })());

            out[3].record((|| {
                let an = coeff_a(n, p).ok()?;
                let cn = coeff_c(n, p).ok()?;
                let lam = y * (y - nn + d);
                let (s, sc) = combine(&[(an, ni + 1, mi), (-(an + cn), ni, mi), (cn, ni - 1, mi)], p)?;
                Some((lam * r - s, sc.max((lam * r).abs())))
            })());
            out[4].record((|| {
                let bm = coeff_b(m, p).ok()?;
                let dm = coeff_d(m, p).ok()?;
                let ev = x * (x + a + b + 1.0);
                let (s, sc) = combine(&[(bm, ni, mi + 1), (-(bm + dm), ni, mi), (dm, ni, mi - 1)], p)?;
                Some((ev * r - s, sc.max((ev * r).abs())))
            })());

            // relation 1: shift (N, delta) -> (N+1, delta+1), three terms in n
            out[5].record((|| {
                let e = (x + 2.0 + b + d) * (x + a + 1.0) * (x + b + d + 1.0) * (x + a + b + 1.0);
                let e = ratio(e, (2.0 * x + a + b + 1.0) * (2.0 * x + a + b + 2.0))?;
                let g = if n == 0 {
                    0.0
                } else {
                    ratio((x - 1.0 + a - d) * x * (x + a - d) * (x + b), (2.0 * x + a + b) * (2.0 * x + a + b + 1.0))?
                };
                let f = -e - g + (d + 1.0) * (b + d + 1.0);
                let lt = (y + 1.0 + d) * (nn - y + 1.0) * (b + d + 1.0) / (nn + 1.0);
                let (s, sc) = combine(&[(e, ni + 1, mi), (f, ni, mi), (g, ni - 1, mi)], &up)?;
                Some((lt * r - s, sc.max((lt * r).abs())))
            })());
            // relation 2: shift (N, delta) -> (N-1, delta-1)
            out[6].record((|| {
                let down = down.as_ref()?;
                let e = (x - nn + 1.0) * (x + a + 1.0) * (x - nn) * (x + a + b + 1.0);
                let e = if e == 0.0 { 0.0 } else { ratio(e, (2.0 * x + a + b + 1.0) * (2.0 * x + a + b + 2.0))? };
                let g = if n == 0 {
                    0.0
                } else {
                    ratio(
                        x * (x + a + b + nn) * (x + a + b + nn + 1.0) * (x + b),
                        (2.0 * x + a + b) * (2.0 * x + a + b + 1.0),
                    )?
                };
                let f = -e - g + nn * (b + nn);
                let lt = nn * ratio((y + b + d) * (nn - y + b), b + d)?;
                let (s, sc) = combine(&[(e, ni + 1, mi), (f, ni, mi), (g, ni - 1, mi)], down)?;
                Some((lt * r - s, sc.max((lt * r).abs())))
            })());
            // relation 3: shift (N+1, delta+1), three terms in m
            out[7].record((|| {
                let h = (y + 2.0 + b + d) * (y + a + 1.0) * (y + b + d + 1.0) * (y - nn + d);
                let h = ratio(h, (2.0 * y - nn + d) * (2.0 * y - nn + d + 1.0))?;
                let j = if m == 0 {
                    0.0
                } else {
                    ratio(
                        (y - nn - b - 2.0) * y * (y - nn - 1.0 - a + d) * (y - nn - 1.0 - b),
                        (2.0 * y - nn - 1.0 + d) * (2.0 * y - nn + d),
                    )?
                };
                let i = -h - j + (a + b + 2.0 + nn) * (b + d + 1.0);
                let mt = (x + 2.0 + a + b + nn) * (nn - x + 1.0) * (b + d + 1.0) / (nn + 1.0);
                let (s, sc) = combine(&[(h, ni, mi + 1), (i, ni, mi), (j, ni, mi - 1)], &up)?;
                Some((mt * r - s, sc.max((mt * r).abs())))
            })());
            // relation 4: shift (N-1, delta-1), three terms in m
            out[8].record((|| {
                let down = down.as_ref()?;
                let h = (nn - y - 1.0) * (y + a + 1.0) * (y - nn) * (y - nn + d);
                let h = if h == 0.0 { 0.0 } else { ratio(h, (2.0 * y - nn + d) * (2.0 * y - nn + d + 1.0))? };
                let j = if m == 0 {
                    0.0
                } else {
                    -ratio(
                        (d + y - 1.0) * y * (y - nn - 1.0 - a + d) * (y + d),
                        (2.0 * y - nn - 1.0 + d) * (2.0 * y - nn + d),
                    )?
                };
                let i = -h - j + (a - d + 1.0) * nn;
                let mt = nn * ratio((x + b + d) * (x + a - d + 1.0), b + d)?;
                let (s, sc) = combine(&[(h, ni, mi + 1), (i, ni, mi), (j, ni, mi - 1)], down)?;
                Some((mt * r - s, sc.max((mt * r).abs())))
            })());
        }
    }
    out
}

/// Residuals of the normalized recurrence, difference and orthogonality
/// relations on a parameter set that passes the positivity conditions.
pub fn normalized_identities(p: &RacahParams) -> Result<Vec<IdentityResidual>> {
    let t = racah_p_table(p)?;
    let big = p.big_n;
    let (a, b, nn, d) = (p.alpha, p.beta, p.nf(), p.delta);
    let at = |n: i64, m: i64| -> f64 {
        if n < 0 || m < 0 || n > big as i64 || m > big as i64 {
            0.0
        } else {
            t[n as usize][m as usize]
        }
    };
    let mut rec = IdentityResidual::new("normalized-recurrence");
    let mut dif = IdentityResidual::new("normalized-difference");
    let mut ort = IdentityResidual::new("orthogonality");
    let sq = |u: f64| u.max(0.0).sqrt();
    for n in 0..=big {
        let an = coeff_a(n, p)?;
        let cn = coeff_c(n, p)?;
        let up = if n < big { sq(an * coeff_c(n + 1, p)?) } else { 0.0 };
        let dn = if n > 0 { sq(coeff_a(n - 1, p)? * cn) } else { 0.0 };
        for m in 0..=big {
            let bm = coeff_b(m, p)?;
            let dm = coeff_d(m, p)?;
            let right = if m < big { sq(bm * coeff_d(m + 1, p)?) } else { 0.0 };
            let left = if m > 0 { sq(coeff_b(m - 1, p)? * dm) } else { 0.0 };
            let (ni, mi) = (n as i64, m as i64);
            let (x, y) = (n as f64, m as f64);
            let v = at(ni, mi);
            let lhs = y * (y - nn + d) * v;
            let rhs = up * at(ni + 1, mi) - (an + cn) * v + dn * at(ni - 1, mi);
            rec.record(Some((lhs - rhs, lhs.abs().max(rhs.abs()))));
            let lhs = x * (x + a + b + 1.0) * v;
            let rhs = right * at(ni, mi + 1) - (bm + dm) * v + left * at(ni, mi - 1);
            dif.record(Some((lhs - rhs, lhs.abs().max(rhs.abs()))));
        }
        for n2 in 0..=big {
            let s: f64 = (0..=big).map(|m| t[n][m] * t[n2][m]).sum();
            let target = if n == n2 { 1.0 } else { 0.0 };
            ort.record(Some((s - target, 1.0)));
        }
    }
    Ok(vec![rec, dif, ort])
}
