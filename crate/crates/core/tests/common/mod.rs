// SPDX-License-Identifier: MIT
#![allow(dead_code)]

use sr4::representation::Quintuplet;

pub fn j_small() -> Quintuplet {
    Quintuplet::new(1.0, 1.0, 2.0, 1.0, 1.0)
}

pub fn j_large() -> Quintuplet {
    Quintuplet::new(2.0, 2.0, 4.0, 2.0, 2.0)
}

pub fn j_half() -> Quintuplet {
    Quintuplet::new(1.5, 1.0, 3.0, 1.0, 1.5)
}

fn rising(y: f64, k: usize) -> f64 {
    let mut r = 1.0;
    for i in 0..k {
        r *= y + i as f64;
    }
    r
}

/// Racah weight in the hypergeometric normalization with gamma = -N-1.
pub fn weight(x: usize, a: f64, b: f64, nn: usize, d: f64) -> f64 {
    let g = -(nn as f64) - 1.0;
    let fact: f64 = (1..=x).map(|i| i as f64).product();
    rising(a + 1.0, x)
        * rising(b + d + 1.0, x)
        * rising(g + 1.0, x)
        * rising(g + d + 1.0, x)
        * rising((g + d + 3.0) / 2.0, x)
        / (rising(-a + g + d + 1.0, x)
            * rising(-b + g + 1.0, x)
            * rising((g + d + 1.0) / 2.0, x)
            * rising(d + 1.0, x)
            * fact)
}

/// `r_n(m)` as the plain sum of hypergeometric terms, each computed from scratch.
pub fn r_direct(n: usize, m: usize, a: f64, b: f64, nn: usize, d: f64) -> f64 {
    let (nf, mf, nnf) = (n as f64, m as f64, nn as f64);
    (0..=n)
        .map(|k| {
            let fact: f64 = (1..=k).map(|i| i as f64).product();
            rising(-nf, k) * rising(nf + a + b + 1.0, k) * rising(-mf, k) * rising(mf - nnf + d, k)
                / (rising(a + 1.0, k) * rising(b + d + 1.0, k) * rising(-nnf, k) * fact)
        })
        .sum()
}

/// `|P_0(m)|` from the weight alone.
pub fn p0_abs(m: usize, a: f64, b: f64, nn: usize, d: f64) -> f64 {
    let total: f64 = (0..=nn).map(|x| weight(x, a, b, nn, d)).sum();
    (weight(m, a, b, nn, d) / total).sqrt()
}

pub fn max_abs_diff(a: &nalgebra::DMatrix<f64>, b: &nalgebra::DMatrix<f64>) -> f64 {
    (a - b).amax()
}
