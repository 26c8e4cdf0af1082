// SPDX-License-Identifier: MIT

mod common;

use common::{p0_abs, r_direct, weight};
use proptest::prelude::*;
use sr4::racah::*;

fn params_ok() -> Vec<RacahParams> {
    vec![
        RacahParams::new(-3.0, -3.0, 2, 5.0),
        RacahParams::new(-5.0, -5.0, 4, 9.0),
        RacahParams::new(-3.0, -4.0, 2, 7.0),
        RacahParams::new(-3.42, -4.99, 3, 5.47),
        RacahParams::new(-6.19, -8.92, 5, 7.98),
        RacahParams::new(-4.11, -4.17, 8, 0.49),
    ]
}

#[test]
fn matches_direct_hypergeometric_sum() {
    for p in params_ok() {
        for n in 0..=p.big_n {
            for m in 0..=p.big_n {
                let want = r_direct(n, m, p.alpha, p.beta, p.big_n, p.delta);
                let got = racah_r(n, m, &p).unwrap();
                assert!((got - want).abs() < 1e-9 * want.abs().max(1.0), "{n} {m}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn degree_zero_is_weight() {
    for p in params_ok() {
        for m in 0..=p.big_n {
            let got = racah_p(0, m, &p).unwrap();
            let want = p0_abs(m, p.alpha, p.beta, p.big_n, p.delta);
            assert!((got.abs() - want).abs() < 1e-12, "m={m}: {got} vs {want}");
        }
    }
}

#[test]
fn raw_polynomials_orthogonal_under_weight() {
    for p in params_ok() {
        let nn = p.big_n;
        for a in 0..=nn {
            for b in 0..a {
                let ip = |u: usize, v: usize| -> f64 {
                    (0..=nn)
                        .map(|x| {
                            weight(x, p.alpha, p.beta, nn, p.delta)
                                * racah_r(u, x, &p).unwrap()
                                * racah_r(v, x, &p).unwrap()
                        })
                        .sum()
                };
                let rel = ip(a, b) / (ip(a, a) * ip(b, b)).sqrt();
                assert!(rel.abs() < 1e-10, "({a},{b}) -> {rel}");
            }
        }
    }
}

#[test]
fn table_is_orthogonal() {
    for p in params_ok() {
        let t = racah_p_table(&p).unwrap();
        let d = p.big_n + 1;
        for a in 0..d {
            for b in 0..d {
                let s: f64 = (0..d).map(|m| t[a][m] * t[b][m]).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((s - want).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn identities_hold_on_valid_sets() {
    for p in params_ok() {
        for r in racah_identities(&p).into_iter().chain(normalized_identities(&p).unwrap()) {
            assert!(
                r.evaluated > 0 && r.max_residual < 1e-9 * r.scale.max(1.0),
                "{} at {p:?}: {:e} (scale {:e})",
                r.name,
                r.max_residual,
                r.scale
            );
        }
    }
}

#[test]
fn zero_delta_cannot_be_normalized() {
    let p = RacahParams::new(0.0, 0.0, 4, 0.0);
    assert!(!is_normalizable(&p));
    assert!(racah_p_table(&p).is_err());
    // the unnormalized polynomials still exist
    assert_eq!(racah_r(0, 3, &p).unwrap(), 1.0);
}

#[test]
fn unnormalized_clears_denominators() {
    let p = RacahParams::new(-5.0, -5.0, 4, 5.0);
    for n in 0..=4 {
        for m in 0..=4 {
            let scale = poch(p.alpha + 1.0, n) * poch(p.beta + p.delta + 1.0, n) * poch(-4.0, n);
            let want = scale * racah_r(n, m, &p).unwrap();
            assert!((racah_r_unnormalized(n, m, &p) - want).abs() < 1e-9 * want.abs().max(1.0));
        }
    }
    // degree above N vanishes
    assert_eq!(racah_r_unnormalized(3, 1, &RacahParams::new(-5.0, 3.0, 2, 1.0)), 0.0);
}

#[test]
fn out_of_range_is_an_error() {
    let p = RacahParams::new(-3.0, -3.0, 2, 5.0);
    assert!(racah_p(3, 0, &p).is_err());
    assert!(racah_r(0, 3, &p).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_sets_satisfy_identities(
        a in -9.0f64..9.0, b in -9.0f64..9.0, d in -9.0f64..9.0, nn in 1usize..9
    ) {
        let p = RacahParams::new(a, b, nn, d);
        prop_assume!(is_normalizable(&p));
        for r in normalized_identities(&p).unwrap() {
            let tol = 1e-8 * r.scale.max(1.0);
            prop_assert!(r.max_residual < tol, "{} {:e}", r.name, r.max_residual);
        }
    }
}
