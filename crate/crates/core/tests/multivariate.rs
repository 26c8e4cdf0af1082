// SPDX-License-Identifier: MIT

mod common;

use common::{j_half, j_large, j_small, p0_abs};
use sr4::multivariate::*;
use sr4::representation::Quintuplet;

fn first_weight_params(j: &Quintuplet, nn: usize, k: usize) -> (f64, f64, usize, f64) {
    let m = (nn - k) as f64;
    (-2.0 * j.j2 - 1.0, -2.0 * j.j1 - 1.0, nn - k, m - 2.0 * j.j2 + 2.0 * j.j3 + 1.0)
}

#[test]
fn tratnik_origin_is_pure_weight() {
    let j = j_small();
    let (a, b, n, d) = first_weight_params(&j, 2, 0);
    let second = (-2.0 * j.j0 - 1.0, -2.0 * j.j4 - 1.0, 2, 2.0 - 2.0 * j.j0 - 2.0 * j.j1 - 1.0);
    let want = p0_abs(0, a, b, n, d) * p0_abs(0, second.0, second.1, second.2, second.3);
    assert!((tratnik(0, 0, 0, 0, &j).unwrap() - want).abs() < 1e-14);
}

#[test]
fn griffiths_origin_by_weights() {
    let j = j_small();
    let nn = 2;
    let js = Quintuplet::new(j.j4, j.j2, j.j3, j.j1, j.j0);
    let mut want = 0.0;
    for a in 0..=nn {
        let (p, q, n, d) = first_weight_params(&j, nn, 0);
        let f1 = p0_abs(a, p, q, n, d);
        let m = (nn - a) as f64;
        let f2 = p0_abs(0, -2.0 * j.j0 - 1.0, -2.0 * j.j4 - 1.0, nn - a, m - 2.0 * j.j0 - 2.0 * j.j1 - 1.0);
        let (p, q, n, d) = first_weight_params(&js, nn, 0);
        let f3 = p0_abs(a, p, q, n, d);
        want += if a % 2 == 0 { 1.0 } else { -1.0 } * f1 * f2 * f3;
    }
    let got = griffiths(0, 0, 0, 0, &j).unwrap();
    // each factor is fixed only up to the sign of P_0
    assert!((got.abs() - want.abs()).abs() < 1e-14, "{got} vs {want}");
}

#[test]
fn tables_realize_transitions() {
    for j in [j_small(), j_large(), j_half()] {
        let t = tratnik_table(&j).unwrap();
        assert!(transition_residual(&t).unwrap() < 1e-9);
        let (r, c) = unitarity(&t);
        assert!(r < 1e-9 && c < 1e-9);
        let g = griffiths_table(&j).unwrap();
        assert!(transition_residual(&g).unwrap() < 1e-9);
        let (r, c) = unitarity(&g);
        assert!(r < 1e-9 && c < 1e-9);
        assert!(griffiths_factorization_residual(&j).unwrap() < 1e-10);
    }
}

#[test]
fn theta_support() {
    let j = j_large();
    let t = tratnik_table(&j).unwrap();
    for (n1, n2, m1, m2, v) in t.entries() {
        if n2 + m1 > 4 {
            assert_eq!(v, 0.0, "({n1},{n2};{m1},{m2})");
        }
    }
}

#[test]
fn stencil_identities() {
    for j in [j_small(), j_large(), j_half()] {
        for r in tratnik_identities(&j).unwrap().into_iter().chain(griffiths_identities(&j).unwrap()) {
            assert!(r.residual < 1e-9, "{} at {j}: {:e}", r.name, r.residual);
        }
    }
}

#[test]
fn symmetry_needs_the_sign() {
    for j in [j_small(), j_large(), j_half()] {
        let s = griffiths_symmetry(&j).unwrap();
        assert!(s.signed < 1e-10);
        assert!(s.literal > 0.1);
    }
}

#[test]
fn corrected_weights() {
    for j in [j_small(), j_large(), j_half()] {
        let c = weight_report(&j, WeightForm::Corrected).unwrap();
        assert_eq!(c.negative, 0);
        assert!(c.factorization < 1e-9);
        assert!(c.orthogonality < 1e-8);
        let p = weight_report(&j, WeightForm::Literal).unwrap();
        assert!(p.negative > 0);
        assert!(p.factorization.is_infinite());
    }
}

#[test]
fn r2_base_cases() {
    let j = j_large();
    for x2 in 0..=4 {
        for x1 in 0..=x2 {
            assert_eq!(r2(0, 0, x1, x2, &j).unwrap(), 1.0);
        }
    }
    assert!(r2(0, 0, 3, 2, &j).is_err());
    assert!(r2_polynomiality(&j).unwrap() < 1e-7);
}

#[test]
fn out_of_domain_indices() {
    let j = j_small();
    assert!(tratnik(2, 1, 0, 0, &j).is_err());
    assert!(griffiths(0, 0, 1, 2, &j).is_err());
    assert!(tratnik_weight(0, 3, 0, 0, &j, WeightForm::Literal).is_err());
}

#[test]
fn gamma_rejects_poles() {
    assert!(gamma_half(-0.5).is_err());
    assert!((gamma_half(4.0).unwrap() - 6.0).abs() < 1e-15);
}
