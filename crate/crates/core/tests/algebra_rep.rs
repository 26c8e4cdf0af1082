// SPDX-License-Identifier: MIT

mod common;

use common::{j_half, j_large, j_small};
use nalgebra::DMatrix;
use sr4::algebra::*;
use sr4::representation::*;
use sr4::Error;

fn lab(s: &str) -> Label {
    Label::parse(s).unwrap()
}

#[test]
fn dimensions() {
    for (j, d) in [(j_small(), 6), (j_large(), 15), (j_half(), 6)] {
        let r = build_rep(&j).unwrap();
        assert_eq!(r.rep.dim(), d);
        assert_eq!(basis(r.big_n).len(), d);
    }
}

#[test]
fn relations_and_casimirs() {
    for j in [j_small(), j_large(), j_half()] {
        let r = build_rep(&j).unwrap();
        let rel = relation_residuals(&r.rep);
        assert_eq!(rel.len(), 24);
        for x in &rel {
            assert!(x.residual < 1e-9, "{} {} at {j}: {:e}", x.group, x.name, x.residual);
        }
        let c = casimir_values(&r.rep);
        assert!(c.norms.iter().all(|&v| v < 1e-8), "{j}: {:?}", c.norms);
        assert!(subset_sum_residual(&r.rep) < 1e-9);
        assert!(check_irreducible(&r.rep, r.big_n));
    }
}

#[test]
fn c12_and_c123_diagonal_values() {
    let j = j_large();
    let r = build_rep(&j).unwrap();
    let c12 = r.rep.get(lab("12")).unwrap();
    let c123 = r.rep.get(lab("123")).unwrap();
    for (n, p) in basis(4) {
        let k = position(n, p, 4);
        let x = n as f64 - j.j1 - j.j2;
        let y = p as f64 - j.j0 - j.j4;
        assert_eq!(c12[(k, k)], (x - 1.0) * x);
        assert_eq!(c123[(k, k)], (y - 1.0) * y);
    }
}

// Every eigenvalue of a two-index generator C_ab is y(y+1) with y + ja + jb
// an integer.
#[test]
fn pair_spectra_are_coupled_spins() {
    for j in [j_small(), j_large(), j_half()] {
        let r = build_rep(&j).unwrap();
        let ja = j.to_array();
        for (name, a, b) in [("23", 1, 2), ("34", 2, 3), ("13", 0, 2), ("24", 1, 3), ("14", 0, 3)] {
            let m = r.rep.reconstruct(lab(name));
            let sym = (&m + m.transpose()) * 0.5;
            let ev = sym.symmetric_eigen().eigenvalues;
            for &l in ev.iter() {
                let y = (-1.0 + (1.0 + 4.0 * l).max(0.0).sqrt()) / 2.0;
                let s = y + ja[a] + ja[b];
                assert!((s - s.round()).abs() < 1e-6, "C{name} eigenvalue {l} at {j}");
            }
        }
    }
}

#[test]
fn generators_are_symmetric() {
    let r = build_rep(&j_large()).unwrap();
    for l in Label::contiguous() {
        let m = r.rep.get(l).unwrap();
        assert!((m - m.transpose()).amax() < 1e-12, "{l}");
    }
}

#[test]
fn expansion_of_c13() {
    let r = build_rep(&j_small()).unwrap();
    let g = |s: &str| r.rep.get(lab(s)).unwrap().clone();
    // C13 = C123 - C12 - C23 + C1 + C2 + C3
    let want = g("123") - g("12") - g("23") + g("1") + g("2") + g("3");
    assert!((r.rep.reconstruct(lab("13")) - want).amax() < 1e-12);
}

#[test]
fn rejections() {
    let bad = Quintuplet::new(2.0, 2.0, 3.0, 2.0, 2.0);
    match validate(&bad) {
        Err(Error::Rejected(v)) => assert!(v.iter().any(|s| s.contains("lower bound"))),
        other => panic!("{other:?}"),
    }
    assert!(matches!(validate(&Quintuplet::new(0.0, 0.0, 0.0, 0.0, 0.0)), Err(Error::Rejected(_))));
    assert!(matches!(validate(&Quintuplet::new(1.0, 1.0, 2.0, 1.0, 1.3)), Err(Error::Rejected(_))));
    assert!(build_rep(&bad).is_err());
}

#[test]
fn missing_generator_is_structural() {
    let r = build_rep(&j_small()).unwrap();
    let mut mats = r.rep.contiguous_matrices().clone();
    mats.remove(&lab("23"));
    assert!(matches!(RepHandle::new(mats, r.rep.mu), Err(Error::Structural(_))));
}

#[test]
fn perturbation_breaks_relations() {
    let r = build_rep(&j_small()).unwrap();
    let mut rep = r.rep.clone();
    rep.get_mut(lab("34")).unwrap()[(0, 1)] += 1e-3;
    let worst = relation_residuals(&rep).iter().map(|x| x.residual).fold(0.0, f64::max);
    assert!(worst > 1e-4);
}

#[test]
fn commutator_helpers() {
    let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
    let b = DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0]);
    assert_eq!(comm(&a, &b), DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]));
    assert_eq!(anticomm(&a, &b), DMatrix::identity(2, 2));
}
