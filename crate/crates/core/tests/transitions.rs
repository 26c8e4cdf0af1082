// SPDX-License-Identifier: MIT

mod common;

use common::{j_half, j_large, j_small};
use nalgebra::DMatrix;
use sr4::representation::{basis, position};
use sr4::symmetry::{act_on_quintuplet, vertex_of, Graph, GroupElement};
use sr4::transitions::*;
use sr4::Error;

fn el(w: &str) -> GroupElement {
    GroupElement::from_word(w).unwrap()
}

#[test]
fn closed_forms_match_the_oracle() {
    for j in [j_small(), j_large(), j_half()] {
        for k in ['t', 's', 'i', 'r'] {
            let kind = EdgeKind::from_letter(k).unwrap();
            let t = closed_form_edge(kind, &j).unwrap();
            let o = intertwiner_oracle(&GroupElement::identity(), &kind.element(), &j).unwrap();
            assert!(align_residual(&t.matrix, &o.matrix) < 1e-8, "{k} at {j}");
            assert!(orthogonality_residual(&t.matrix) < 1e-9);
            let r = intertwining_residual(&t.matrix, &GroupElement::identity(), &kind.element(), &j).unwrap();
            assert!(r < 1e-9, "{k} at {j}: {r:e}");
        }
    }
}

#[test]
fn s_edge_is_the_index_swap() {
    let t = closed_form_raw(EdgeKind::S, &j_large()).unwrap();
    let mut want = DMatrix::zeros(15, 15);
    for (n, p) in basis(4) {
        want[(position(n, p, 4), position(p, n, 4))] = 1.0;
    }
    assert_eq!(t, want);
}

#[test]
fn cycles_close() {
    for j in [j_small(), j_large()] {
        for c in cycle_certificates(&j).unwrap() {
            assert!(c.residual < 1e-8, "{} at {j}: {:e}", c.name, c.residual);
        }
    }
}

#[test]
fn general_transition_intertwines() {
    let j = j_small();
    for (h, g) in [("", "rr"), ("s", "ti"), ("r", "ttrr"), ("ist", "s")] {
        let (h, g) = (el(h), el(g));
        let t = transition(&h, &g, &j).unwrap();
        assert!(orthogonality_residual(&t.matrix) < 1e-9);
        assert!(intertwining_residual(&t.matrix, &h, &g, &j).unwrap() < 1e-9, "{} -> {}", h.word, g.word);
    }
}

#[test]
fn path_product_equals_direct_transition() {
    let j = j_small();
    let graph = Graph::build();
    let (u, v) = (vertex_of(&GroupElement::identity()), graph.vertices[9]);
    let path = graph.path(&u, &v).unwrap();
    let p = compose_path(&path, &j).unwrap();
    let d = transition(&path[0], path.last().unwrap(), &j).unwrap();
    assert!(align_residual(&p.matrix, &d.matrix) < 1e-9);
}

#[test]
fn non_adjacent_path_is_rejected() {
    let j = j_small();
    let graph = Graph::build();
    let far = graph
        .vertices
        .iter()
        .find(|v| {
            !graph.adjacent(&vertex_of(&GroupElement::identity()), v) && **v != vertex_of(&GroupElement::identity())
        })
        .unwrap();
    let g = sr4::symmetry::representative(far).unwrap();
    assert!(matches!(compose_path(&[GroupElement::identity(), g], &j), Err(Error::Path(_))));
}

#[test]
fn chain_matches_oracle_for_a_long_word() {
    let j = j_small();
    let c = chain("tsr", &j).unwrap();
    assert!(c.fallbacks.is_empty());
    let o = intertwiner_oracle(&GroupElement::identity(), &el("tsr"), &j).unwrap();
    assert!(align_residual(&c.matrix, &o.matrix) < 1e-8);
}

#[test]
fn image_quintuplets_keep_n() {
    let j = j_large();
    for w in ["s", "t", "i", "r", "ttrr"] {
        assert_eq!(act_on_quintuplet(&el(w), &j).big_n().unwrap(), 4);
    }
}
