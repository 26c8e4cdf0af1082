// SPDX-License-Identifier: MIT

//! Acceptance criteria 1-9, one status line each.
//!
//! Criteria 7 and 8 contain a check that fails when the closed forms are
//! taken literally (the 𝒲/𝒦 weights and the unsigned j1 <-> j4 symmetry). Those
//! lines print FAIL; the run only exits nonzero when something else fails
//! or when one of those known defects stops reproducing.

use std::process::ExitCode;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sr4::algebra::{casimir_values, relation_residuals, Label, RepHandle};
use sr4::multivariate as mv;
use sr4::racah::{is_normalizable, normalized_identities, racah_identities, RacahParams};
use sr4::representation::{build_rep, Quintuplet};
use sr4::symmetry::{alternating_subgroup, group, group_certificates, GroupElement};
use sr4::transitions::{
    align_residual, closed_form_edge, cycle_certificates, intertwiner_oracle, intertwining_residual,
    orthogonality_residual, pi_g, EdgeKind,
};

type Outcome = Result<(bool, String), String>;

fn q(a: [f64; 5]) -> Quintuplet {
    Quintuplet::from_array(a)
}

fn integer_quintuplets() -> [Quintuplet; 2] {
    [q([1.0, 1.0, 2.0, 1.0, 1.0]), q([2.0, 2.0, 4.0, 2.0, 2.0])]
}

fn worst(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (j, dim) in
        [(q([1.0, 1.0, 2.0, 1.0, 1.0]), 6), (q([2.0, 2.0, 4.0, 2.0, 2.0]), 15), (q([1.5, 1.0, 3.0, 1.0, 1.5]), 6)]
    {
        let r = build_rep(&j).map_err(|e| e.to_string())?;
        let rel = relation_residuals(&r.rep);
        let rw = worst(rel.iter().map(|x| x.residual));
        let cw = worst(casimir_values(&r.rep).norms);
        ok &= rel.len() == 24 && rw < 1e-9 && cw < 1e-8 && r.rep.dim() == dim;
        parts.push(format!("{j}: dim {} relations {rw:.1e} casimirs {cw:.1e}", r.rep.dim()));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_2() -> Outcome {
    let certs = group_certificates();
    let failed: Vec<&str> = certs.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let o = group().order();
    let a = alternating_subgroup().order();
    let ok = failed.is_empty() && o == 120 && a == 60;
    Ok((ok, format!("|<s,t,i>| = {o}, |<s,t>| = {a}, {} certificates, failed: {failed:?}", certs.len())))
}

fn criterion_3() -> Outcome {
    let j = q([1.0, 1.0, 2.0, 1.0, 1.0]);
    let mut ok = true;
    let mut parts = Vec::new();
    for w in ["s", "t", "i"] {
        let g = GroupElement::from_word(w).map_err(|e| e.to_string())?;
        let mats = pi_g(&g, &j).map_err(|e| e.to_string())?;
        let rep = RepHandle::new(mats, j.mu()).map_err(|e| e.to_string())?;
        let r = worst(relation_residuals(&rep).iter().map(|x| x.residual));
        ok &= r < 1e-9;
        parts.push(format!("{w}: {r:.1e}"));
    }
    Ok((ok, parts.join(", ")))
}

fn criterion_4() -> Outcome {
    let e = GroupElement::identity();
    let (mut agree, mut orth, mut intw) = (0.0_f64, 0.0_f64, 0.0_f64);
    for j in integer_quintuplets() {
        for kind in [EdgeKind::T, EdgeKind::S, EdgeKind::I, EdgeKind::R] {
            let t = closed_form_edge(kind, &j).map_err(|x| x.to_string())?;
            let o = intertwiner_oracle(&e, &kind.element(), &j).map_err(|x| x.to_string())?;
            agree = agree.max(align_residual(&t.matrix, &o.matrix));
            orth = orth.max(orthogonality_residual(&t.matrix));
            intw = intw.max(intertwining_residual(&t.matrix, &e, &kind.element(), &j).map_err(|x| x.to_string())?);
        }
    }
    let ok = agree < 1e-8 && orth < 1e-9 && intw < 1e-9;
    Ok((ok, format!("oracle agreement {agree:.1e}, orthogonality {orth:.1e}, intertwining {intw:.1e}")))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for j in integer_quintuplets() {
        let c = cycle_certificates(&j).map_err(|e| e.to_string())?;
        for name in ["triangle t^3", "pentagon r^5", "six-product"] {
            let r = c.iter().find(|x| x.name == name).ok_or("missing certificate")?.residual;
            ok &= r < 1e-8;
            parts.push(format!("{name} {r:.1e}"));
        }
    }
    Ok((ok, parts.join(", ")))
}

// Residuals are measured against the largest term entering each identity
// (floored at 1), since the sampled parameters produce values far from 1.
fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20_241_019);
    let mut sets = Vec::new();
    let mut tries = 0;
    // one set per target size, so the sample is not dominated by small N
    for big_n in [1, 3, 5, 7, 9, 12] {
        for _ in 0..200_000 {
            tries += 1;
            let p =
                RacahParams::new(rng.gen_range(-9.0..9.0), rng.gen_range(-9.0..9.0), big_n, rng.gen_range(-9.0..9.0));
            if is_normalizable(&p) {
                sets.push(p);
                break;
            }
        }
    }
    if sets.len() < 5 {
        return Err(format!("only {} valid sets after {tries} draws", sets.len()));
    }
    let mut ok = true;
    let (mut abs_w, mut rel_w) = (0.0_f64, 0.0_f64);
    let mut names = std::collections::BTreeSet::new();
    for p in &sets {
        let mut all = racah_identities(p);
        all.extend(normalized_identities(p).map_err(|e| e.to_string())?);
        for r in all {
            let rel = r.max_residual / r.scale.max(1.0);
            ok &= r.evaluated > 0 && rel < 1e-9;
            abs_w = abs_w.max(r.max_residual);
            rel_w = rel_w.max(rel);
            names.insert(r.name);
        }
    }
    let ns: Vec<usize> = sets.iter().map(|p| p.big_n).collect();
    Ok((
        ok,
        format!(
            "{} sets (N = {ns:?}, {tries} draws), {} identities, worst relative {rel_w:.1e} (absolute {abs_w:.1e})",
            sets.len(),
            names.len()
        ),
    ))
}

fn criterion_7() -> Outcome {
    let e = |x: sr4::Error| x.to_string();
    let mut parts = Vec::new();
    let mut attainable = true;
    let mut literal_ok = true;
    for j in integer_quintuplets() {
        let t = mv::tratnik_table(&j).map_err(e)?;
        let tr = mv::transition_residual(&t).map_err(e)?;
        let (u1, u2) = mv::unitarity(&t);
        let ids = worst(mv::tratnik_identities(&j).map_err(e)?.iter().map(|r| r.residual));
        let literal = mv::weight_report(&j, mv::WeightForm::Literal).map_err(e)?;
        let fixed = mv::weight_report(&j, mv::WeightForm::Corrected).map_err(e)?;
        attainable &= tr < 1e-9 && u1 < 1e-9 && u2 < 1e-9 && ids < 1e-8;
        literal_ok &= literal.orthogonality < 1e-7;
        parts.push(format!(
            "{j}: table {tr:.1e}, unitarity {u1:.1e}/{u2:.1e}, identities {ids:.1e}, \
             R2 orthogonality literal W,K {:.1e} ({} negative weights), with -W and K/(k1+k2+2j1+2j0-N+1) {:.1e}",
            literal.orthogonality, literal.negative, fixed.orthogonality
        ));
    }
    if !attainable {
        return Err(parts.join("; "));
    }
    if literal_ok {
        return Err(format!(
            "literal weights now pass, the recorded defect no longer reproduces. {}",
            parts.join("; ")
        ));
    }
    Ok((false, parts.join("; ")))
}

fn criterion_8() -> Outcome {
    let e = |x: sr4::Error| x.to_string();
    let mut parts = Vec::new();
    let mut attainable = true;
    let mut literal_ok = true;
    for j in integer_quintuplets() {
        let g = mv::griffiths_table(&j).map_err(e)?;
        let tr = mv::transition_residual(&g).map_err(e)?;
        let f = mv::griffiths_factorization_residual(&j).map_err(e)?;
        let s = mv::griffiths_symmetry(&j).map_err(e)?;
        let (u1, u2) = mv::unitarity(&g);
        let ids = worst(mv::griffiths_identities(&j).map_err(e)?.iter().map(|r| r.residual));
        attainable &= tr < 1e-9 && f < 1e-10 && s.signed < 1e-10 && u1 < 1e-9 && u2 < 1e-9 && ids < 1e-8;
        literal_ok &= s.literal < 1e-10;
        parts.push(format!(
            "{j}: table {tr:.1e}, factored {f:.1e}, symmetry as stated {:.1e} (with (-1)^(n2+m2) {:.1e}), \
             unitarity {u1:.1e}/{u2:.1e}, identities {ids:.1e}",
            s.literal, s.signed
        ));
    }
    if !attainable {
        return Err(parts.join("; "));
    }
    if literal_ok {
        return Err(format!(
            "unsigned symmetry now passes, the recorded defect no longer reproduces. {}",
            parts.join("; ")
        ));
    }
    Ok((false, parts.join("; ")))
}

fn criterion_9() -> Outcome {
    let mut total = 0;
    let mut missed = Vec::new();
    let mut weakest = f64::INFINITY;
    for a in [[1.0, 1.0, 2.0, 1.0, 1.0], [2.0, 2.0, 4.0, 2.0, 2.0], [1.5, 1.0, 3.0, 1.0, 1.5]] {
        let j = q(a);
        let base = build_rep(&j).map_err(|e| e.to_string())?.rep;
        let d = base.dim();
        for l in Label::contiguous() {
            for r in 0..d {
                for c in 0..d {
                    if r == c {
                        continue;
                    }
                    let mut rep = base.clone();
                    rep.get_mut(l).ok_or("missing generator")?[(r, c)] += 1e-3;
                    let res = worst(relation_residuals(&rep).iter().map(|x| x.residual))
                        .max(worst(casimir_values(&rep).norms));
                    total += 1;
                    weakest = weakest.min(res);
                    if !(res > 1e-4) {
                        missed.push(format!("{j} {l}[{r},{c}]"));
                    }
                }
            }
        }
    }
    let ok = missed.is_empty();
    let head: Vec<&String> = missed.iter().take(5).collect();
    Ok((
        ok,
        format!("{total} perturbations, smallest max residual {weakest:.1e}, undetected {}: {head:?}", missed.len()),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("algebra", criterion_1),
        ("group", criterion_2),
        ("isomorphism", criterion_3),
        ("transitions", criterion_4),
        ("cycles", criterion_5),
        ("racah polynomials", criterion_6),
        ("tratnik", criterion_7),
        ("griffiths", criterion_8),
        ("fault injection", criterion_9),
    ];
    // criteria whose FAIL is the documented, expected outcome
    let known_fail = [7, 8];
    let mut bad = 0;
    println!();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let n = k + 1;
        match f() {
            Ok((pass, detail)) => {
                println!("criterion {n} ({name}): {} | {detail}", if pass { "PASS" } else { "FAIL" });
                if !pass && !known_fail.contains(&n) {
                    bad += 1;
                }
            }
            Err(msg) => {
                println!("criterion {n} ({name}): FAIL | unexpected: {msg}");
                bad += 1;
            }
        }
    }
    println!();
    if bad == 0 {
        println!("acceptance: all criteria behave as recorded (7 and 8 fail on the literal closed forms)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {bad} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
