//! The library's tables against closed forms.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use so2m_core::aq::{class_records, predicted_class_count, ClassRecord};
use so2m_core::cycles::{automorphic_candidates, dimension_table, no_component_column};
use so2m_core::involutions::{catalog_vogan_data, Color, VoganData};
use so2m_core::{build_context, Root};

use common::{class_table, compared_as_pair, dimensions, rank, vogan_tables, Diagram, RowKey};

fn observed(vd: &VoganData) -> Diagram {
    let circled = vd.circled().into_iter().collect();
    let swaps = vd.swaps().into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
    (circled, swaps)
}

fn key(rec: &ClassRecord) -> RowKey {
    let p = rec.row.pattern;
    (p.block, p.row, p.i, p.j)
}

#[test]
fn vogan_diagrams_match_closed_forms() {
    for m in 2..=10 {
        let want = vogan_tables(m);
        let data = catalog_vogan_data(m).unwrap();
        let ids: BTreeSet<String> = data.iter().filter(|(s, _)| !s.twisted).map(|(s, _)| s.id()).collect();
        assert_eq!(ids, want.keys().cloned().collect(), "catalog ids for m = {m}");
        for pair in data.chunks(2) {
            let [(s, a), (_, b)] = pair else { unreachable!() };
            let (wa, wb) = &want[&s.id()];
            let got = (observed(a), observed(b));
            if compared_as_pair(m, &s.id()) {
                let mut g = [got.0, got.1];
                let mut w = [wa.clone(), wb.clone()];
                g.sort();
                w.sort();
                assert_eq!(g, w, "{} pair at m = {m}", s.id());
            } else {
                assert_eq!(got, (wa.clone(), wb.clone()), "{} at m = {m}", s.id());
            }
        }
    }
}

#[test]
fn twist_flips_fixed_black_vertices() {
    for m in 3..=10 {
        for pair in catalog_vogan_data(m).unwrap().chunks(2) {
            let [(s, a), (_, b)] = pair else { unreachable!() };
            assert_eq!(a.vertex_action, b.vertex_action);
            for i in 0..a.signs.len() {
                let black = a.diagram.colors[i] == Color::Black;
                match (a.signs[i], b.signs[i]) {
                    (Some(x), Some(y)) => assert_eq!(x == y, !black, "{} vertex {i}", s.id()),
                    (None, None) => {}
                    _ => panic!("fixed sets differ for {}", s.id()),
                }
            }
        }
    }
}

#[test]
fn dimension_table_matches_closed_forms() {
    for m in 2..=12 {
        let mut got: Vec<(String, usize, usize)> =
            dimension_table(m).unwrap().into_iter().map(|r| (r.involution, r.d_sigma, r.d_sigma_theta)).collect();
        got.sort();
        assert_eq!(got, dimensions(m), "m = {m}");
        assert!(got.iter().all(|(_, a, b)| a + b == 2 * m));
    }
}

#[test]
fn class_counts_match_tables() {
    for m in 2..=10 {
        let got = class_records(m).unwrap().len();
        assert_eq!(got, class_table(m).len(), "m = {m}");
        assert_eq!(got, predicted_class_count(build_context(m).unwrap().family, rank(m)), "m = {m}");
    }
    assert_eq!(class_records(3).unwrap().len(), 8);
    assert_eq!(class_records(2).unwrap().len(), 9);
}

/// Roots ±e_i±e_j (and ±e_i for odd m) written out directly.
fn brute_roots(m: usize) -> Vec<Vec<i64>> {
    let l = rank(m);
    let mut out = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; l];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
        if m % 2 == 1 {
            for a in [1, -1] {
                let mut v = vec![0; l];
                v[i] = a;
                out.push(v);
            }
        }
    }
    out
}

/// Distinct Δ(u∩p) over Δ_k⁺-dominant integer vectors in a box. Noncompact
/// roots are those involving e₁; compact positivity is lexicographic.
fn brute_class_count(m: usize, bound: i64) -> usize {
    let l = rank(m);
    let roots = brute_roots(m);
    let dot = |r: &[i64], h: &[i64]| r.iter().zip(h).map(|(a, b)| a * b).sum::<i64>();
    let compact_pos: Vec<&Vec<i64>> =
        roots.iter().filter(|r| r[0] == 0 && r.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)).collect();
    let noncompact: Vec<&Vec<i64>> = roots.iter().filter(|r| r[0] != 0).collect();
    let side = (2 * bound + 1) as usize;
    let mut seen = BTreeSet::new();
    for idx in 0..side.pow(l as u32) {
        let h: Vec<i64> = (0..l).map(|k| (idx / side.pow(k as u32) % side) as i64 - bound).collect();
        if compact_pos.iter().any(|r| dot(r, &h) < 0) {
            continue;
        }
        let set: Vec<&Vec<i64>> = noncompact.iter().copied().filter(|r| dot(r, &h) > 0).collect();
        seen.insert(set);
    }
    seen.len()
}

#[test]
fn class_counts_match_brute_force() {
    for m in 2..=6 {
        assert_eq!(class_records(m).unwrap().len(), brute_class_count(m, rank(m) as i64 + 2), "m = {m}");
    }
}

#[test]
fn polynomials_match_closed_forms() {
    for m in 2..=11 {
        let want = class_table(m);
        let got: BTreeMap<RowKey, ClassRecord> = class_records(m).unwrap().into_iter().map(|r| (key(&r), r)).collect();
        assert_eq!(got.keys().collect::<Vec<_>>(), want.keys().collect::<Vec<_>>(), "rows at m = {m}");
        for (k, rec) in &got {
            assert_eq!(rec.polynomial, want[k].polynomial, "row {k:?} at m = {m}");
        }
    }
}

#[test]
fn excluded_columns_match_closed_forms() {
    let mut mismatches = Vec::new();
    for m in 2..=11 {
        let l = rank(m);
        let want = class_table(m);
        let ids: Vec<String> = dimension_table(m).unwrap().into_iter().map(|r| r.involution).collect();
        for row in no_component_column(m).unwrap() {
            let k = key(&row.class);
            let got: BTreeSet<String> = row.involutions.into_iter().collect();
            let w = want[&k].excluded(l, &ids);
            if got != w {
                mismatches.push(format!("m = {m} row {k:?}: got {got:?}, table {w:?}"));
            }
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn automorphic_candidates_are_the_two_survivors() {
    for m in 3..=10 {
        let l = rank(m);
        let got = automorphic_candidates(m).unwrap();
        let expected_id = if m % 2 == 1 { format!("sigma_{l}") } else { "tauprime_1".to_string() };
        assert_eq!(got.len(), 1, "m = {m}: {:?}", got.iter().map(|(r, _)| &r.involution).collect::<Vec<_>>());
        let (rec, class) = &got[0];
        assert_eq!(rec.involution, expected_id);
        let mut minus_phi1 = vec![0i64; l];
        minus_phi1[0] = -1;
        minus_phi1[1] = 1;
        let mut delta = vec![0i64; l];
        delta[0] = 1;
        delta[1] = 1;
        assert_eq!(class.parabolic.delta_u_p_minus, vec![Root::new(minus_phi1)]);
        assert_eq!(class.parabolic.delta_u_p_plus, vec![Root::new(delta)]);
    }
    assert!(automorphic_candidates(2).unwrap().is_empty());
}
