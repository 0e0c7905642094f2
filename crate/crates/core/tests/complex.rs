mod common;

use std::collections::{BTreeMap, BTreeSet};

use realflag::incidence::incidence;
use realflag::snf::invariant_factors;
use realflag::{DimVector, GradedComplex, OrderedSetPartition};

fn osp(s: &str) -> OrderedSetPartition {
    s.parse().unwrap()
}

fn all_dims(max_n: usize) -> Vec<DimVector> {
    (1..=max_n).flat_map(DimVector::compositions).collect()
}

#[test]
fn d_squared_vanishes_up_to_seven() {
    for d in all_dims(7) {
        let c = GradedComplex::build_unchecked(&d);
        for k in 0..c.top_degree().saturating_sub(1) {
            let dd = c.differential(k + 1).mul(&c.differential(k));
            assert!(dd.is_zero(), "d^2 != 0 at degree {} for {}", k, d);
        }
        assert!(c.check_d_squared().is_ok());
    }
}

#[test]
fn entries_match_incidences() {
    for d in all_dims(5) {
        let c = GradedComplex::build(&d).unwrap();
        for k in 0..c.top_degree() {
            let m = c.differential(k);
            assert_eq!(m.ncols(), c.cells(k).len());
            assert_eq!(m.nrows(), c.cells(k + 1).len());
            for (r, col, v) in m.triplets() {
                assert!(v == 2 || v == -2);
                let (i, j) = (&c.cells(k)[col], &c.cells(k + 1)[r]);
                assert!(j.bruhat_leq(i));
                assert_eq!(incidence(i, j).unwrap(), v);
            }
            // every adjacent pair with a nonzero coefficient appears
            for (col, i) in c.cells(k).iter().enumerate() {
                for p in i.adjacent_below() {
                    let (deg, r) = c.position(&p.lower).unwrap();
                    assert_eq!(deg, k + 1);
                    assert_eq!(m.get(r, col), incidence(i, &p.lower).unwrap());
                }
            }
        }
    }
}

#[test]
fn small_complexes() {
    let c = GradedComplex::build(&DimVector::complete(3)).unwrap();
    assert_eq!(c.cell_counts(), vec![1, 2, 2, 1]);
    assert_eq!(c.differential(1).nnz(), 2);
    assert!(c.differential(0).is_zero());
    let point = GradedComplex::build(&"3".parse().unwrap()).unwrap();
    assert_eq!(point.num_cells(), 1);
    assert!(point.edges().is_empty());
}

#[test]
fn figure_edges() {
    let c = GradedComplex::build(&DimVector::complete(4)).unwrap();
    let ours: BTreeMap<(String, String), i64> = c
        .edges()
        .into_iter()
        .map(|(i, j, v)| ((i.compact(), j.compact()), v))
        .collect();
    assert_eq!(ours.len(), 16);
    let theirs: BTreeMap<(String, String), i64> = common::FIGURE
        .iter()
        .map(|&(i, j, col)| ((i.to_string(), j.to_string()), if col == 'B' { 2 } else { -2 }))
        .collect();
    assert_eq!(
        ours.keys().collect::<BTreeSet<_>>(),
        theirs.keys().collect::<BTreeSet<_>>()
    );
    assert_eq!(ours[&("3421".to_string(), "2431".to_string())], -2);
    assert_eq!(ours[&("3412".to_string(), "1432".to_string())], 2);
}

#[test]
fn figure_signs_agree_up_to_regauging() {
    let c = GradedComplex::build(&DimVector::complete(4)).unwrap();
    let ours: BTreeMap<(String, String), i64> = c
        .edges()
        .into_iter()
        .map(|(i, j, v)| ((i.compact(), j.compact()), v))
        .collect();
    let constraints: Vec<(String, String, bool)> = common::FIGURE
        .iter()
        .map(|&(i, j, col)| {
            let theirs = if col == 'B' { 2 } else { -2 };
            let v = ours[&(i.to_string(), j.to_string())];
            (i.to_string(), j.to_string(), v != theirs)
        })
        .collect();
    let eps = common::solve_gauge(&constraints).expect("figure is not a re-gauging of the complex");
    let regauged = common::regauge(&c, &eps);
    for (k, d) in regauged.iter().enumerate() {
        for (r, col, v) in d.triplets() {
            let key = (c.cells(k)[col].compact(), c.cells(k + 1)[r].compact());
            let &(_, _, col_char) = common::FIGURE.iter().find(|(i, j, _)| (i.to_string(), j.to_string()) == key).unwrap();
            assert_eq!(v, if col_char == 'B' { 2 } else { -2 }, "{:?}", key);
        }
    }
}

#[test]
fn solver_detects_inconsistent_signs() {
    // a cycle of odd total flip cannot be gauged away
    let cons = vec![
        ("a".to_string(), "b".to_string(), true),
        ("b".to_string(), "c".to_string(), false),
        ("c".to_string(), "a".to_string(), false),
    ];
    assert!(common::solve_gauge(&cons).is_none());
    let cons = vec![
        ("a".to_string(), "b".to_string(), true),
        ("b".to_string(), "c".to_string(), true),
        ("c".to_string(), "a".to_string(), false),
    ];
    assert!(common::solve_gauge(&cons).is_some());
}

/// Changing the coorientation of some cells keeps `d^2 = 0` and the invariant
/// factors, hence the cohomology.
#[test]
fn regauging_preserves_cohomology() {
    for d in ["1,1,1,1", "2,2,1", "1,2,2"] {
        let c = GradedComplex::build(&d.parse().unwrap()).unwrap();
        let mut eps = BTreeMap::new();
        for k in 0..=c.top_degree() {
            for (idx, p) in c.cells(k).iter().enumerate() {
                eps.insert(p.compact(), (idx * 7 + k) % 3 == 0);
            }
        }
        let g = common::regauge(&c, &eps);
        for k in 0..g.len() {
            if k + 1 < g.len() {
                assert!(g[k + 1].mul(&g[k]).is_zero());
            }
            assert_eq!(invariant_factors(&g[k]), invariant_factors(&c.differential(k)));
        }
    }
}

#[test]
fn json_round_trip() {
    for d in ["1,1,1,1", "2,2,2", "1,3"] {
        let c = GradedComplex::build(&d.parse().unwrap()).unwrap();
        let json = c.to_json();
        let back = GradedComplex::from_json(&json).unwrap();
        assert_eq!(back.cell_counts(), c.cell_counts());
        assert_eq!(back.edges(), c.edges());
        let text = serde_json::to_string(&json).unwrap();
        let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(reparsed, json);
    }
}

#[test]
fn dot_output() {
    let c = GradedComplex::build(&DimVector::complete(4)).unwrap();
    let dot = c.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 16);
    assert!(dot.contains("\"3421\" -> \"2431\" [color=red"));
    assert!(dot.contains("\"3412\" -> \"1432\" [color=blue"));
    assert_eq!(dot, GradedComplex::build(&DimVector::complete(4)).unwrap().to_dot());
}

#[test]
fn apply_d_on_elements() {
    let c = GradedComplex::build(&DimVector::complete(4)).unwrap();
    let x = realflag::SchubertElement::cell(osp("3421"));
    let dx = c.apply_d(&x).unwrap();
    assert_eq!(dx.coefficient(&osp("2431")), -2);
    assert_eq!(dx.len(), 1);
    assert!(c.apply_d(&dx).unwrap().is_zero());
}
