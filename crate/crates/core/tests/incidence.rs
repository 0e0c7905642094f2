mod common;

use realflag::incidence::{
    grassmannian_nonzero, incidence, incidence_at, incidence_coefficient, incidence_dual,
    kocherlakota_m, normal_count, tangent_count,
};
use realflag::{DimVector, OrderedSetPartition, YoungDiagram};

fn osp(s: &str) -> OrderedSetPartition {
    s.parse().unwrap()
}

fn all_dims(max_n: usize) -> Vec<DimVector> {
    (1..=max_n).flat_map(DimVector::compositions).collect()
}

#[test]
fn worked_example_terms() {
    let i = osp("456123");
    let j = osp("426153");
    let rec = incidence_coefficient(&i, 5, 2);
    let t = rec.sign_terms;
    assert_eq!((t.c1, t.c2, t.c3, t.c4, t.total()), (3, 2, 1, 2, 8));
    assert_eq!(rec.signed_value(), 2);
    assert_eq!(i.adjacency_with(&j).map(|p| (p.a, p.b)), Some((5, 2)));
}

#[test]
fn fl222_example() {
    let i = osp("3 6|1 4|2 5");
    let j = osp("2 6|1 4|3 5");
    assert_eq!(realflag::incidence::g_count(&i, 3, 1, 3), 2);
    assert_eq!(realflag::incidence::l_count(&i, 2, 0, 2), 1);
    assert_eq!(normal_count(&i, 3, 2), 3);
    assert_eq!(incidence(&i, &j).unwrap().abs(), 2);
    assert_eq!(kocherlakota_m(&i, &j).unwrap(), 4);
}

#[test]
fn figure_edge_is_red() {
    assert_eq!(incidence(&osp("3421"), &osp("2431")).unwrap(), -2);
    assert_eq!(incidence(&osp("3412"), &osp("1432")).unwrap(), 2);
}

#[test]
fn non_adjacent_pairs_are_rejected() {
    assert!(incidence(&osp("4321"), &osp("1234")).is_err());
    assert!(incidence(&osp("2431"), &osp("3421")).is_err());
    assert!(kocherlakota_m(&osp("4321"), &osp("1234")).is_err());
}

/// The sign agrees with a direct comparison of orientations of the normal
/// spaces whenever the coefficient is nonzero.
#[test]
fn sign_matches_orientation_oracle() {
    let mut checked = 0;
    for d in all_dims(6) {
        for i in OrderedSetPartition::enumerate(&d) {
            for p in i.adjacent_below() {
                let v = incidence_at(&i, p.a, p.b);
                if v != 0 {
                    let oracle = common::orientation_sign(&i, p.a, p.b);
                    assert_eq!(v, 2 * oracle, "{} -> {}", i, p.lower);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn kocherlakota_cross_check() {
    for d in all_dims(6) {
        for i in OrderedSetPartition::enumerate(&d) {
            for p in i.adjacent_below() {
                let m = kocherlakota_m(&i, &p.lower).unwrap();
                let n = normal_count(&i, p.a, p.b);
                assert_eq!(m, n + 1, "{} -> {}", i, p.lower);
                let v = incidence(&i, &p.lower).unwrap();
                assert_eq!(v != 0, m % 2 == 0, "{} -> {}", i, p.lower);
            }
        }
    }
}

#[test]
fn grassmannian_rule() {
    for (k, n) in [(1, 4), (2, 4), (2, 5), (3, 6), (3, 7), (4, 8), (2, 7)] {
        for lambda in YoungDiagram::in_box(k, n - k) {
            let upper = lambda.to_osp(k, n).unwrap();
            for j in lambda.addable_rows(k, n - k) {
                let lower = lambda.add_box(j).to_osp(k, n).unwrap();
                let v = incidence(&upper, &lower).unwrap();
                assert_eq!(v != 0, grassmannian_nonzero(&lambda, j), "{} + row {}", lambda, j);
            }
        }
    }
}

#[test]
fn doubled_cells_have_no_incidences() {
    for d in all_dims(4) {
        for i in OrderedSetPartition::enumerate(&d) {
            let di = i.double();
            for p in di.adjacent_below() {
                assert_eq!(incidence_at(&di, p.a, p.b), 0, "{} -> {}", di, p.lower);
                assert_eq!(normal_count(&di, p.a, p.b) % 2, 0);
            }
            for p in di.adjacent_above() {
                assert_eq!(incidence(&p.upper, &di).unwrap(), 0, "{} -> {}", p.upper, di);
            }
        }
    }
}

#[test]
fn dual_labelling_uses_tangent_parity() {
    for d in all_dims(5) {
        for i in OrderedSetPartition::enumerate(&d) {
            for p in i.adjacent_above() {
                let j = &p.upper;
                let t = tangent_count(&i, p.b, p.a);
                let v = incidence_dual(&i, j).unwrap();
                assert_eq!(v == 0, t % 2 == 0, "{} -> {}", i, j);
            }
        }
    }
}

/// Sq^1 coefficients between the classes indexed by `I^∨` (the convention in
/// which appending `N+1, ..., N+m` to the last block is compatible with the
/// inclusions `Fl_D -> Fl_{D^m}`) do not depend on `m`.
#[test]
fn sq1_coefficients_are_stable() {
    let mut nonzero = 0;
    for d in all_dims(4).into_iter().filter(|d| d.num_blocks() >= 2) {
        for i in OrderedSetPartition::enumerate(&d) {
            for p in i.dual().adjacent_below() {
                let j = p.lower.dual();
                let sq1 = |m: usize| {
                    // non-adjacent cells have coefficient zero
                    let v = incidence(&i.stabilize(m).dual(), &j.stabilize(m).dual()).unwrap_or(0);
                    (v / 2).rem_euclid(2)
                };
                let base = sq1(0);
                nonzero += base as usize;
                for m in 1..=3 {
                    assert_eq!(sq1(m), base, "{} -> {}, m = {}", i, j, m);
                }
            }
        }
    }
    assert!(nonzero > 0);
}
