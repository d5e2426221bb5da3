mod oracle;

use kholes_core::census::*;
use kholes_core::generators::*;
use kholes_core::{Error, GonClass, PointSet};
use num_bigint::BigUint;
use oracle::binom;

fn big(v: u128) -> BigUint {
    BigUint::from(v)
}

fn count(s: &PointSet, k: usize, class: GonClass, holes: bool) -> BigUint {
    count_gons(s, k, class, holes).unwrap().count
}

#[test]
fn brute_force_agreement_on_random_sets() {
    for seed in 0..12 {
        let n = 5 + (seed as usize % 4);
        let s = gen_random(n, seed, 200).unwrap();
        let p = oracle::coords(&s);
        for k in 3..=n.min(7) {
            for holes in [false, true] {
                let (cv, nc) = oracle::gons(&p, k, holes);
                let t = gon_tally(&s, k, holes).unwrap();
                assert_eq!((t.convex, t.nonconvex), (cv, nc), "seed {seed} n {n} k {k} holes {holes}");
                assert_eq!(count(&s, k, GonClass::Convex, holes), big(cv));
                assert_eq!(count(&s, k, GonClass::Nonconvex, holes), big(nc));
                assert_eq!(count(&s, k, GonClass::General, holes), big(cv + nc));
            }
        }
        assert_eq!(crossing_number(&s).unwrap(), oracle::crossing_number(&p));
    }
}

#[test]
fn convex_set_examples() {
    let s = gen_convex(6, 1).unwrap();
    assert_eq!(count(&s, 4, GonClass::Convex, true), big(15));
    assert_eq!(crossing_number(&s).unwrap(), 15);
    assert_eq!(polygonization_count(&gen_convex(8, 2).unwrap()).unwrap(), big(1));
    assert_eq!(polygonization_count(&gen_convex(10, 3).unwrap()).unwrap(), big(1));
}

#[test]
fn nonconvex_quadrilateral() {
    let s = PointSet::from_i64(&[(0, 0), (6, 0), (3, 6), (3, 2)]).unwrap();
    assert_eq!(count(&s, 4, GonClass::Nonconvex, false), big(3));
    assert_eq!(polygonization_count(&s).unwrap(), big(3));
    assert_eq!(representation_count_nonconvex(&s, 4).unwrap(), big(3));
}

#[test]
fn crossing_number_examples() {
    // square with an off-centre interior point
    let s = PointSet::from_i64(&[(0, 0), (10, 0), (10, 10), (0, 10), (4, 5)]).unwrap();
    assert_eq!(crossing_number(&s).unwrap(), 3);
    // triangle with two interior points: the minimum cr(5) = 1
    let t = PointSet::from_i64(&[(0, 0), (12, 0), (6, 12), (5, 4), (7, 3)]).unwrap();
    assert_eq!(crossing_number(&t).unwrap(), 1);
    assert_eq!(crossing_number(&t).unwrap(), oracle::crossing_number(&oracle::coords(&t)));
}

#[test]
fn five_gon_identity() {
    for seed in 100..110 {
        let n = 8;
        let s = gen_random(n, seed, 500).unwrap();
        let cr = crossing_number(&s).unwrap();
        let nc = count(&s, 5, GonClass::Nonconvex, false);
        assert_eq!(nc, big(10 * binom(8, 5) - 2 * 4 * cr));
    }
}

#[test]
fn double_chain_polygonizations() {
    let dc = gen_double_chain(8).unwrap();
    let c = polygonization_count(&dc).unwrap();
    let (cv, nc) = oracle::gons(&oracle::coords(&dc), 8, false);
    assert_eq!(c, big(cv + nc));
    assert!(c > big(100), "{c}");
    let dc6 = gen_double_chain(6).unwrap();
    assert!(count(&dc6, 5, GonClass::General, true) >= big(6));
}

#[test]
fn large_k_reversal() {
    let dc = gen_double_chain(10).unwrap();
    assert!(count(&dc, 9, GonClass::General, true) > big(10));
}

#[test]
fn islands() {
    let s = gen_random(8, 11, 400).unwrap();
    let p = oracle::coords(&s);
    assert_eq!(count_islands(&s, 2).unwrap(), 28);
    assert_eq!(count_islands(&s, 1).unwrap(), 8);
    let c = gen_convex(9, 0).unwrap();
    for k in 1..=9 {
        assert_eq!(count_islands(&c, k).unwrap(), binom(9, k as u128));
    }
    // oracle: a k-subset is an island iff no outside point lies in any triangle of it
    for k in 3..=6 {
        let expect = oracle::subsets(8, k)
            .into_iter()
            .filter(|sub| {
                (0..8).filter(|q| !sub.contains(q)).all(|q| {
                    oracle::subsets(k, 3).iter().all(|t| {
                        let tri = [sub[t[0]], sub[t[1]], sub[t[2]]];
                        !oracle::inside(&p, &tri, p[q])
                    })
                })
            })
            .count() as u128;
        assert_eq!(count_islands(&s, k).unwrap(), expect, "k={k}");
    }
}

#[test]
fn empty_triangles_examples() {
    let sq = PointSet::from_i64(&[(0, 0), (4, 0), (4, 4), (0, 4)]).unwrap();
    assert_eq!(empty_triangles_on_segment(&sq, 0, 1).unwrap(), 2);
    let t = PointSet::from_i64(&[(0, 0), (6, 0), (3, 6), (3, 2)]).unwrap();
    assert_eq!(empty_triangles_on_segment(&t, 0, 1).unwrap(), 1);
    let g = gen_perturbed_grid(5, 2).unwrap();
    let p = oracle::coords(&g);
    let n = p.len();
    for a in 0..n {
        for b in a + 1..n {
            let expect = (0..n)
                .filter(|&r| r != a && r != b)
                .filter(|&r| (0..n).all(|q| q == a || q == b || q == r || !oracle::inside(&p, &[a, b, r], p[q])))
                .count() as u128;
            assert_eq!(empty_triangles_on_segment(&g, a, b).unwrap(), expect);
        }
    }
}

#[test]
fn representation_counts() {
    for seed in 0..6 {
        let s = gen_random(8, seed, 300).unwrap();
        let p = oracle::coords(&s);
        for k in [4, 5] {
            let reps = representation_count_nonconvex(&s, k).unwrap();
            assert_eq!(reps, big(oracle::reflex_weighted_nonconvex_holes(&p, k)), "seed {seed} k {k}");
            assert!(reps >= count(&s, k, GonClass::Nonconvex, true));
        }
    }
    assert_eq!(representation_count_nonconvex(&gen_convex(7, 0).unwrap(), 5).unwrap(), big(0));
}

#[test]
fn witnesses() {
    let c = gen_convex(10, 4).unwrap();
    assert_eq!(min_khole_witnesses(&c, 4).unwrap(), 28);
    for seed in 0..5 {
        let s = gen_random(10, seed, 400).unwrap();
        assert_eq!(min_khole_witnesses(&s, 5).unwrap(), 21);
    }
    let s = gen_random(6, 1, 100).unwrap();
    assert_eq!(min_khole_witnesses(&s, 6).unwrap(), 1);
    let w = khole_witness(&s, 6, 0, 5).unwrap().unwrap();
    assert_eq!(w.len(), 6);
}

#[test]
fn existence_small_cases() {
    for seed in 0..30 {
        assert!(find_convex_gon(&gen_random(5, seed, 100).unwrap(), 4).unwrap().is_some());
        assert!(find_convex_gon(&gen_random(9, seed, 100).unwrap(), 5).unwrap().is_some());
        assert!(find_convex_hole(&gen_random(10, seed, 100).unwrap(), 5).unwrap().is_some());
    }
}

#[test]
fn horton_has_no_convex_seven_hole() {
    for n in [16, 32] {
        assert_eq!(count(&gen_horton(n).unwrap(), 7, GonClass::Convex, true), big(0));
    }
}

#[test]
fn horton_sixteen_six_holes_match_oracle() {
    let h = gen_horton(16).unwrap();
    let p = oracle::coords(&h);
    let expect = oracle::subsets(16, 6)
        .into_iter()
        .filter(|sub| {
            let mut order = sub.clone();
            // sort by angle around the lowest point, then test convexity and emptiness
            let o = *order.iter().min_by_key(|&&i| (p[i].1, p[i].0)).unwrap();
            order.retain(|&i| i != o);
            order.sort_by(|&a, &b| 0.cmp(&oracle::cross(p[o], p[a], p[b])));
            order.insert(0, o);
            oracle::convex_cycle(&p, &order) && (0..16).all(|q| order.contains(&q) || !oracle::inside(&p, &order, p[q]))
        })
        .count() as u128;
    assert_eq!(count(&h, 6, GonClass::Convex, true), big(expect));
}

#[test]
fn rejects_bad_input() {
    let g = gen_grid(3).unwrap();
    assert!(matches!(count_gons(&g, 4, GonClass::General, true), Err(Error::Degenerate(_))));
    let s = gen_random(6, 0, 100).unwrap();
    assert!(matches!(count_gons(&s, 2, GonClass::General, true), Err(Error::OutOfRange(_))));
    assert!(matches!(count_gons(&s, 7, GonClass::General, true), Err(Error::OutOfRange(_))));
}

#[test]
fn segment_crossings_agree() {
    for seed in 0..10 {
        let s = gen_random(9, seed, 300).unwrap();
        let cr = oracle::crossing_number(&oracle::coords(&s));
        assert_eq!(segment_crossings(&s).unwrap(), cr);
        assert_eq!(crossing_number(&s).unwrap(), cr);
    }
}
