mod oracle;

use kholes_core::census::*;
use kholes_core::generators::*;
use kholes_core::geom::{convex_hull, is_convex_position, is_general_position};
use kholes_core::{Error, GonClass, Point};
use num_bigint::BigUint;

#[test]
fn convex_family() {
    let t = gen_convex(3, 4).unwrap();
    assert!(is_convex_position(&t.points()).unwrap());
    assert_eq!(crossing_number(&gen_convex(6, 9).unwrap()).unwrap(), 15);
    assert_eq!(polygonization_count(&gen_convex(10, 2).unwrap()).unwrap(), BigUint::from(1u8));
}

#[test]
fn grid_family() {
    assert_eq!(gen_grid(2).unwrap().len(), 4);
    assert!(!is_general_position(&gen_grid(3).unwrap()));
    let g = gen_grid(9).unwrap();
    let row = g.points().iter().filter(|p| p.y == 0.into()).count();
    assert_eq!(row, 9);
    assert!(gen_grid(1).is_err());
}

#[test]
fn perturbed_grid_is_generic() {
    for seed in 0..5 {
        let s = gen_perturbed_grid(3, seed).unwrap();
        assert_eq!(s.len(), 9);
        assert!(is_general_position(&s));
    }
}

#[test]
fn double_chain_family() {
    let dc = gen_double_chain(8).unwrap();
    assert_eq!(convex_hull(&dc).unwrap().len(), 4);
    let pts = dc.points();
    let (lower, upper): (Vec<Point>, Vec<Point>) = pts.iter().cloned().partition(|p| p.y >= 0.into());
    assert!(is_convex_position(&lower).unwrap() && is_convex_position(&upper).unwrap());
    let polys = polygonization_count(&dc).unwrap();
    let mut oracle_count = 0u128;
    let p = oracle::coords(&dc);
    for rest in oracle::permutations(&(1..8).collect::<Vec<_>>()) {
        if rest[0] < rest[6] {
            let mut cyc = vec![0];
            cyc.extend(rest);
            if oracle::simple(&p, &cyc) {
                oracle_count += 1;
            }
        }
    }
    assert_eq!(polys, BigUint::from(oracle_count));
    assert!(oracle_count > 1);
    let dc6 = gen_double_chain(6).unwrap();
    assert!(gon_tally(&dc6, 5, true).unwrap().general() >= 6);
    assert!(matches!(gen_double_chain(7), Err(Error::OutOfRange(_))));
}

#[test]
fn horton_family() {
    let h8 = gen_horton(8).unwrap();
    assert!(is_general_position(&h8));
    let h16 = gen_horton(16).unwrap();
    assert_eq!(count_gons(&h16, 7, GonClass::Convex, true).unwrap().count, BigUint::from(0u8));
    assert!(gen_horton(12).is_err());
}

#[test]
fn cluster_family() {
    let s = gen_cluster_fig5(16, 4).unwrap();
    assert!(is_general_position(&s));
    let nc = gon_tally(&s, 4, true).unwrap().nonconvex;
    assert!(nc > 0);
    assert!(nc <= 16 * 15 * 14);
    assert!(gen_cluster_fig5(18, 4).is_err());
    assert!(gen_cluster_fig5(12, 4).is_err());
}

#[test]
fn random_family() {
    assert!(matches!(gen_random(10, 0, 50), Err(Error::OutOfRange(_))));
    for seed in 0..20 {
        let s = gen_random(10, seed, default_box(10)).unwrap();
        assert!(is_general_position(&s));
        assert!(find_convex_hole(&s, 5).unwrap().is_some());
        assert!(find_convex_gon(&s.subset(&[0, 1, 2, 3, 4]).unwrap(), 4).unwrap().is_some());
    }
}

#[test]
fn spec_dispatch() {
    let mut spec = GeneratorSpec::new(Family::ClusterFig5, 16, 0);
    spec.k = 4;
    assert_eq!(spec.generate().unwrap().points(), gen_cluster_fig5(16, 4).unwrap().points());
    let spec = GeneratorSpec::new(Family::Random, 8, 3);
    assert_eq!(spec.generate().unwrap().points(), gen_random(8, 3, default_box(8)).unwrap().points());
    assert_eq!("double-chain".parse::<Family>().unwrap(), Family::DoubleChain);
}
