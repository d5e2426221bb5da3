mod oracle;

use kholes_core::census::gon_tally;
use kholes_core::generators::{gen_grid, gen_perturbed_grid};
use kholes_core::geom::{is_simple_cycle, CycleRegion, SmallKernel};
use kholes_core::grid::*;
use oracle::{cross, P};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn lattice(grid: GridSpec) -> Vec<P> {
    (0..grid.len()).map(|i| { let (x, y) = grid.point(i); (x as i128, y as i128) }).collect()
}

fn on_closed_segment(a: P, b: P, q: P) -> bool {
    cross(a, b, q) == 0 && q.0 >= a.0.min(b.0) && q.0 <= a.0.max(b.0) && q.1 >= a.1.min(b.1) && q.1 <= a.1.max(b.1)
}

fn closed_segments_meet(a: P, b: P, c: P, d: P) -> bool {
    let s = |v: i128| v.signum();
    let (d1, d2) = (s(cross(a, b, c)), s(cross(a, b, d)));
    let (d3, d4) = (s(cross(c, d, a)), s(cross(c, d, b)));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    on_closed_segment(a, b, c) || on_closed_segment(a, b, d) || on_closed_segment(c, d, a) || on_closed_segment(c, d, b)
}

/// Simple cycle allowing straight vertices: non-adjacent edges are disjoint,
/// adjacent edges share only their vertex, and the area is nonzero.
fn oracle_simple(p: &[P], cyc: &[usize]) -> bool {
    let k = cyc.len();
    let e = |i: usize| (p[cyc[i % k]], p[cyc[(i + 1) % k]]);
    for i in 0..k {
        let (a, b) = e(i);
        let c = p[cyc[(i + 2) % k]];
        // next edge folds back onto this one
        if cross(a, b, c) == 0 && (a.0 - b.0) * (c.0 - b.0) + (a.1 - b.1) * (c.1 - b.1) > 0 {
            return false;
        }
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            let (c, d) = e(j);
            if closed_segments_meet(a, b, c, d) {
                return false;
            }
        }
    }
    let area: i128 = (0..k).map(|i| { let (a, b) = e(i); a.0 * b.1 - a.1 * b.0 }).sum();
    area != 0
}

/// Prime k-holes by subsets × cyclic orders, each undirected cycle once.
fn oracle_prime_holes(m: usize, k: usize) -> u128 {
    let grid = GridSpec::new(m).unwrap();
    let p = lattice(grid);
    let mut count = 0;
    for sub in oracle::subsets(p.len(), k) {
        for rest in oracle::permutations(&sub[1..]) {
            if rest[0] > rest[k - 2] {
                continue;
            }
            let mut cyc = vec![sub[0]];
            cyc.extend(rest);
            let prime = (0..k).all(|i| {
                let (a, b) = (p[cyc[i]], p[cyc[(i + 1) % k]]);
                gcd((a.0 - b.0) as i64, (a.1 - b.1) as i64) == 1
            });
            if !prime || !oracle_simple(&p, &cyc) {
                continue;
            }
            // prime edges leave every other lattice point off the boundary
            let empty = (0..p.len()).all(|q| cyc.contains(&q) || !oracle::inside(&p, &cyc, p[q]));
            if empty {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn prime_segments_match_scan() {
    for m in 2..=6usize {
        let grid = GridSpec::new(m).unwrap();
        for a in 0..grid.len() {
            for b in 0..grid.len() {
                if a == b {
                    continue;
                }
                let (p, q) = (grid.point(a), grid.point(b));
                let between = (0..grid.len()).any(|r| {
                    r != a && r != b && on_closed_segment(lattice(grid)[a], lattice(grid)[b], lattice(grid)[r])
                });
                assert_eq!(is_prime_segment(p, q), !between, "{p:?} {q:?}");
                assert_eq!(lattice_point_between(grid, p, q).is_some(), between);
            }
        }
    }
    assert!(is_prime_segment((0, 0), (1, 2)));
    assert!(!is_prime_segment((0, 0), (2, 2)));
    assert!(is_prime_segment((0, 0), (3, 5)));
}

#[test]
fn phi_identity_on_central_points() {
    for m in 4..=15usize {
        let grid = GridSpec::new(m).unwrap();
        let c = (m / 3) as i64;
        let mut checked = 0;
        for x in c..m as i64 - c {
            for y in c..m as i64 - c {
                for d in (1..).take_while(|d| 3 * d < m as i64) {
                    let got = prime_partners_at_distance(grid, (x, y), d).unwrap();
                    let phi = (1..=d).filter(|&a| gcd(a, d) == 1).count() as u64;
                    assert_eq!(got, 8 * phi, "m {m} p ({x},{y}) d {d}");
                    assert_eq!(euler_phi(d as u64), phi);
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }
    let g9 = GridSpec::new(9).unwrap();
    assert_eq!(prime_partners_at_distance(g9, (4, 4), 1).unwrap(), 8);
    assert_eq!(prime_partners_at_distance(g9, (4, 4), 2).unwrap(), 8);
    assert_eq!(prime_partners_at_distance(GridSpec::new(12).unwrap(), (6, 6), 3).unwrap(), 16);
    assert!(prime_partners_at_distance(g9, (0, 0), 1).is_err());
    assert!(prime_partners_at_distance(g9, (4, 4), 3).is_err());
}

#[test]
fn collinear_counts_on_cutting_lines() {
    for m in 2..=12usize {
        let grid = GridSpec::new(m).unwrap();
        let mi = m as i64;
        let mut cutting = 0;
        for a in 0..grid.len() {
            for b in 0..grid.len() {
                let (p, q) = (grid.point(a), grid.point(b));
                if a == b || !is_prime_segment(p, q) {
                    continue;
                }
                let d = SlopeVector::of(p, q).unwrap().length();
                let count = collinear_grid_points(grid, p, q).unwrap() as i64;
                let scan = (0..grid.len()).filter(|&r| cross(lattice(grid)[a], lattice(grid)[b], lattice(grid)[r]) == 0).count() as i64;
                assert_eq!(count, scan);
                assert!(count <= (mi + d - 1) / d, "m {m} {p:?}-{q:?}");
                if is_cutting_line(grid, p, q) {
                    cutting += 1;
                    assert!(count >= mi / d, "m {m} {p:?}-{q:?}: {count} < {}/{d}", mi);
                }
            }
        }
        assert!(cutting > 0);
    }
    let g9 = GridSpec::new(9).unwrap();
    assert_eq!(collinear_grid_points(g9, (0, 0), (1, 0)).unwrap(), 9);
    assert_eq!(collinear_grid_points(g9, (0, 0), (2, 3)).unwrap(), 3);
}

#[test]
fn prime_holes_match_oracle() {
    for m in 2..=5 {
        let grid = GridSpec::new(m).unwrap();
        for k in 3..=4 {
            if m == 5 && k == 3 {
                continue;
            }
            assert_eq!(count_prime_k_holes(grid, k, false).unwrap(), oracle_prime_holes(m, k), "m {m} k {k}");
        }
    }
    let g3 = GridSpec::new(3).unwrap();
    assert_eq!(count_prime_k_holes(g3, 5, false).unwrap(), oracle_prime_holes(3, 5));
    assert!(count_prime_k_holes(g3, 7, false).is_err());
}

#[test]
fn prime_four_holes_grow_superquadratically() {
    let counts: Vec<u128> = (4..=7).map(|m| count_prime_k_holes(GridSpec::new(m).unwrap(), 4, false).unwrap()).collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]), "{counts:?}");
    // n = m², so n² growth alone would give ratio (7/4)^4
    let ratio = counts[3] as f64 / counts[0] as f64;
    assert!(ratio > (7.0f64 / 4.0).powi(4), "{counts:?}");
}

#[test]
fn listed_prime_holes_validate() {
    let grid = GridSpec::new(4).unwrap();
    let coords = grid.coords();
    let ker = &SmallKernel(&coords);
    let holes = prime_k_holes(grid, 4, false).unwrap();
    assert_eq!(holes.len() as u128, count_prime_k_holes(grid, 4, false).unwrap());
    for h in &holes {
        assert!(is_prime_hole(ker, grid, h));
        assert!(is_simple_cycle(ker, h) && CycleRegion::new(ker, h).is_some());
    }
}

#[test]
fn row_structures_are_valid_prime_holes() {
    for (m, k, bound) in [(4, 4, 54), (5, 4, 192), (5, 6, 512)] {
        let r = count_row_structured_prime_holes(GridSpec::new(m).unwrap(), k).unwrap();
        assert_eq!(r.bound, bound);
        assert!(r.violations.is_empty(), "m {m} k {k}: {:?}", &r.violations[..r.violations.len().min(3)]);
        assert_eq!(r.valid, r.candidates);
        assert!(r.holds(), "{r:?}");
    }
}

#[test]
fn perturbation_keeps_prime_holes() {
    for m in 2..=5usize {
        let grid = GridSpec::new(m).unwrap();
        let pg = gen_perturbed_grid(m, 11 + m as u64).unwrap();
        let p = oracle::coords(&pg);
        for k in [4, 5] {
            if k > m * m {
                continue;
            }
            let holes = prime_k_holes(grid, k, false).unwrap();
            for h in &holes {
                assert!(oracle::simple(&p, h), "m {m} k {k} {h:?}");
                assert!((0..p.len()).all(|q| h.contains(&q) || !oracle::inside(&p, h, p[q])), "m {m} k {k} {h:?}");
            }
            let perturbed = gon_tally(&pg, k, true).unwrap().general();
            assert!(perturbed >= holes.len() as u128, "m {m} k {k}");
        }
    }
}

#[test]
fn segment_triangles_match_triple_scan() {
    let grid = GridSpec::new(5).unwrap();
    let p = lattice(grid);
    let n = p.len();
    let strictly_inside = |a: P, b: P, c: P, q: P| {
        let s = [cross(a, b, q), cross(b, c, q), cross(c, a, q)];
        s.iter().all(|&v| v > 0) || s.iter().all(|&v| v < 0)
    };
    let mut best = 0;
    for a in 0..n {
        for b in a + 1..n {
            let mut total = 0u64;
            for r in 0..n {
                if r == a || r == b {
                    continue;
                }
                if (0..n).all(|q| !strictly_inside(p[a], p[b], p[r], p[q])) {
                    total += 1;
                }
            }
            let got = grid_segment_empty_triangles(grid, grid.point(a), grid.point(b)).unwrap();
            assert_eq!(got.total(), total);
            best = best.max(total);
        }
    }
    assert_eq!(max_segment_empty_triangles(grid), best);
    let g2 = GridSpec::new(2).unwrap();
    assert_eq!(grid_segment_empty_triangles(g2, (0, 0), (1, 0)).unwrap(), SegmentTriangles { nondegenerate: 2, degenerate: 0 });
    assert!(gen_grid(3).unwrap().first_collinear_triple().is_some());
}
