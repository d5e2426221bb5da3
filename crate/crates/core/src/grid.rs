//! Exact counts and identities on the integer grid `{0..m-1}²`.
//!
//! Distances on the grid are L∞: a segment with coordinate differences
//! `(dx, dy)` has length `max(|dx|, |dy|)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::combin::fold_subsets;
use crate::geom::{hull_indices, on_segment, strictly_inside_hull, winding_number, Orientation, Predicates, SmallKernel};
use crate::polygonize::Polygonizer;
use crate::{Error, Result};

pub type Lattice = (i64, i64);

/// The m×m grid. Point `(x, y)` has index `x·m + y`, matching
/// [`crate::generators::gen_grid`] and `gen_perturbed_grid`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub m: usize,
}

impl GridSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::OutOfRange(format!("grid side m >= 2, got {m}")));
        }
        Ok(GridSpec { m })
    }

    pub fn len(&self) -> usize {
        self.m * self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: Lattice) -> bool {
        let m = self.m as i64;
        (0..m).contains(&p.0) && (0..m).contains(&p.1)
    }

    pub fn index(&self, p: Lattice) -> usize {
        p.0 as usize * self.m + p.1 as usize
    }

    pub fn point(&self, i: usize) -> Lattice {
        ((i / self.m) as i64, (i % self.m) as i64)
    }

    pub fn coords(&self) -> Vec<[i64; 2]> {
        (0..self.len()).map(|i| self.point(i)).map(|(x, y)| [x, y]).collect()
    }

    fn check(&self, p: Lattice) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{p:?} outside the {0}x{0} grid", self.m)))
        }
    }
}

/// Primitive direction of a lattice segment, normalised so that the first
/// non-zero coordinate is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlopeVector {
    pub dx: i64,
    pub dy: i64,
}

impl SlopeVector {
    pub fn of(p: Lattice, q: Lattice) -> Option<Self> {
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        if dx == 0 && dy == 0 {
            return None;
        }
        let g = dx.gcd(&dy);
        let (mut dx, mut dy) = (dx / g, dy / g);
        if dx < 0 || (dx == 0 && dy < 0) {
            (dx, dy) = (-dx, -dy);
        }
        Some(SlopeVector { dx, dy })
    }

    /// L∞ length.
    pub fn length(&self) -> i64 {
        self.dx.abs().max(self.dy.abs())
    }
}

/// A lattice segment with no lattice point in its relative interior.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeSegment {
    p: Lattice,
    q: Lattice,
}

impl PrimeSegment {
    pub fn new(p: Lattice, q: Lattice) -> Result<Self> {
        if is_prime_segment(p, q) {
            Ok(PrimeSegment { p, q })
        } else {
            Err(Error::Precondition(format!("{p:?}-{q:?} is not a prime segment")))
        }
    }

    pub fn endpoints(&self) -> (Lattice, Lattice) {
        (self.p, self.q)
    }

    pub fn slope(&self) -> SlopeVector {
        SlopeVector::of(self.p, self.q).expect("prime segments have distinct ends")
    }
}

pub fn is_prime_segment(p: Lattice, q: Lattice) -> bool {
    p != q && (q.0 - p.0).gcd(&(q.1 - p.1)) == 1
}

/// Number of grid points on the line through `p` and `q`.
pub fn collinear_grid_points(grid: GridSpec, p: Lattice, q: Lattice) -> Result<usize> {
    grid.check(p)?;
    grid.check(q)?;
    let v = SlopeVector::of(p, q).ok_or_else(|| Error::Degenerate("p = q".into()))?;
    let mut count = 1;
    for sign in [1, -1] {
        let mut r = (p.0 + sign * v.dx, p.1 + sign * v.dy);
        while grid.contains(r) {
            count += 1;
            r = (r.0 + sign * v.dx, r.1 + sign * v.dy);
        }
    }
    Ok(count)
}

/// The line through `p` and `q` meets two opposite sides of the square
/// `[0, m-1]²` (closed sides).
pub fn is_cutting_line(grid: GridSpec, p: Lattice, q: Lattice) -> bool {
    let Some(v) = SlopeVector::of(p, q) else { return false };
    let hi = grid.m as i64 - 1;
    // value of the line's free coordinate at the two sides, as num / den
    let crosses = |(px, py): Lattice, (dx, dy): (i64, i64)| {
        if dx == 0 {
            return false;
        }
        // y(x) = py + (x - px)·dy/dx, checked at x = 0 and x = hi
        [0, hi].iter().all(|&x| {
            let num = py * dx + (x - px) * dy;
            let (lo_ok, hi_ok) = if dx > 0 { (num >= 0, num <= hi * dx) } else { (num <= 0, num >= hi * dx) };
            lo_ok && hi_ok
        })
    };
    crosses(p, (v.dx, v.dy)) || crosses((p.1, p.0), (v.dy, v.dx))
}

/// Euler's totient by trial factorisation.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1, "phi is defined for d >= 1");
    let (mut n, mut phi, mut f) = (d, d, 2u64);
    while f * f <= n {
        if n % f == 0 {
            while n % f == 0 {
                n /= f;
            }
            phi -= phi / f;
        }
        f += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Grid points `q` at L∞ distance `d` from `p` with `pq` prime. For `p` in
/// the central subgrid and `3d < m` this is `8 φ(d)`.
pub fn prime_partners_at_distance(grid: GridSpec, p: Lattice, d: i64) -> Result<u64> {
    grid.check(p)?;
    let m = grid.m as i64;
    let c = m / 3;
    let central = (c..m - c).contains(&p.0) && (c..m - c).contains(&p.1);
    if !central || d < 1 || 3 * d >= m {
        return Err(Error::Precondition(format!("p = {p:?}, d = {d} on a grid of side {m}")));
    }
    let mut count = 0;
    for dx in -d..=d {
        for dy in -d..=d {
            if dx.abs().max(dy.abs()) == d && is_prime_segment(p, (p.0 + dx, p.1 + dy)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Largest k accepted by [`count_prime_k_holes`] without `allow_large`.
pub const PRIME_HOLE_K_CAP: usize = 6;

fn check_hole_k(grid: GridSpec, k: usize, allow_large: bool) -> Result<()> {
    if k < 3 || k > grid.len() || (k > PRIME_HOLE_K_CAP && !allow_large) {
        return Err(Error::OutOfRange(format!("k = {k} for prime holes (cap {PRIME_HOLE_K_CAP})")));
    }
    Ok(())
}

/// Calls `f` with every prime k-hole of the subset `sub`.
fn prime_holes_on<K: Predicates + ?Sized>(
    ker: &K,
    grid: GridSpec,
    sub: &[usize],
    poly: &mut Polygonizer,
    inside: &mut Vec<usize>,
    mut f: impl FnMut(&[usize]),
) {
    let hull = hull_indices(ker, sub);
    if hull.len() < 3 {
        return;
    }
    inside.clear();
    let mut it = sub.iter().peekable();
    for p in 0..ker.len() {
        if it.peek() == Some(&&p) {
            it.next();
        } else if strictly_inside_hull(ker, &hull, p) {
            inside.push(p);
        }
    }
    let prime = |a: usize, b: usize| is_prime_segment(grid.point(a), grid.point(b));
    // prime edges carry no lattice point besides their ends, so every other
    // grid point is off the boundary and the winding number decides
    poly.for_each_with_edges(ker, sub, prime, |cyc| {
        if inside.iter().all(|&p| winding_number(ker, cyc, p) == 0) {
            f(cyc);
        }
        true
    });
}

/// Simple k-gons on the grid with prime edges and no grid point in their
/// interior. Straight (180°) vertices are allowed.
pub fn count_prime_k_holes(grid: GridSpec, k: usize, allow_large: bool) -> Result<u128> {
    check_hole_k(grid, k, allow_large)?;
    let coords = grid.coords();
    let ker = &SmallKernel(&coords);
    Ok(fold_subsets(
        grid.len(),
        k,
        || (0u128, Polygonizer::new(), Vec::new()),
        |(count, poly, inside), sub| prime_holes_on(ker, grid, sub, poly, inside, |_| *count += 1),
        |a, b| (a.0 + b.0, a.1, a.2),
    )
    .0)
}

/// All prime k-holes as index cycles, in subset colex order.
pub fn prime_k_holes(grid: GridSpec, k: usize, allow_large: bool) -> Result<Vec<Vec<usize>>> {
    check_hole_k(grid, k, allow_large)?;
    let coords = grid.coords();
    let ker = &SmallKernel(&coords);
    Ok(fold_subsets(
        grid.len(),
        k,
        || (Vec::new(), Polygonizer::new(), Vec::new()),
        |(out, poly, inside), sub| prime_holes_on(ker, grid, sub, poly, inside, |c| out.push(c.to_vec())),
        |mut a, b| {
            a.0.extend(b.0);
            a
        },
    )
    .0)
}

/// Outcome of the row-structured construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowHoleReport {
    pub m: usize,
    pub k: usize,
    pub candidates: u128,
    /// Candidates that passed validation as distinct prime k-holes.
    pub valid: u128,
    /// `(m - ⌊k/2⌋)(m - 1)^(⌊k/2⌋ + 1)`.
    pub bound: u128,
    /// Rejected candidates, as lattice cycles.
    pub violations: Vec<Vec<Lattice>>,
}

impl RowHoleReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.valid >= self.bound
    }
}

/// Prime k-holes spanned by `⌊k/2⌋ + 1` consecutive rows: one point in the
/// lowest row, two horizontally adjacent points in each middle row, and one
/// point (k even) or an adjacent pair (k odd) in the top row.
///
/// Each candidate is traversed bottom point, right points upward, top, left
/// points downward, then checked from scratch for simplicity, prime edges,
/// interior-emptiness and distinctness.
pub fn count_row_structured_prime_holes(grid: GridSpec, k: usize) -> Result<RowHoleReport> {
    let m = grid.m;
    let rows = k / 2 + 1;
    if k < 3 || rows > m {
        return Err(Error::OutOfRange(format!("k = {k} on a grid of side {m}")));
    }
    let top_pair = k % 2 == 1;
    let middle = rows - 2;
    let coords = grid.coords();
    let ker = &SmallKernel(&coords);
    let mut report = RowHoleReport {
        m,
        k,
        candidates: 0,
        valid: 0,
        bound: (m - k / 2) as u128 * ((m - 1) as u128).pow(rows as u32),
        violations: Vec::new(),
    };
    let mut seen = BTreeSet::new();
    let mi = m as i64;
    let top_choices = if top_pair { mi - 1 } else { mi };
    // odometer over (bottom x, middle pair starts.., top x)
    let mut digits = alloc::vec![0i64; middle + 2];
    let radix: Vec<i64> = (0..middle + 2)
        .map(|i| if i == 0 { mi } else if i <= middle { mi - 1 } else { top_choices })
        .collect();
    for y0 in 0..=(mi - rows as i64) {
        digits.iter_mut().for_each(|d| *d = 0);
        loop {
            let mut right = Vec::with_capacity(rows);
            let mut left = Vec::with_capacity(rows);
            for (r, &x) in digits[1..=middle].iter().enumerate() {
                let y = y0 + 1 + r as i64;
                right.push((x + 1, y));
                left.push((x, y));
            }
            let ytop = y0 + rows as i64 - 1;
            let xt = digits[middle + 1];
            let mut cycle: Vec<Lattice> = alloc::vec![(digits[0], y0)];
            cycle.extend(right.iter().copied());
            if top_pair {
                cycle.push((xt + 1, ytop));
                cycle.push((xt, ytop));
            } else {
                cycle.push((xt, ytop));
            }
            cycle.extend(left.iter().rev().copied());
            report.candidates += 1;
            let idx: Vec<usize> = cycle.iter().map(|&p| grid.index(p)).collect();
            let mut key = idx.clone();
            key.sort_unstable();
            if is_prime_hole(ker, grid, &idx) && seen.insert(key) {
                report.valid += 1;
            } else {
                report.violations.push(cycle);
            }
            // advance
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < radix[i] {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
    }
    Ok(report)
}

/// Independent check of a single cycle: distinct vertices, simple, all
/// edges prime, no grid point strictly inside.
pub fn is_prime_hole<K: Predicates + ?Sized>(ker: &K, grid: GridSpec, cycle: &[usize]) -> bool {
    let n = cycle.len();
    let mut s = cycle.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != n || !crate::geom::is_simple_cycle(ker, cycle) {
        return false;
    }
    if !(0..n).all(|i| is_prime_segment(grid.point(cycle[i]), grid.point(cycle[(i + 1) % n]))) {
        return false;
    }
    let Some(region) = crate::geom::CycleRegion::new(ker, cycle) else { return false };
    (0..ker.len()).all(|p| cycle.contains(&p) || !region.contains_strictly(ker, p))
}

/// Interior-empty triangles on a grid segment.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SegmentTriangles {
    /// Points `r` off the line `pq` with no grid point inside `pqr`.
    pub nondegenerate: u64,
    /// Grid points on the line `pq` other than `p`, `q`; such a triangle
    /// is flat and trivially interior-empty.
    pub degenerate: u64,
}

impl SegmentTriangles {
    pub fn total(&self) -> u64 {
        self.nondegenerate + self.degenerate
    }
}

pub fn grid_segment_empty_triangles(grid: GridSpec, p: Lattice, q: Lattice) -> Result<SegmentTriangles> {
    grid.check(p)?;
    grid.check(q)?;
    if p == q {
        return Err(Error::Degenerate("p = q".into()));
    }
    let coords = grid.coords();
    let ker = &SmallKernel(&coords);
    let (a, b) = (grid.index(p), grid.index(q));
    let mut out = SegmentTriangles::default();
    for r in 0..grid.len() {
        if r == a || r == b {
            continue;
        }
        if ker.orient(a, b, r) == Orientation::Collinear {
            out.degenerate += 1;
            continue;
        }
        let tri = hull_indices(ker, &[a, b, r]);
        let empty = (0..grid.len()).all(|x| !strictly_inside_hull(ker, &tri, x));
        if empty {
            out.nondegenerate += 1;
        }
    }
    Ok(out)
}

/// Maximum of [`SegmentTriangles::total`] over all grid segments.
pub fn max_segment_empty_triangles(grid: GridSpec) -> u64 {
    let n = grid.len();
    let mut best = 0;
    for a in 0..n {
        for b in a + 1..n {
            if let Ok(t) = grid_segment_empty_triangles(grid, grid.point(a), grid.point(b)) {
                best = best.max(t.total());
            }
        }
    }
    best
}

/// A point strictly between `p` and `q` on the grid, if any.
pub fn lattice_point_between(grid: GridSpec, p: Lattice, q: Lattice) -> Option<Lattice> {
    let coords = grid.coords();
    let ker = &SmallKernel(&coords);
    let (a, b) = (grid.index(p), grid.index(q));
    (0..grid.len()).filter(|&r| r != a && r != b).find(|&r| on_segment(ker, r, a, b)).map(|r| grid.point(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_segments() {
        assert!(is_prime_segment((0, 0), (1, 2)));
        assert!(!is_prime_segment((0, 0), (2, 2)));
        assert!(is_prime_segment((0, 0), (3, 5)));
        assert!(!is_prime_segment((0, 0), (0, 0)));
        assert!(is_prime_segment((3, 1), (2, 1)));
        assert_eq!(PrimeSegment::new((2, 2), (1, 4)).unwrap().slope(), SlopeVector { dx: 1, dy: -2 });
    }

    #[test]
    fn phi_values() {
        let phi: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(phi, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn collinear_counts() {
        let g = GridSpec::new(9).unwrap();
        assert_eq!(collinear_grid_points(g, (0, 0), (1, 0)).unwrap(), 9);
        assert_eq!(collinear_grid_points(g, (0, 0), (2, 3)).unwrap(), 3);
        assert_eq!(collinear_grid_points(g, (4, 4), (5, 5)).unwrap(), 9);
        assert!(is_cutting_line(g, (0, 0), (3, 1)));
        assert!(!is_cutting_line(g, (0, 5), (1, 8)));
    }

    #[test]
    fn partners() {
        let g9 = GridSpec::new(9).unwrap();
        assert_eq!(prime_partners_at_distance(g9, (4, 4), 1).unwrap(), 8);
        assert_eq!(prime_partners_at_distance(g9, (4, 4), 2).unwrap(), 8);
        assert!(prime_partners_at_distance(g9, (4, 4), 3).is_err());
        assert!(prime_partners_at_distance(g9, (0, 4), 1).is_err());
        let g12 = GridSpec::new(12).unwrap();
        assert_eq!(prime_partners_at_distance(g12, (6, 6), 3).unwrap(), 16);
    }

    #[test]
    fn small_grid_segment_triangles() {
        let g = GridSpec::new(2).unwrap();
        let t = grid_segment_empty_triangles(g, (0, 0), (1, 0)).unwrap();
        assert_eq!(t, SegmentTriangles { nondegenerate: 2, degenerate: 0 });
    }

    #[test]
    fn two_by_two_prime_holes() {
        let g = GridSpec::new(2).unwrap();
        assert_eq!(count_prime_k_holes(g, 4, false).unwrap(), 1);
        assert_eq!(count_prime_k_holes(g, 3, false).unwrap(), 4);
        assert!(count_prime_k_holes(GridSpec::new(4).unwrap(), 7, false).is_err());
    }

    #[test]
    fn row_structured_small() {
        let r = count_row_structured_prime_holes(GridSpec::new(4).unwrap(), 4).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.bound, 54);
        assert_eq!(r.candidates, 2 * 4 * 3 * 4);
        assert!(r.holds());
    }
}
