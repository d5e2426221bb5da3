//! Exact counts of k-gons, k-holes, islands and related quantities.
//!
//! Everything here enumerates k-subsets (see [`crate::combin`]) and, for
//! non-convex subsets, their polygonizations. Counts are exact.

use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::combin::{find_subset, fold_subsets};
use crate::geom::{
    ccw_cycle, cycle_orientation, hull_indices, in_closed_hull, segments_intersect, strictly_inside_hull,
    winding_number, Orientation, PointSet, Predicates,
};
use crate::polygonize::Polygonizer;
use crate::{with_kernel, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GonClass {
    Convex,
    Nonconvex,
    General,
}

impl GonClass {
    pub const ALL: [GonClass; 3] = [GonClass::Convex, GonClass::Nonconvex, GonClass::General];

    pub fn as_str(self) -> &'static str {
        match self {
            GonClass::Convex => "convex",
            GonClass::Nonconvex => "nonconvex",
            GonClass::General => "general",
        }
    }
}

impl fmt::Display for GonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GonClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convex" => Ok(GonClass::Convex),
            "nonconvex" | "non-convex" => Ok(GonClass::Nonconvex),
            "general" => Ok(GonClass::General),
            _ => Err(Error::OutOfRange(format!("unknown class {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GonCount {
    pub k: usize,
    pub class: GonClass,
    /// Holes (interior-empty) rather than all gons.
    pub empty_only: bool,
    pub count: BigUint,
}

/// Convex and non-convex totals from one pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GonTally {
    pub convex: u128,
    pub nonconvex: u128,
}

impl GonTally {
    pub fn general(&self) -> u128 {
        self.convex + self.nonconvex
    }

    pub fn get(&self, class: GonClass) -> u128 {
        match class {
            GonClass::Convex => self.convex,
            GonClass::Nonconvex => self.nonconvex,
            GonClass::General => self.general(),
        }
    }
}

fn check_k(s: &PointSet, k: usize, min: usize) -> Result<()> {
    if k < min || k > s.len() {
        return Err(Error::OutOfRange(format!("k = {k} outside {min}..={}", s.len())));
    }
    Ok(())
}

/// Scratch space reused across subsets by one worker.
struct Scratch {
    acc: GonTally,
    poly: Polygonizer,
    inside: Vec<usize>,
}

/// Points of `0..n` not in the sorted `subset` lying strictly inside `hull`.
fn interior_points<K: Predicates + ?Sized>(k: &K, subset: &[usize], hull: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let mut it = subset.iter().peekable();
    for p in 0..k.len() {
        if it.peek() == Some(&&p) {
            it.next();
            continue;
        }
        if strictly_inside_hull(k, hull, p) {
            out.push(p);
        }
    }
}

fn tally_subset<K: Predicates + ?Sized>(k: &K, sub: &[usize], want: [bool; 2], empty_only: bool, s: &mut Scratch) {
    let hull = hull_indices(k, sub);
    let convex = hull.len() == sub.len();
    if (convex && !want[0]) || (!convex && !want[1]) {
        return;
    }
    if empty_only {
        interior_points(k, sub, &hull, &mut s.inside);
    }
    if convex {
        if !empty_only || s.inside.is_empty() {
            s.acc.convex += 1;
        }
        return;
    }
    let inside = &s.inside;
    let mut found = 0u128;
    s.poly.for_each(k, sub, |cycle| {
        if !empty_only || inside.iter().all(|&p| winding_number(k, cycle, p) == 0) {
            found += 1;
        }
        true
    });
    s.acc.nonconvex += found;
}

fn tally(s: &PointSet, k: usize, want: [bool; 2], empty_only: bool) -> GonTally {
    with_kernel!(s.coords(), ker => {
        fold_subsets(
            s.len(),
            k,
            || Scratch { acc: GonTally::default(), poly: Polygonizer::new(), inside: Vec::new() },
            |sc, sub| tally_subset(ker, sub, want, empty_only, sc),
            |mut a, b| {
                a.acc.convex += b.acc.convex;
                a.acc.nonconvex += b.acc.nonconvex;
                a
            },
        )
        .acc
    })
}

/// Convex and non-convex k-gon (or k-hole) counts in one enumeration.
pub fn gon_tally(s: &PointSet, k: usize, empty_only: bool) -> Result<GonTally> {
    s.require_general_position()?;
    check_k(s, k, 3)?;
    Ok(tally(s, k, [true, true], empty_only))
}

/// Number of simple polygons on `k` points of `s` of the given class; with
/// `empty_only`, only those with no point of `s` in their interior.
pub fn count_gons(s: &PointSet, k: usize, class: GonClass, empty_only: bool) -> Result<GonCount> {
    s.require_general_position()?;
    check_k(s, k, 3)?;
    let want = match class {
        GonClass::Convex => [true, false],
        GonClass::Nonconvex => [false, true],
        GonClass::General => [true, true],
    };
    let t = tally(s, k, want, empty_only);
    Ok(GonCount { k, class, empty_only, count: t.get(class).into() })
}

/// Rectilinear crossing number: the number of 4-subsets in convex position.
pub fn crossing_number(s: &PointSet) -> Result<u128> {
    s.require_general_position()?;
    if s.len() < 4 {
        return Ok(0);
    }
    Ok(tally(s, 4, [true, false], false).convex)
}

/// Pairs of segments spanned by `s` that cross, counted edge pair by edge
/// pair. Agrees with [`crossing_number`] in general position.
pub fn segment_crossings(s: &PointSet) -> Result<u128> {
    s.require_general_position()?;
    let n = s.len();
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Ok(with_kernel!(s.coords(), ker => {
        let mut count = 0u128;
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a != c && a != d && b != c && b != d && segments_intersect(ker, a, b, c, d) {
                    count += 1;
                }
            }
        }
        count
    }))
}

/// Number of simple polygons through all points of `s`.
pub fn polygonization_count(s: &PointSet) -> Result<BigUint> {
    count_gons(s, s.len(), GonClass::General, false).map(|c| c.count)
}

/// Number of k-subsets whose convex hull contains no other point of `s`.
///
/// Containment is closed, so sets with collinear points are handled too.
pub fn count_islands(s: &PointSet, k: usize) -> Result<u128> {
    check_k(s, k, 1)?;
    let n = s.len();
    Ok(with_kernel!(s.coords(), ker => fold_subsets(
        n,
        k,
        || 0u128,
        |acc, sub| {
            let hull = hull_indices(ker, sub);
            let mut it = sub.iter().peekable();
            let isolated = (0..n).all(|p| {
                if it.peek() == Some(&&p) {
                    it.next();
                    return true;
                }
                !in_closed_hull(ker, &hull, p)
            });
            *acc += isolated as u128;
        },
        |a, b| a + b,
    )))
}

/// Number of points `r` for which the triangle `p q r` is non-degenerate and
/// contains no other point of `s` (closed).
pub fn empty_triangles_on_segment(s: &PointSet, p: usize, q: usize) -> Result<u128> {
    let n = s.len();
    if p >= n || q >= n || p == q {
        return Err(Error::OutOfRange(format!("segment ({p}, {q}) in a set of {n} points")));
    }
    Ok(with_kernel!(s.coords(), ker => {
        let mut count = 0u128;
        for r in 0..n {
            if r == p || r == q || ker.orient(p, q, r) == Orientation::Collinear {
                continue;
            }
            let tri = hull_indices(ker, &[p, q, r]);
            if (0..n).all(|x| x == p || x == q || x == r || !in_closed_hull(ker, &tri, x)) {
                count += 1;
            }
        }
        count
    }))
}

#[derive(Default)]
struct RepAcc {
    count: u128,
    violation: Option<Vec<usize>>,
    poly: Polygonizer,
}

/// Number of sequences `(v1, .., vk)` where `v1..v(k-1)` is a
/// counter-clockwise simple polygon and appending `vk` gives a
/// counter-clockwise non-convex k-hole with `vk` reflex.
///
/// Every non-convex k-hole is counted once per reflex vertex, so the result
/// bounds the number of non-convex k-holes from above. Fails with
/// [`Error::Invariant`] if some prefix admits two completions.
pub fn representation_count_nonconvex(s: &PointSet, k: usize) -> Result<BigUint> {
    s.require_general_position()?;
    check_k(s, k, 4)?;
    let n = s.len();
    let acc = with_kernel!(s.coords(), ker => fold_subsets(
        n,
        k - 1,
        RepAcc::default,
        |acc, sub| {
            let RepAcc { count, violation, poly } = acc;
            poly.for_each(ker, sub, |cycle| {
                let ccw = ccw_cycle(ker, cycle);
                let m = ccw.len();
                for r in 0..m {
                    let prefix: Vec<usize> = (0..m).map(|i| ccw[(r + i) % m]).collect();
                    let mut completions = 0;
                    for w in 0..n {
                        if sub.binary_search(&w).is_err() && completes(ker, &prefix, w) {
                            completions += 1;
                        }
                    }
                    if completions > 1 && violation.is_none() {
                        *violation = Some(prefix);
                    }
                    *count += completions;
                }
                true
            });
        },
        |mut a, b| {
            a.count += b.count;
            if a.violation.is_none() {
                a.violation = b.violation;
            }
            a
        },
    ));
    if let Some(prefix) = acc.violation {
        return Err(Error::Invariant(format!("prefix {prefix:?} has more than one reflex completion")));
    }
    Ok(acc.count.into())
}

/// `prefix + [w]` is a counter-clockwise simple empty polygon with `w` reflex.
fn completes<K: Predicates + ?Sized>(k: &K, prefix: &[usize], w: usize) -> bool {
    let m = prefix.len();
    let (first, last) = (prefix[0], prefix[m - 1]);
    if k.orient(last, w, first) != Orientation::Cw {
        return false;
    }
    // new edges (last, w) and (w, first) against the non-adjacent prefix edges
    for i in 0..m - 1 {
        let (a, b) = (prefix[i], prefix[i + 1]);
        if i + 2 < m && segments_intersect(k, a, b, last, w) {
            return false;
        }
        if i > 0 && segments_intersect(k, a, b, w, first) {
            return false;
        }
    }
    let mut cycle = prefix.to_vec();
    cycle.push(w);
    if cycle_orientation(k, &cycle) != Orientation::Ccw {
        return false;
    }
    (0..k.len()).all(|p| cycle.contains(&p) || winding_number(k, &cycle, p) == 0)
}

/// A k-hole of `s` on `p_i`, `p_j` (positions in x-sorted order) and the
/// `k - 2` points strictly between them closest to the line `p_i p_j`.
///
/// Returns the hole as a cycle of point indices, or `None` if that k-set
/// carries no hole. Ties in x are broken by y; ties in distance by index.
pub fn khole_witness(s: &PointSet, k: usize, i: usize, j: usize) -> Result<Option<Vec<usize>>> {
    s.require_general_position()?;
    check_k(s, k, 3)?;
    if !(i < j && j < s.len() && j - i >= k - 1) {
        return Err(Error::OutOfRange(format!("pair ({i}, {j}) for k = {k}")));
    }
    Ok(with_kernel!(s.coords(), ker => witness_in(ker, &x_order(ker), k, i, j)))
}

fn x_order<K: Predicates + ?Sized>(k: &K) -> Vec<usize> {
    let mut order: Vec<usize> = (0..k.len()).collect();
    order.sort_by(|&a, &b| k.cmp_xy(a, b));
    order
}

fn witness_in<K: Predicates + ?Sized>(k: &K, order: &[usize], size: usize, i: usize, j: usize) -> Option<Vec<usize>> {
    let (a, b) = (order[i], order[j]);
    let mut slab: Vec<usize> = order[i + 1..j].to_vec();
    slab.sort_by(|&c, &d| k.cmp_line_dist(a, b, c, d).then(c.cmp(&d)));
    let mut pts = vec![a, b];
    pts.extend_from_slice(&slab[..size - 2]);
    let mut chosen = pts.clone();
    chosen.sort_unstable();
    let hull = hull_indices(k, &chosen);
    let mut inside = Vec::new();
    interior_points(k, &chosen, &hull, &mut inside);
    let mut hit = None;
    Polygonizer::new().for_each(k, &pts, |cycle| {
        if inside.iter().all(|&p| winding_number(k, cycle, p) == 0) {
            hit = Some(cycle.to_vec());
            return false;
        }
        true
    });
    hit
}

/// Number of x-sorted pairs `(i, j)` with `j - i >= k - 1` for which
/// [`khole_witness`] finds a hole. Each witness is a distinct k-hole, so
/// this is a lower bound on the number of k-holes.
pub fn min_khole_witnesses(s: &PointSet, k: usize) -> Result<u128> {
    s.require_general_position()?;
    check_k(s, k, 3)?;
    let n = s.len();
    Ok(with_kernel!(s.coords(), ker => {
        let order = x_order(ker);
        let mut found = 0u128;
        for i in 0..n {
            for j in i + k - 1..n {
                found += witness_in(ker, &order, k, i, j).is_some() as u128;
            }
        }
        found
    }))
}

/// The first k-subset (colex order) in convex position whose hull is empty.
pub fn find_convex_hole(s: &PointSet, k: usize) -> Result<Option<Vec<usize>>> {
    s.require_general_position()?;
    check_k(s, k, 3)?;
    Ok(with_kernel!(s.coords(), ker => find_subset(s.len(), k, Vec::new, |inside, sub| {
        let hull = hull_indices(ker, sub);
        if hull.len() != sub.len() {
            return None;
        }
        interior_points(ker, sub, &hull, inside);
        inside.is_empty().then_some(hull)
    })))
}

/// The first k-subset (colex order) in convex position.
pub fn find_convex_gon(s: &PointSet, k: usize) -> Result<Option<Vec<usize>>> {
    s.require_general_position()?;
    check_k(s, k, 3)?;
    Ok(with_kernel!(s.coords(), ker => find_subset(s.len(), k, || (), |_, sub| {
        let hull = hull_indices(ker, sub);
        (hull.len() == sub.len()).then_some(hull)
    })))
}

impl fmt::Display for GonCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = if self.empty_only { "holes" } else { "gons" };
        write!(f, "{} {}-{}: {}", self.class, self.k, what, self.count)
    }
}

