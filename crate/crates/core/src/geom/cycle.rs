//! Polygon algorithms over cycles of point indices.

use alloc::vec::Vec;

use super::kernel::{on_segment, segments_intersect, strictly_between, Predicates};
use super::point::{Location, Orientation};

/// Orientation of a cycle, read at its lexicographically smallest vertex.
///
/// For a simple polygon this is the orientation of the boundary.
pub fn cycle_orientation<K: Predicates + ?Sized>(k: &K, cycle: &[usize]) -> Orientation {
    let n = cycle.len();
    let mut m = 0;
    for i in 1..n {
        if k.cmp_xy(cycle[i], cycle[m]).is_lt() {
            m = i;
        }
    }
    k.orient(cycle[(m + n - 1) % n], cycle[m], cycle[(m + 1) % n])
}

/// The cycle traversed counter-clockwise.
pub fn ccw_cycle<K: Predicates + ?Sized>(k: &K, cycle: &[usize]) -> Vec<usize> {
    let mut v = cycle.to_vec();
    if cycle_orientation(k, cycle) == Orientation::Cw {
        v.reverse();
    }
    v
}

/// Adjacent edges `(u, s)` and `(s, w)` only meet in `s`.
#[inline]
pub(crate) fn adjacent_edges_ok<K: Predicates + ?Sized>(k: &K, u: usize, s: usize, w: usize) -> bool {
    k.orient(u, s, w) != Orientation::Collinear || strictly_between(k, u, s, w)
}

/// No two non-adjacent edges meet, and adjacent edges meet only in their
/// shared vertex. Vertices are assumed pairwise distinct.
pub fn is_simple_cycle<K: Predicates + ?Sized>(k: &K, cycle: &[usize]) -> bool {
    let n = cycle.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        let (a, b) = (cycle[i], cycle[(i + 1) % n]);
        if !adjacent_edges_ok(k, a, b, cycle[(i + 2) % n]) {
            return false;
        }
        // non-adjacent edges j > i + 1, skipping the edge that closes onto a
        let last = if i == 0 { n - 1 } else { n };
        for j in i + 2..last {
            if segments_intersect(k, a, b, cycle[j], cycle[(j + 1) % n]) {
                return false;
            }
        }
    }
    true
}

/// Positions of reflex vertices of a counter-clockwise simple cycle.
pub fn reflex_in_cycle<K: Predicates + ?Sized>(k: &K, ccw: &[usize]) -> Vec<usize> {
    let n = ccw.len();
    (0..n)
        .filter(|&i| k.orient(ccw[(i + n - 1) % n], ccw[i], ccw[(i + 1) % n]) == Orientation::Cw)
        .collect()
}

#[inline]
fn in_closed_triangle<K: Predicates + ?Sized>(k: &K, t: [usize; 3], p: usize) -> bool {
    k.orient(t[0], t[1], p) != Orientation::Cw
        && k.orient(t[1], t[2], p) != Orientation::Cw
        && k.orient(t[2], t[0], p) != Orientation::Cw
}

/// Ear-clipping triangulation of a counter-clockwise simple cycle.
///
/// Straight vertices are dropped as they appear. Returns `None` when the
/// cycle is not simple (no ear can be found, or it collapses).
pub fn triangulate_cycle<K: Predicates + ?Sized>(k: &K, ccw: &[usize]) -> Option<Vec<[usize; 3]>> {
    let mut v: Vec<usize> = ccw.to_vec();
    let mut tris = Vec::with_capacity(v.len().saturating_sub(2));
    loop {
        // drop straight vertices
        let mut i = 0;
        while v.len() >= 3 && i < v.len() {
            let n = v.len();
            let (p, c, q) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            if k.orient(p, c, q) == Orientation::Collinear {
                if !strictly_between(k, p, c, q) {
                    return None;
                }
                v.remove(i);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        let n = v.len();
        if n < 3 {
            return None;
        }
        if n == 3 {
            if k.orient(v[0], v[1], v[2]) != Orientation::Ccw {
                return None;
            }
            tris.push([v[0], v[1], v[2]]);
            return Some(tris);
        }
        let ear = (0..n).find(|&i| {
            let t = [v[(i + n - 1) % n], v[i], v[(i + 1) % n]];
            k.orient(t[0], t[1], t[2]) == Orientation::Ccw
                && v.iter()
                    .all(|&w| t.contains(&w) || !in_closed_triangle(k, t, w))
        })?;
        tris.push([v[(ear + n - 1) % n], v[ear], v[(ear + 1) % n]]);
        v.remove(ear);
    }
}

/// Winding number of a closed cycle around `p`, which must not lie on it.
///
/// Sunday's crossing rule, with lexicographic (x, y) order standing in for
/// the y-axis. That order is the projection onto (1, e) for an infinitesimal
/// e > 0, so the test stays exact and never sees a tie.
pub fn winding_number<K: Predicates + ?Sized>(k: &K, cycle: &[usize], p: usize) -> i32 {
    let n = cycle.len();
    let mut wn = 0;
    let mut a = cycle[n - 1];
    let mut a_up = k.cmp_xy(a, p).is_gt();
    for &b in cycle {
        let b_up = k.cmp_xy(b, p).is_gt();
        if !a_up && b_up {
            if k.orient(a, b, p) == Orientation::Ccw {
                wn += 1;
            }
        } else if a_up && !b_up && k.orient(a, b, p) == Orientation::Cw {
            wn -= 1;
        }
        a = b;
        a_up = b_up;
    }
    wn
}

/// A triangulated simple cycle, ready for repeated point location.
#[derive(Clone, Debug)]
pub struct CycleRegion {
    boundary: Vec<usize>,
    triangles: Vec<[usize; 3]>,
}

impl CycleRegion {
    /// `None` if the cycle is not simple.
    pub fn new<K: Predicates + ?Sized>(k: &K, cycle: &[usize]) -> Option<Self> {
        let boundary = ccw_cycle(k, cycle);
        let triangles = triangulate_cycle(k, &boundary)?;
        Some(CycleRegion { boundary, triangles })
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn locate<K: Predicates + ?Sized>(&self, k: &K, p: usize) -> Location {
        let n = self.boundary.len();
        for i in 0..n {
            if on_segment(k, p, self.boundary[i], self.boundary[(i + 1) % n]) {
                return Location::Boundary;
            }
        }
        if self.triangles.iter().any(|&t| in_closed_triangle(k, t, p)) {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// `p` lies in the open interior.
    pub fn contains_strictly<K: Predicates + ?Sized>(&self, k: &K, p: usize) -> bool {
        self.locate(k, p) == Location::Inside
    }
}

/// Location of point `p` relative to a simple cycle; `None` if not simple.
pub fn locate_in_cycle<K: Predicates + ?Sized>(k: &K, cycle: &[usize], p: usize) -> Option<Location> {
    if !is_simple_cycle(k, cycle) {
        return None;
    }
    Some(CycleRegion::new(k, cycle)?.locate(k, p))
}
