use alloc::vec::Vec;

use super::kernel::{on_segment, Predicates};
use super::point::Orientation;

/// Counter-clockwise convex hull of the points `idx` (Andrew's monotone
/// chain), starting at the lexicographically smallest point. Points in the
/// relative interior of hull edges are not vertices.
pub fn hull_indices<K: Predicates + ?Sized>(k: &K, idx: &[usize]) -> Vec<usize> {
    let mut pts = idx.to_vec();
    pts.sort_by(|&a, &b| k.cmp_xy(a, b));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && k.orient(hull[hull.len() - 2], hull[hull.len() - 1], p) != Orientation::Ccw {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && k.orient(hull[hull.len() - 2], hull[hull.len() - 1], p) != Orientation::Ccw {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Every point of `idx` is a hull vertex.
pub fn is_convex_position_indices<K: Predicates + ?Sized>(k: &K, idx: &[usize]) -> bool {
    hull_indices(k, idx).len() == idx.len()
}

/// `p` lies in the open interior of the counter-clockwise convex polygon `hull`.
#[inline]
pub fn strictly_inside_hull<K: Predicates + ?Sized>(k: &K, hull: &[usize], p: usize) -> bool {
    let n = hull.len();
    n >= 3 && (0..n).all(|i| k.orient(hull[i], hull[(i + 1) % n], p) == Orientation::Ccw)
}

/// `p` lies in the closed convex hull whose vertices are `hull` (as returned
/// by [`hull_indices`], so possibly a segment or a single point).
pub fn in_closed_hull<K: Predicates + ?Sized>(k: &K, hull: &[usize], p: usize) -> bool {
    match hull.len() {
        0 => false,
        1 => hull[0] == p,
        2 => on_segment(k, p, hull[0], hull[1]),
        n => (0..n).all(|i| k.orient(hull[i], hull[(i + 1) % n], p) != Orientation::Cw),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::SmallKernel;

    #[test]
    fn square_with_center_and_edge_point() {
        let v = [[0, 0], [4, 0], [4, 4], [0, 4], [2, 2], [2, 0]];
        let k = SmallKernel(&v);
        let h = hull_indices(&k, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(h, vec![0, 1, 2, 3]);
        assert!(strictly_inside_hull(&k, &h, 4));
        assert!(!strictly_inside_hull(&k, &h, 5));
    }
}
