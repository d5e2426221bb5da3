use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::point::{sign, Orientation, Point};

/// Largest coordinate magnitude handled by the `i128` path. Differences stay
/// below 2^61, so every 2x2 determinant stays below 2^123.
pub const SMALL_LIMIT: i64 = 1 << 60;

#[inline]
pub(crate) fn cross_small(p: [i64; 2], q: [i64; 2], r: [i64; 2]) -> i128 {
    let (qx, qy) = ((q[0] - p[0]) as i128, (q[1] - p[1]) as i128);
    let (rx, ry) = ((r[0] - p[0]) as i128, (r[1] - p[1]) as i128);
    qx * ry - qy * rx
}

/// Exact predicates over an indexed point collection.
pub trait Predicates: Sync {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn orient(&self, a: usize, b: usize, c: usize) -> Orientation;

    /// Lexicographic comparison of points `a` and `b` by `(x, y)`.
    fn cmp_xy(&self, a: usize, b: usize) -> Ordering;

    /// Sign of the dot product `(a - b) · (c - b)`.
    fn dot_sign(&self, a: usize, b: usize, c: usize) -> Ordering;

    /// Compares the distances of `c` and `d` from the line through `a`, `b`.
    fn cmp_line_dist(&self, a: usize, b: usize, c: usize, d: usize) -> Ordering;
}

#[derive(Clone, Copy, Debug)]
pub struct SmallKernel<'a>(pub &'a [[i64; 2]]);

impl Predicates for SmallKernel<'_> {
    #[inline]
    fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        Orientation::from_sign(cross_small(self.0[a], self.0[b], self.0[c]).cmp(&0))
    }

    #[inline]
    fn cmp_xy(&self, a: usize, b: usize) -> Ordering {
        self.0[a].cmp(&self.0[b])
    }

    fn dot_sign(&self, a: usize, b: usize, c: usize) -> Ordering {
        let (pa, pb, pc) = (self.0[a], self.0[b], self.0[c]);
        let ux = (pa[0] - pb[0]) as i128;
        let uy = (pa[1] - pb[1]) as i128;
        let vx = (pc[0] - pb[0]) as i128;
        let vy = (pc[1] - pb[1]) as i128;
        (ux * vx + uy * vy).cmp(&0)
    }

    fn cmp_line_dist(&self, a: usize, b: usize, c: usize, d: usize) -> Ordering {
        let dc = cross_small(self.0[a], self.0[b], self.0[c]).unsigned_abs();
        let dd = cross_small(self.0[a], self.0[b], self.0[d]).unsigned_abs();
        dc.cmp(&dd)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BigKernel<'a>(pub &'a [Point]);

impl BigKernel<'_> {
    fn cross(&self, a: usize, b: usize, c: usize) -> BigInt {
        let (p, q, r) = (&self.0[a], &self.0[b], &self.0[c]);
        (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
    }
}

impl Predicates for BigKernel<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        Orientation::from_sign(sign(&self.cross(a, b, c)))
    }

    fn cmp_xy(&self, a: usize, b: usize) -> Ordering {
        self.0[a].cmp(&self.0[b])
    }

    fn dot_sign(&self, a: usize, b: usize, c: usize) -> Ordering {
        let (p, q, r) = (&self.0[a], &self.0[b], &self.0[c]);
        let dot = (&p.x - &q.x) * (&r.x - &q.x) + (&p.y - &q.y) * (&r.y - &q.y);
        sign(&dot)
    }

    fn cmp_line_dist(&self, a: usize, b: usize, c: usize, d: usize) -> Ordering {
        self.cross(a, b, c).magnitude().cmp(self.cross(a, b, d).magnitude())
    }
}

/// Owned coordinate storage, choosing the fast path when every point fits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coords {
    Small(Vec<[i64; 2]>),
    Big(Vec<Point>),
}

impl Coords {
    pub fn from_points(points: &[Point]) -> Self {
        let small: Option<Vec<[i64; 2]>> = points.iter().map(Point::to_small).collect();
        match small {
            Some(v) => Coords::Small(v),
            None => Coords::Big(points.to_vec()),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Coords::Small(v) => v.len(),
            Coords::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn point(&self, i: usize) -> Point {
        match self {
            Coords::Small(v) => Point::new(v[i][0], v[i][1]),
            Coords::Big(v) => v[i].clone(),
        }
    }

    pub fn to_points(&self) -> Vec<Point> {
        (0..self.len()).map(|i| self.point(i)).collect()
    }
}

/// `b` lies strictly inside segment `ac`; assumes the three are collinear.
#[inline]
pub fn strictly_between<K: Predicates + ?Sized>(k: &K, a: usize, b: usize, c: usize) -> bool {
    k.dot_sign(a, b, c) == Ordering::Less
}

/// `p` lies on the closed segment `ab`.
#[inline]
pub fn on_segment<K: Predicates + ?Sized>(k: &K, p: usize, a: usize, b: usize) -> bool {
    if p == a || p == b {
        return true;
    }
    k.orient(a, b, p) == Orientation::Collinear && strictly_between(k, a, p, b)
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect<K: Predicates + ?Sized>(
    k: &K,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> bool {
    let o1 = k.orient(a, b, c);
    let o2 = k.orient(a, b, d);
    let o3 = k.orient(c, d, a);
    let o4 = k.orient(c, d, b);
    use Orientation::Collinear;
    if o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear {
        return o1 != o2 && o3 != o4;
    }
    (o1 == Collinear && on_segment(k, c, a, b))
        || (o2 == Collinear && on_segment(k, d, a, b))
        || (o3 == Collinear && on_segment(k, a, c, d))
        || (o4 == Collinear && on_segment(k, b, c, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kernel(pts: &[(i64, i64)]) -> Vec<[i64; 2]> {
        pts.iter().map(|&(x, y)| [x, y]).collect()
    }

    #[test]
    fn crossing_and_touching_segments() {
        let v = kernel(&[(0, 0), (2, 2), (0, 2), (2, 0), (1, 1), (3, 3), (4, 4)]);
        let k = SmallKernel(&v);
        assert!(segments_intersect(&k, 0, 1, 2, 3));
        // (1,1) touches the diagonal.
        assert!(segments_intersect(&k, 0, 1, 4, 2));
        // collinear but disjoint
        assert!(!segments_intersect(&k, 0, 4, 5, 6));
        // collinear overlapping
        assert!(segments_intersect(&k, 0, 5, 1, 6));
        assert!(!segments_intersect(&k, 2, 3, 5, 6));
    }

    #[test]
    fn small_and_big_kernels_agree() {
        let pts = [(0i64, 0i64), (5, 1), (3, 7), (-2, 4), (9, -3)];
        let small = kernel(&pts);
        let big: Vec<Point> = pts.iter().map(|&p| p.into()).collect();
        let (s, b) = (SmallKernel(&small), BigKernel(&big));
        for a in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    assert_eq!(s.orient(a, c, d), b.orient(a, c, d));
                    assert_eq!(s.dot_sign(a, c, d), b.dot_sign(a, c, d));
                    assert_eq!(s.cmp_xy(a, c), b.cmp_xy(a, c));
                    for e in 0..5 {
                        assert_eq!(s.cmp_line_dist(a, c, d, e), b.cmp_line_dist(a, c, d, e));
                    }
                }
            }
        }
    }
}
