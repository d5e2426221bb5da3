//! Enumeration of the simple polygons spanning a fixed vertex set.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{segments_intersect, Predicates};
use crate::geom::Orientation;

/// Reusable depth-first enumerator of polygonizations.
///
/// Each undirected simple cycle through all of `pts` is reported exactly
/// once: paths start at `pts[0]` and the second vertex must come before the
/// last one in `pts`. Edges are tested against the partial path as they are
/// added, so crossing prefixes are cut early. Straight vertices are allowed;
/// spikes and overlaps are not.
#[derive(Default, Debug, Clone)]
pub struct Polygonizer {
    path: Vec<usize>,
    pos: Vec<usize>,
    used: Vec<bool>,
}

impl Polygonizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Calls `f` with every simple cycle on `pts`. `f` returns `false` to
    /// stop; the return value reports whether enumeration ran to the end.
    pub fn for_each<K: Predicates + ?Sized>(
        &mut self,
        k: &K,
        pts: &[usize],
        f: impl FnMut(&[usize]) -> bool,
    ) -> bool {
        self.for_each_with_edges(k, pts, |_, _| true, f)
    }

    /// As [`Polygonizer::for_each`], restricted to cycles whose every edge
    /// satisfies `edge`.
    pub fn for_each_with_edges<K: Predicates + ?Sized>(
        &mut self,
        k: &K,
        pts: &[usize],
        edge: impl Fn(usize, usize) -> bool,
        mut f: impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let m = pts.len();
        if m < 3 {
            return true;
        }
        self.path.clear();
        self.path.push(pts[0]);
        self.pos.clear();
        self.pos.push(0);
        self.used.clear();
        self.used.resize(m, false);
        self.used[0] = true;
        self.extend(k, pts, &edge, &mut f)
    }

    fn extend<K: Predicates + ?Sized>(
        &mut self,
        k: &K,
        pts: &[usize],
        edge: &impl Fn(usize, usize) -> bool,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let m = pts.len();
        let len = self.path.len();
        if len == m {
            return !(edge(self.path[m - 1], self.path[0]) && self.closes(k)) || f(&self.path);
        }
        for j in 1..m {
            if self.used[j] {
                continue;
            }
            // direction normalisation: second vertex below the last one
            if len == 1 && j == m - 1 {
                continue;
            }
            if len == m - 1 && j < self.pos[1] {
                continue;
            }
            let w = pts[j];
            if !edge(self.path[len - 1], w) || !self.edge_ok(k, w) {
                continue;
            }
            self.path.push(w);
            self.pos.push(j);
            self.used[j] = true;
            let go_on = self.extend(k, pts, edge, f);
            self.used[j] = false;
            self.pos.pop();
            self.path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Appending `w` keeps the path simple.
    #[inline]
    fn edge_ok<K: Predicates + ?Sized>(&self, k: &K, w: usize) -> bool {
        let p = &self.path;
        let len = p.len();
        let u = p[len - 1];
        if len >= 2 && !adjacent_ok(k, p[len - 2], u, w) {
            return false;
        }
        (0..len.saturating_sub(2)).all(|i| !segments_intersect(k, p[i], p[i + 1], u, w))
    }

    #[inline]
    fn closes<K: Predicates + ?Sized>(&self, k: &K) -> bool {
        let p = &self.path;
        let m = p.len();
        let (first, last) = (p[0], p[m - 1]);
        adjacent_ok(k, p[m - 2], last, first)
            && adjacent_ok(k, last, first, p[1])
            && (1..m - 2).all(|i| !segments_intersect(k, p[i], p[i + 1], last, first))
    }
}

#[inline]
fn adjacent_ok<K: Predicates + ?Sized>(k: &K, u: usize, s: usize, w: usize) -> bool {
    k.orient(u, s, w) != Orientation::Collinear || crate::geom::strictly_between(k, u, s, w)
}

/// All polygonizations of `pts`, each as a cycle starting at `pts[0]`.
pub fn polygonizations<K: Predicates + ?Sized>(k: &K, pts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![];
    Polygonizer::new().for_each(k, pts, |c| {
        out.push(c.to_vec());
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{is_simple_cycle, SmallKernel};

    fn pts(v: &[(i64, i64)]) -> Vec<[i64; 2]> {
        v.iter().map(|&(x, y)| [x, y]).collect()
    }

    /// Brute force over all (m-1)! orders with the start fixed, halved.
    fn oracle(k: &SmallKernel<'_>, idx: &[usize]) -> usize {
        fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(cur.clone());
                return;
            }
            for i in 0..rest.len() {
                let x = rest.remove(i);
                cur.push(x);
                perms(rest, cur, out);
                cur.pop();
                rest.insert(i, x);
            }
        }
        let mut all = Vec::new();
        perms(&mut idx[1..].to_vec(), &mut vec![idx[0]], &mut all);
        all.iter().filter(|c| is_simple_cycle(k, c)).count() / 2
    }

    #[test]
    fn convex_has_one() {
        let v = pts(&[(0, 0), (4, 0), (6, 3), (4, 6), (0, 6), (-2, 3)]);
        let k = SmallKernel(&v);
        assert_eq!(polygonizations(&k, &[0, 1, 2, 3, 4, 5]).len(), 1);
    }

    #[test]
    fn matches_permutation_oracle() {
        let v = pts(&[(0, 0), (9, 1), (4, 3), (2, 8), (7, 6), (5, 11), (11, 9), (1, 4)]);
        let k = SmallKernel(&v);
        let all: Vec<usize> = (0..v.len()).collect();
        for m in 3..=v.len() {
            let idx = &all[..m];
            let found = polygonizations(&k, idx);
            assert_eq!(found.len(), oracle(&k, idx), "m={m}");
            for c in &found {
                assert!(is_simple_cycle(&k, c));
            }
        }
    }

    #[test]
    fn dented_quadrilateral_has_three() {
        let v = pts(&[(0, 0), (6, 0), (3, 6), (3, 2)]);
        assert_eq!(polygonizations(&SmallKernel(&v), &[0, 1, 2, 3]).len(), 3);
    }

    #[test]
    fn straight_vertices_allowed() {
        // 2x2 block of a grid: only the square itself.
        let v = pts(&[(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1)]);
        let k = SmallKernel(&v);
        let found = polygonizations(&k, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(found.len(), oracle(&k, &[0, 1, 2, 3, 4, 5]));
        assert!(found.contains(&vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn early_stop() {
        let v = pts(&[(0, 0), (9, 1), (4, 3), (2, 8), (7, 6), (5, 11)]);
        let mut seen = 0;
        let done = Polygonizer::new().for_each(&SmallKernel(&v), &[0, 1, 2, 3, 4, 5], |_| {
            seen += 1;
            false
        });
        assert!(!done);
        assert_eq!(seen, 1);
    }
}
