//! Slow, independent reference implementations on plain `i128` coordinates.
#![allow(dead_code)]

use kholes_core::PointSet;

pub type P = (i128, i128);

pub fn coords(s: &PointSet) -> Vec<P> {
    s.points()
        .iter()
        .map(|p| (i128::try_from(&p.x).unwrap(), i128::try_from(&p.y).unwrap()))
        .collect()
}

pub fn cross(o: P, a: P, b: P) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Proper crossing of segments with four distinct endpoints in general position.
pub fn proper_cross(a: P, b: P, c: P, d: P) -> bool {
    let s = |v: i128| v.signum();
    s(cross(a, b, c)) * s(cross(a, b, d)) < 0 && s(cross(c, d, a)) * s(cross(c, d, b)) < 0
}

pub fn crossing_number(p: &[P]) -> u128 {
    let n = p.len();
    let mut edges = vec![];
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    let mut c = 0;
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(u, v) in &edges[x + 1..] {
            if a != u && a != v && b != u && b != v && proper_cross(p[a], p[b], p[u], p[v]) {
                c += 1;
            }
        }
    }
    c
}

/// Simple polygon test for general-position vertices: no two non-adjacent
/// edges cross.
pub fn simple(p: &[P], cyc: &[usize]) -> bool {
    let k = cyc.len();
    for i in 0..k {
        for j in i + 1..k {
            if j == i + 1 || (i == 0 && j == k - 1) {
                continue;
            }
            let (a, b) = (p[cyc[i]], p[cyc[(i + 1) % k]]);
            let (c, d) = (p[cyc[j]], p[cyc[(j + 1) % k]]);
            if proper_cross(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Even-odd rule with a horizontal ray; `q` must not be on the boundary.
pub fn inside(p: &[P], cyc: &[usize], q: P) -> bool {
    let k = cyc.len();
    let mut odd = false;
    for i in 0..k {
        let (a, b) = (p[cyc[i]], p[cyc[(i + 1) % k]]);
        if (a.1 > q.1) != (b.1 > q.1) {
            // x of the crossing compared with q.0, without division
            let lhs = (q.0 - a.0) * (b.1 - a.1);
            let rhs = (q.1 - a.1) * (b.0 - a.0);
            let right = if b.1 > a.1 { lhs < rhs } else { lhs > rhs };
            if right {
                odd = !odd;
            }
        }
    }
    odd
}

pub fn convex_cycle(p: &[P], cyc: &[usize]) -> bool {
    let k = cyc.len();
    let signs: Vec<i128> = (0..k).map(|i| cross(p[cyc[i]], p[cyc[(i + 1) % k]], p[cyc[(i + 2) % k]]).signum()).collect();
    signs.iter().all(|&s| s == signs[0])
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = vec![];
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// (convex, nonconvex) simple k-gons, optionally empty, by permutation brute force.
pub fn gons(p: &[P], k: usize, empty_only: bool) -> (u128, u128) {
    let n = p.len();
    let (mut cv, mut nc) = (0, 0);
    for sub in subsets(n, k) {
        for tail in permutations(&sub[1..]) {
            // each undirected cycle once
            if tail[0] > tail[k - 2] {
                continue;
            }
            let mut cyc = vec![sub[0]];
            cyc.extend(tail);
            if !simple(p, &cyc) {
                continue;
            }
            if empty_only && (0..n).any(|q| !cyc.contains(&q) && inside(p, &cyc, p[q])) {
                continue;
            }
            if convex_cycle(p, &cyc) {
                cv += 1;
            } else {
                nc += 1;
            }
        }
    }
    (cv, nc)
}

/// Number of reflex vertices of a simple cycle.
pub fn reflex_count(p: &[P], cyc: &[usize]) -> usize {
    let k = cyc.len();
    let area2: i128 = (0..k).map(|i| {
        let (a, b) = (p[cyc[i]], p[cyc[(i + 1) % k]]);
        a.0 * b.1 - a.1 * b.0
    }).sum();
    (0..k)
        .filter(|&i| cross(p[cyc[i]], p[cyc[(i + 1) % k]], p[cyc[(i + 2) % k]]).signum() != area2.signum())
        .count()
}

/// Sum over non-convex k-holes of their reflex vertex counts.
pub fn reflex_weighted_nonconvex_holes(p: &[P], k: usize) -> u128 {
    let n = p.len();
    let mut total = 0;
    for sub in subsets(n, k) {
        for tail in permutations(&sub[1..]) {
            if tail[0] > tail[k - 2] {
                continue;
            }
            let mut cyc = vec![sub[0]];
            cyc.extend(tail);
            if !simple(p, &cyc) || convex_cycle(p, &cyc) {
                continue;
            }
            if (0..n).any(|q| !cyc.contains(&q) && inside(p, &cyc, p[q])) {
                continue;
            }
            total += reflex_count(p, &cyc) as u128;
        }
    }
    total
}

pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
