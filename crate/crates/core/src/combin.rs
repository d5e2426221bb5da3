//! Binomials and k-subset enumeration in colex order.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// `C(n, k)`, or `None` if it does not fit in `u128`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is integral at every step
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return binomial_big(n, k).to_u128(),
        }
    }
    Some(acc)
}

pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Advances `c` (strictly increasing, entries below `n`) to the next subset
/// in colex order. Returns `false` after the last one.
#[inline]
pub fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, v) in c[..i].iter_mut().enumerate() {
                *v = j;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every k-subset of `0..n` in colex order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        f(&c);
        if !next_colex(&mut c, n) {
            return;
        }
    }
}

/// Work units: subsets sharing their two largest elements. Listed in colex
/// order of those elements, so concatenating units gives colex order.
fn chunks(n: usize, k: usize) -> Vec<(usize, usize)> {
    match k {
        0 => Vec::from([(usize::MAX, usize::MAX)]),
        1 => (0..n).map(|a| (a, usize::MAX)).collect(),
        _ => (k - 1..n).flat_map(|a| (k - 2..a).map(move |b| (a, b))).collect(),
    }
}

fn run_chunk(k: usize, (a, b): (usize, usize), f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    match k {
        0 => f(&[]),
        1 => f(&[a]),
        _ => {
            let mut c: Vec<usize> = (0..k).collect();
            c[k - 2] = b;
            c[k - 1] = a;
            loop {
                if !f(&c) {
                    return false;
                }
                if !next_colex(&mut c[..k - 2], b) {
                    return true;
                }
            }
        }
    }
}

/// Folds every k-subset of `0..n` into accumulators made by `init` and
/// merges them with `reduce`, which must be associative. Each accumulator
/// sees a colex-contiguous run of subsets and may hold scratch space.
/// The result is independent of thread count when `reduce` is also
/// commutative or the accumulators are order-insensitive.
pub fn fold_subsets<A, I, F, R>(n: usize, k: usize, init: I, fold: F, reduce: R) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[usize]) + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    if k > n {
        return init();
    }
    let units = chunks(n, k);
    let work = |u: &(usize, usize)| {
        let mut acc = init();
        run_chunk(k, *u, &mut |s| {
            fold(&mut acc, s);
            true
        });
        acc
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        units.par_iter().map(work).reduce(&init, &reduce)
    }
    #[cfg(not(feature = "parallel"))]
    {
        units.iter().map(work).fold(init(), reduce)
    }
}

/// The first k-subset in colex order for which `probe` returns `Some`.
/// `scratch` builds per-worker state.
pub fn find_subset<S, T, I, F>(n: usize, k: usize, scratch: I, probe: F) -> Option<T>
where
    T: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &[usize]) -> Option<T> + Sync + Send,
{
    if k > n {
        return None;
    }
    let units = chunks(n, k);
    let work = |u: &(usize, usize)| {
        let mut s = scratch();
        let mut found = None;
        run_chunk(k, *u, &mut |c| {
            found = probe(&mut s, c);
            found.is_none()
        });
        found
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        units.par_iter().find_map_first(work)
    }
    #[cfg(not(feature = "parallel"))]
    {
        units.iter().find_map(work)
    }
}
