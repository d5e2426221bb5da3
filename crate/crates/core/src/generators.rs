//! Deterministic point-set families.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{orientation, Orientation, Point, PointSet};
use crate::{Error, Result};

/// Attempts per point before random sampling gives up.
const MAX_RETRIES: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Convex,
    Grid,
    PerturbedGrid,
    DoubleChain,
    Horton,
    ClusterFig5,
    Random,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Convex,
        Family::Grid,
        Family::PerturbedGrid,
        Family::DoubleChain,
        Family::Horton,
        Family::ClusterFig5,
        Family::Random,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Convex => "convex",
            Family::Grid => "grid",
            Family::PerturbedGrid => "perturbed_grid",
            Family::DoubleChain => "double_chain",
            Family::Horton => "horton",
            Family::ClusterFig5 => "cluster_fig5",
            Family::Random => "random",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s || f.as_str().replace('_', "-") == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown family {s:?}")))
    }
}

/// A family plus its parameters. `size` is n, except for the grid families
/// where it is the side m (the set has m² points).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub size: usize,
    pub seed: u64,
    /// Target hole size, used by [`Family::ClusterFig5`] only.
    pub k: usize,
    /// Box side for [`Family::Random`]; 0 picks `max(n², 1024)`.
    pub box_side: i64,
}

impl GeneratorSpec {
    pub fn new(family: Family, size: usize, seed: u64) -> Self {
        GeneratorSpec { family, size, seed, k: 4, box_side: 0 }
    }

    pub fn generate(&self) -> Result<PointSet> {
        let n = self.size;
        match self.family {
            Family::Convex => gen_convex(n, self.seed),
            Family::Grid => gen_grid(n),
            Family::PerturbedGrid => gen_perturbed_grid(n, self.seed),
            Family::DoubleChain => gen_double_chain(n),
            Family::Horton => gen_horton(n),
            Family::ClusterFig5 => gen_cluster_fig5(n, self.k),
            Family::Random => {
                let side = if self.box_side > 0 { self.box_side } else { default_box(n) };
                gen_random(n, self.seed, side)
            }
        }
    }
}

pub fn default_box(n: usize) -> i64 {
    ((n * n) as i64).max(1024)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points on the parabola `y = x²` with seeded gaps of 1 to 3 between
/// consecutive x-coordinates.
pub fn gen_convex(n: usize, seed: u64) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("convex set needs n >= 3, got {n}")));
    }
    let mut r = rng(seed);
    let mut x = 0i64;
    let pts = (0..n)
        .map(|_| {
            let p = Point::new(x, x * x);
            x += r.gen_range(1..=3);
            p
        })
        .collect();
    PointSet::new(pts)
}

/// The integer grid `{0..m-1}²`.
pub fn gen_grid(m: usize) -> Result<PointSet> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("grid side m >= 2, got {m}")));
    }
    let m = m as i64;
    PointSet::with_collinear((0..m).flat_map(|x| (0..m).map(move |y| Point::new(x, y))).collect())
}

/// Index of the first point that is collinear with two earlier ones or
/// coincides with an earlier one.
fn conflicts(pts: &[Point], p: &Point) -> bool {
    for (i, a) in pts.iter().enumerate() {
        if a == p {
            return true;
        }
        for b in &pts[i + 1..] {
            if orientation(a, b, p) == Orientation::Collinear {
                return true;
            }
        }
    }
    false
}

/// The m×m grid scaled by `Q = 8m⁴`, every point moved by a seeded offset
/// with coordinates in `(-m², m²)`, resampled until no three points are
/// collinear. The relative displacement stays below `1 / (8m²)` of a step.
pub fn gen_perturbed_grid(m: usize, seed: u64) -> Result<PointSet> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("grid side m >= 2, got {m}")));
    }
    let mi = m as i64;
    let q = 8 * mi.pow(4);
    let r_max = mi * mi;
    let mut r = rng(seed);
    let mut pts: Vec<Point> = Vec::with_capacity(m * m);
    for x in 0..mi {
        for y in 0..mi {
            let mut tries = 0;
            loop {
                let p = Point::new(
                    q * x + r.gen_range(-r_max + 1..r_max),
                    q * y + r.gen_range(-r_max + 1..r_max),
                );
                if !conflicts(&pts, &p) {
                    pts.push(p);
                    break;
                }
                tries += 1;
                if tries >= MAX_RETRIES {
                    return Err(Error::SamplingExhausted(tries));
                }
            }
        }
    }
    PointSet::new(pts)
}

/// Double chain: `n/2` points on the cup `y = x²` above `n/2` points on the
/// cap `y = -x² - D`, x running over `-m+1, -m+3, .., m-1`. `D` starts at
/// `4m²` and grows until the set is in general position.
pub fn gen_double_chain(n: usize) -> Result<PointSet> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!("double chain needs even n >= 4, got {n}")));
    }
    let m = (n / 2) as i64;
    let xs: Vec<i64> = (1..=m).map(|i| 2 * i - m - 1).collect();
    let mut d = 4 * m * m;
    loop {
        let mut pts: Vec<Point> = xs.iter().map(|&x| Point::new(x, x * x)).collect();
        pts.extend(xs.iter().map(|&x| Point::new(x, -x * x - d)));
        match PointSet::new(pts) {
            Err(Error::Collinear(..)) => d += 1,
            other => return other,
        }
    }
}

/// Horton set on `n = 2^t` points with x-coordinates `0..n`.
///
/// `H(2s)` interleaves `H(s)` on even x with a copy on odd x lifted by `d`.
/// `d` exceeds the height of `H(s)` by more than any line through two
/// points of one copy can climb across the new width, so every such line
/// passes strictly below the lifted copy (resp. above the lower one).
pub fn gen_horton(n: usize) -> Result<PointSet> {
    if n < 4 || !n.is_power_of_two() {
        return Err(Error::OutOfRange(format!("Horton set needs n = 2^t >= 4, got {n}")));
    }
    let mut ys: Vec<i64> = alloc::vec![0];
    while ys.len() < n {
        let s = ys.len();
        let lo = *ys.iter().min().unwrap_or(&0);
        let hi = *ys.iter().max().unwrap_or(&0);
        let width = hi - lo;
        let new_x = 2 * s as i64;
        let mut d = width * (new_x + 2) + 1;
        loop {
            let next: Vec<i64> = (0..2 * s).map(|i| if i % 2 == 0 { ys[i / 2] } else { ys[i / 2] + d }).collect();
            let pts: Vec<Point> = next.iter().enumerate().map(|(x, &y)| Point::new(x as i64, y)).collect();
            if PointSet::new(pts).is_ok() {
                ys = next;
                break;
            }
            d += 1;
        }
    }
    PointSet::new(ys.iter().enumerate().map(|(x, &y)| Point::new(x as i64, y)).collect())
}

/// A set with many non-convex k-holes, built from four groups of `q = n/4`.
///
/// Groups A, B, H, C lie on the cup `y = x²` around `x = -3X`, `-X`, `0`
/// and `X` with `X = 8q`, so together they are in convex position. Group R
/// is a short, slightly bent chain just inside the edge AB, beyond every
/// chord `ab`. For any `a`, `b`, `c` and any `k - 4` points of H, the
/// polygon `a r b h.. c` is a non-convex k-hole, where `r` is the point of
/// R farthest from `ab`; this gives at least `q³ C(q, k - 4)` of them.
pub fn gen_cluster_fig5(n: usize, k: usize) -> Result<PointSet> {
    if k < 4 || n < 4 * k || !n.is_multiple_of(4) {
        return Err(Error::OutOfRange(format!("cluster set needs k >= 4, n >= 4k, 4 | n; got n = {n}, k = {k}")));
    }
    let q = (n / 4) as i64;
    let x = 8 * q;
    let cup = |xs: i64| Point::new(xs, xs * xs);
    let mut base: Vec<Point> = Vec::with_capacity(n);
    base.extend((0..q).map(|j| cup(-3 * x - j)));
    base.extend((0..q).map(|j| cup(-x - j)));
    base.extend((0..q).map(|j| cup(j - q / 2)));
    base.extend((0..q).map(|j| cup(x + j)));
    // every chord ab passes below 5X² + Xq at x = -2X
    let mut y0 = 5 * x * x + x * q + 1;
    loop {
        let mut pts = base.clone();
        pts.extend((0..q).map(|j| Point::new(-2 * x + j, y0 + j * j)));
        match PointSet::new(pts) {
            Err(Error::Collinear(..)) => y0 += 1,
            other => return other,
        }
    }
}

/// `n` uniform points in `[0, side)²`, each resampled until it keeps the
/// set in general position.
pub fn gen_random(n: usize, seed: u64, side: i64) -> Result<PointSet> {
    if side < (n * n) as i64 || side < 2 {
        return Err(Error::OutOfRange(format!("box side {side} below n² = {}", n * n)));
    }
    let mut r = rng(seed);
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut tries = 0;
        loop {
            let p = Point::new(r.gen_range(0..side), r.gen_range(0..side));
            if !conflicts(&pts, &p) {
                pts.push(p);
                break;
            }
            tries += 1;
            if tries >= MAX_RETRIES {
                return Err(Error::SamplingExhausted(tries));
            }
        }
    }
    PointSet::new(pts)
}
