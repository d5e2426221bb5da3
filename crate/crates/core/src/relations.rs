//! Linear relations between k-gon counts and the crossing number.
//!
//! For a k-point set the gon count `g` and crossing number `cr` form a
//! profile. A relation `(c1, c2, x)` asserts `c1 <= g + x·cr <= c2` for every
//! profile; summing it over all k-subsets of an n-set S gives
//! `c1·C(n,k) <= g_k(S) + x·C(n-4,k-4)·cr(S) <= c2·C(n,k)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::census::{crossing_number, gon_tally, GonClass};
use crate::combin::{binomial_big, fold_subsets, for_each_subset};
use crate::geom::{hull_indices, Orientation, Point, PointSet, Predicates, SmallKernel};
use crate::grid::GridSpec;
use crate::ordertype::{order_type_key_of, OrderTypeKey, KNOWN_ORDER_TYPE_COUNTS};
use crate::polygonize::Polygonizer;
use crate::{Error, Result};

/// Gon counts and crossing number of one k-point configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub g_conv: u64,
    pub g_nonconv: u64,
    pub g_gen: u64,
    pub cr: u64,
}

impl Profile {
    pub fn g(&self, class: GonClass) -> u64 {
        match class {
            GonClass::Convex => self.g_conv,
            GonClass::Nonconvex => self.g_nonconv,
            GonClass::General => self.g_gen,
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.g_conv, self.g_nonconv, self.g_gen, self.cr)
    }
}

pub fn profile_of(points: &[Point]) -> Result<Profile> {
    let s = PointSet::new(points.to_vec())?;
    let t = gon_tally(&s, s.len(), false)?;
    let cr = crossing_number(&s)?;
    Ok(Profile { g_conv: t.convex as u64, g_nonconv: t.nonconvex as u64, g_gen: t.general() as u64, cr: cr as u64 })
}

/// Profile of the sub-configuration `sub`, or `None` if it has a collinear
/// triple.
pub fn profile_of_indices<K: Predicates + ?Sized>(k: &K, sub: &[usize], poly: &mut Polygonizer) -> Option<Profile> {
    let n = sub.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if k.orient(sub[a], sub[b], sub[c]) == Orientation::Collinear {
                    return None;
                }
            }
        }
    }
    if hull_indices(k, sub).len() == n {
        let cr = if n >= 4 { crate::combin::binomial(n as u64, 4).unwrap_or(0) as u64 } else { 0 };
        return Some(Profile { g_conv: 1, g_nonconv: 0, g_gen: 1, cr });
    }
    let mut g = 0u64;
    poly.for_each(k, sub, |_| {
        g += 1;
        true
    });
    let mut cr = 0u64;
    let mut quad = [0usize; 4];
    for_each_subset(n, 4, |q| {
        for (slot, &i) in quad.iter_mut().zip(q) {
            *slot = sub[i];
        }
        cr += (hull_indices(k, &quad).len() == 4) as u64;
    });
    Some(Profile { g_conv: 0, g_nonconv: g, g_gen: g, cr })
}

/// Where a profile space came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// All general-position k-subsets of the m×m grid.
    ExhaustiveGrid { m: usize },
    /// Random k-sets; `samples` drawn from `seed`.
    Random { samples: u64, seed: u64 },
    /// An order-type database file.
    Database { source: String, records: u64 },
    /// Merged from several sources.
    Union(Vec<Provenance>),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::ExhaustiveGrid { m } => write!(f, "grid:{m}"),
            Provenance::Random { samples, seed } => write!(f, "random:{samples}:{seed}"),
            Provenance::Database { source, .. } => write!(f, "db:{source}"),
            Provenance::Union(v) => {
                let parts: Vec<String> = v.iter().map(|p| format!("{p}")).collect();
                f.write_str(&parts.join("+"))
            }
        }
    }
}

/// Deduplicated profiles of k-point configurations.
///
/// `complete` is set when the configurations seen cover every order type
/// of k points, judged by counting distinct order types against the known
/// totals. Grids and samples can certify this; nothing is assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileSpace {
    pub k: usize,
    pub profiles: BTreeSet<Profile>,
    pub provenance: Provenance,
    pub order_types: usize,
    pub complete: bool,
    keys: BTreeSet<OrderTypeKey>,
}

impl ProfileSpace {
    pub fn new(k: usize, provenance: Provenance) -> Self {
        ProfileSpace { k, profiles: BTreeSet::new(), provenance, order_types: 0, complete: false, keys: BTreeSet::new() }
    }

    /// Builds a space from explicit profiles (no order-type information).
    pub fn from_profiles(k: usize, profiles: impl IntoIterator<Item = Profile>, provenance: Provenance) -> Self {
        let mut s = Self::new(k, provenance);
        s.profiles.extend(profiles);
        s
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    /// Adds a k-point set (profile and order type).
    pub fn insert_set(&mut self, s: &PointSet) -> Result<()> {
        if s.len() != self.k {
            return Err(Error::Precondition(format!("{}-point set in a space of k = {}", s.len(), self.k)));
        }
        s.require_general_position()?;
        let all: Vec<usize> = (0..s.len()).collect();
        let (p, key) = crate::with_kernel!(s.coords(), ker => {
            (profile_of_indices(ker, &all, &mut Polygonizer::new()), order_type_key_of(ker, &all))
        });
        self.profiles.extend(p);
        self.keys.insert(key);
        self.refresh();
        Ok(())
    }

    pub fn merge(&mut self, other: ProfileSpace) {
        self.profiles.extend(other.profiles);
        self.keys.extend(other.keys);
        let prev = core::mem::replace(&mut self.provenance, Provenance::Union(vec![]));
        let mut parts = match prev {
            Provenance::Union(v) => v,
            p => vec![p],
        };
        match other.provenance {
            Provenance::Union(v) => parts.extend(v),
            p => parts.push(p),
        }
        self.provenance = Provenance::Union(parts);
        self.refresh();
    }

    fn refresh(&mut self) {
        self.order_types = self.keys.len();
        self.complete = KNOWN_ORDER_TYPE_COUNTS.get(self.k).is_some_and(|&c| self.order_types as u64 == c);
    }

    /// Largest `g` of a class over the space.
    pub fn max_g(&self, class: GonClass) -> u64 {
        self.profiles.iter().map(|p| p.g(class)).max().unwrap_or(0)
    }
}

fn check_space_k(k: usize) -> Result<()> {
    if !(4..=10).contains(&k) {
        return Err(Error::OutOfRange(format!("profile spaces need 4 <= k <= 10, got {k}")));
    }
    Ok(())
}

/// All general-position k-subsets of the m×m grid. Subsets not touching
/// both the line x = 0 and the line y = 0 are translates of others and are
/// skipped.
pub fn profile_space_grid(k: usize, m: usize) -> Result<ProfileSpace> {
    check_space_k(k)?;
    let grid = GridSpec::new(m)?;
    let coords = grid.coords();
    let ker = &SmallKernel(&coords);
    let (profiles, keys) = fold_subsets(
        grid.len(),
        k,
        || (BTreeSet::new(), BTreeSet::new(), Polygonizer::new()),
        |(profiles, keys, poly), sub| {
            // indices are x·m + y, so x = 0 means index < m
            if sub[0] >= m || !sub.iter().any(|&i| i % m == 0) {
                return;
            }
            if let Some(p) = profile_of_indices(ker, sub, poly) {
                profiles.insert(p);
                keys.insert(order_type_key_of(ker, sub));
            }
        },
        |mut a, b| {
            a.0.extend(b.0);
            a.1.extend(b.1);
            a
        },
    )
    .into_parts();
    let mut space = ProfileSpace::new(k, Provenance::ExhaustiveGrid { m });
    space.profiles = profiles;
    space.keys = keys;
    space.refresh();
    Ok(space)
}

trait IntoParts<A, B> {
    fn into_parts(self) -> (A, B);
}

impl<A, B, C> IntoParts<A, B> for (A, B, C) {
    fn into_parts(self) -> (A, B) {
        (self.0, self.1)
    }
}

/// `samples` random k-sets from `seed`. Box sides cycle through small
/// values so that near-degenerate order types are hit as often as generic
/// ones.
pub fn profile_space_random(k: usize, samples: u64, seed: u64) -> Result<ProfileSpace> {
    check_space_k(k)?;
    let mut space = ProfileSpace::new(k, Provenance::Random { samples, seed });
    let sides = [(k * k) as i64, 2 * (k * k) as i64, 8 * (k * k) as i64, 64 * (k * k) as i64];
    let mut poly = Polygonizer::new();
    let all: Vec<usize> = (0..k).collect();
    for i in 0..samples {
        let side = sides[(i % sides.len() as u64) as usize];
        let s = crate::generators::gen_random(k, seed.wrapping_add(i), side)?;
        let (p, key) = crate::with_kernel!(s.coords(), ker => {
            (profile_of_indices(ker, &all, &mut poly), order_type_key_of(ker, &all))
        });
        space.profiles.extend(p);
        space.keys.insert(key);
    }
    space.refresh();
    Ok(space)
}

/// Exact bounds on the crossing-number constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C4Interval {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl Default for C4Interval {
    fn default() -> Self {
        C4Interval { lower: ratio(379_972, 1_000_000), upper: ratio(380_473, 1_000_000) }
    }
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `c1 <= g + x·cr <= c2` for every profile of k-point sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRelation {
    pub k: usize,
    pub class: GonClass,
    pub c1: BigRational,
    pub c2: BigRational,
    pub x: BigRational,
}

impl LinearRelation {
    pub fn width(&self) -> BigRational {
        &self.c2 - &self.c1
    }

    /// Every profile satisfies the relation exactly.
    pub fn holds_on(&self, space: &ProfileSpace) -> bool {
        space.profiles.iter().all(|p| {
            let v = line(p, self.class).at(&self.x);
            self.c1 <= v && v <= self.c2
        })
    }
}

/// One side of a relation turned into a crossing-free bound
/// `g_k(S) <= coefficient · C(n, k)` (or `>=`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCoefficient {
    pub k: usize,
    pub class: GonClass,
    /// `c2` for upper bounds, `c1` for lower bounds.
    pub c: BigRational,
    pub x: BigRational,
    /// `c - x·c4·C(k, 4)`.
    pub coefficient: BigRational,
}

#[derive(Clone, Debug)]
struct Line {
    a: BigRational,
    b: BigRational,
}

impl Line {
    fn at(&self, x: &BigRational) -> BigRational {
        &self.a + &self.b * x
    }
}

fn line(p: &Profile, class: GonClass) -> Line {
    Line { a: BigRational::from_integer(p.g(class).into()), b: BigRational::from_integer(p.cr.into()) }
}

fn lines(space: &ProfileSpace, class: GonClass) -> Result<Vec<Line>> {
    if space.is_empty() {
        return Err(Error::Precondition("empty profile space".into()));
    }
    // only the extreme intercept per slope matters, keep both
    let mut by_slope: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for p in &space.profiles {
        let g = p.g(class);
        by_slope.entry(p.cr).and_modify(|e| *e = (e.0.min(g), e.1.max(g))).or_insert((g, g));
    }
    let mut out = Vec::new();
    for (cr, (lo, hi)) in by_slope {
        for g in [lo, hi] {
            out.push(Line { a: BigRational::from_integer(g.into()), b: BigRational::from_integer(cr.into()) });
        }
    }
    Ok(out)
}

/// x = 0 and every abscissa where two lines meet.
fn candidates(ls: &[Line]) -> Vec<BigRational> {
    let mut xs = BTreeSet::new();
    xs.insert(BigRational::zero());
    for (i, l) in ls.iter().enumerate() {
        for m in &ls[i + 1..] {
            if l.b != m.b {
                xs.insert((&m.a - &l.a) / (&l.b - &m.b));
            }
        }
    }
    xs.into_iter().collect()
}

fn extremes(ls: &[Line], x: &BigRational) -> (BigRational, BigRational) {
    let mut vals = ls.iter().map(|l| l.at(x));
    let first = vals.next().unwrap_or_default();
    vals.fold((first.clone(), first), |(lo, hi), v| {
        let lo = if v < lo { v.clone() } else { lo };
        let hi = if v > hi { v } else { hi };
        (lo, hi)
    })
}

/// Tie-break: smaller |x|, then smaller x.
fn better_x(a: &BigRational, b: &BigRational) -> bool {
    (a.abs(), a) < (b.abs(), b)
}

/// The relation with the smallest `c2 - c1`.
///
/// `max - min` of the lines is convex and piecewise linear in x, so its
/// minimum sits at x = 0 or at a crossing of two lines; all of them are
/// evaluated exactly.
pub fn optimize_tight(space: &ProfileSpace, class: GonClass) -> Result<LinearRelation> {
    let ls = lines(space, class)?;
    let mut best: Option<(BigRational, BigRational, BigRational, BigRational)> = None;
    for x in candidates(&ls) {
        let (lo, hi) = extremes(&ls, &x);
        let w = &hi - &lo;
        let take = match &best {
            None => true,
            Some((bw, _, _, bx)) => w < *bw || (w == *bw && better_x(&x, bx)),
        };
        if take {
            best = Some((w, lo, hi, x));
        }
    }
    let (_, c1, c2, x) = best.expect("candidate set contains 0");
    Ok(LinearRelation { k: space.k, class, c1, c2, x })
}

fn c4_weight(k: usize, c4: &BigRational) -> BigRational {
    c4 * BigRational::from_integer(BigInt::from(binomial_big(k as u64, 4)))
}

/// Best upper bound `g_k <= (c2 - x·c4·C(k,4))·C(n,k)` over `x >= 0`.
pub fn optimize_upper(space: &ProfileSpace, class: GonClass, c4: &BigRational) -> Result<BoundCoefficient> {
    let ls = lines(space, class)?;
    let w = c4_weight(space.k, c4);
    let mut best: Option<(BigRational, BigRational, BigRational)> = None;
    for x in candidates(&ls).into_iter().filter(|x| !x.is_negative()) {
        let (_, hi) = extremes(&ls, &x);
        let coef = &hi - &x * &w;
        let take = match &best {
            None => true,
            Some((bc, _, bx)) => coef < *bc || (coef == *bc && better_x(&x, bx)),
        };
        if take {
            best = Some((coef, hi, x));
        }
    }
    let (coefficient, c, x) = best.expect("candidate set contains 0");
    Ok(BoundCoefficient { k: space.k, class, c, x, coefficient })
}

/// Best lower bound `g_k >= (c1 - x·c4·C(k,4))·C(n,k)` over `x <= 0`.
pub fn optimize_lower(space: &ProfileSpace, class: GonClass, c4: &BigRational) -> Result<BoundCoefficient> {
    let ls = lines(space, class)?;
    let w = c4_weight(space.k, c4);
    let mut best: Option<(BigRational, BigRational, BigRational)> = None;
    for x in candidates(&ls).into_iter().filter(|x| !x.is_positive()) {
        let (lo, _) = extremes(&ls, &x);
        let coef = &lo - &x * &w;
        let take = match &best {
            None => true,
            Some((bc, _, bx)) => coef > *bc || (coef == *bc && better_x(&x, bx)),
        };
        if take {
            best = Some((coef, lo, x));
        }
    }
    let (coefficient, c, x) = best.expect("candidate set contains 0");
    Ok(BoundCoefficient { k: space.k, class, c, x, coefficient })
}

/// Bounds on `g_k(S)` for an n-set S with crossing number `cr`:
/// `c·C(n,k) - x·C(n-4,k-4)·cr` for `c` in `(c1, c2)`.
pub fn evaluate_relation(rel: &LinearRelation, n: u64, cr: u128) -> Result<(BigRational, BigRational)> {
    let k = rel.k as u64;
    if n < k || k < 4 {
        return Err(Error::OutOfRange(format!("n = {n} below k = {k}")));
    }
    let big = |v: num_bigint::BigUint| BigRational::from_integer(BigInt::from(v));
    let cnk = big(binomial_big(n, k));
    let shift = &rel.x * big(binomial_big(n - 4, k - 4)) * BigRational::from_integer(BigInt::from(cr));
    Ok((&rel.c1 * &cnk - &shift, &rel.c2 * &cnk - &shift))
}

/// Whole part and proper fraction: `29 4/9`, `-3/4`, `10`, `-1 1/4`.
pub fn format_mixed(r: &BigRational) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let whole = a.numer() / a.denom();
    let rem = a.numer() - &whole * a.denom();
    let sign = if neg { "-" } else { "" };
    if rem.is_zero() {
        format!("{sign}{whole}")
    } else if whole.is_zero() {
        format!("{sign}{rem}/{}", a.denom())
    } else {
        format!("{sign}{whole} {rem}/{}", a.denom())
    }
}

/// Parses `a`, `a/b`, `w a/b` (optionally negative) or a finite decimal.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::OutOfRange(format!("not a rational: {s:?}"));
    let t = s.trim();
    let (neg, t) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t),
    };
    let int = |v: &str| BigInt::from_str(v).map_err(|_| bad());
    let v = if let Some((w, frac)) = t.split_once(' ') {
        let (n, d) = frac.trim().split_once('/').ok_or_else(bad)?;
        BigRational::from_integer(int(w)?) + BigRational::new(int(n)?, int(d)?)
    } else if let Some((n, d)) = t.split_once('/') {
        let d = int(d)?;
        if d.is_zero() {
            return Err(bad());
        }
        BigRational::new(int(n)?, d)
    } else if let Some((w, f)) = t.split_once('.') {
        let scale = BigInt::from(10u8).pow(f.len() as u32);
        let digits = if f.is_empty() { BigInt::zero() } else { int(f)? };
        BigRational::new(int(if w.is_empty() { "0" } else { w })? * &scale + digits, scale)
    } else {
        BigRational::from_integer(int(t)?)
    };
    Ok(if neg { -v } else { v })
}

/// Decimal rendering with `digits` places, rounded half away from zero.
pub fn to_decimal(r: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u8).pow(digits);
    let scaled = (r * BigRational::from_integer(scale.clone())).abs();
    let rounded = (scaled + ratio(1, 2)).floor().to_integer();
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    let whole = &rounded / &scale;
    let frac = &rounded % &scale;
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>width$}", width = digits as usize)
    }
}

/// A published row `c1 <= g + x·cr <= c2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublishedRelation {
    pub k: usize,
    pub class: GonClass,
    pub c1: BigRational,
    pub c2: BigRational,
    pub x: BigRational,
}

/// The published relations for k = 5, 6, 7.
pub fn published_relations() -> Vec<PublishedRelation> {
    use GonClass::*;
    let row = |k, class, c1: BigRational, c2: BigRational, x: BigRational| PublishedRelation { k, class, c1, c2, x };
    vec![
        row(5, Convex, ratio(-3, 4), ratio(-1, 4), ratio(-1, 4)),
        row(5, Nonconvex, ratio(10, 1), ratio(10, 1), ratio(2, 1)),
        row(5, General, ratio(37, 4), ratio(39, 4), ratio(7, 4)),
        row(6, Convex, ratio(-1, 1), ratio(-1, 4), ratio(-1, 12)),
        row(6, Nonconvex, ratio(265, 9), ratio(330, 9), ratio(22, 9)),
        row(6, General, ratio(85, 3), ratio(36, 1), ratio(7, 3)),
        row(7, Convex, ratio(-31, 26), ratio(-9, 26), ratio(-1, 26)),
        row(7, Nonconvex, ratio(1121, 13), ratio(1610, 13), ratio(46, 13)),
        row(7, General, ratio(171, 2), ratio(247, 2), ratio(7, 2)),
    ]
}

/// A published crossing-free upper bound `g_k <= (c2 - w·c4)·C(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublishedUpperBound {
    pub k: usize,
    pub class: GonClass,
    pub c2: BigRational,
    /// `x·C(k,4)`.
    pub c4_weight: BigRational,
    /// The rounded value printed with the bound.
    pub approx: &'static str,
}

pub fn published_upper_bounds() -> Vec<PublishedUpperBound> {
    use GonClass::*;
    let row = |k, class, c2: BigRational, w: BigRational, approx| PublishedUpperBound { k, class, c2, c4_weight: w, approx };
    vec![
        row(5, Nonconvex, ratio(10, 1), ratio(10, 1), "6.20"),
        row(5, General, ratio(39, 4), ratio(35, 4), "6.43"),
        row(6, Nonconvex, ratio(36, 1), ratio(35, 1), "22.7"),
        row(6, General, ratio(36, 1), ratio(35, 1), "22.7"),
        row(7, Nonconvex, ratio(1610, 13), ratio(1610, 13), "75.64"),
        row(7, General, ratio(247, 2), ratio(245, 2), "76.95"),
    ]
}

impl PublishedUpperBound {
    pub fn coefficient(&self, c4: &BigRational) -> BigRational {
        &self.c2 - &self.c4_weight * c4
    }
}
