//! Experiment suites. Each acceptance criterion is one check with id
//! `cNN`; suites may add further checks with descriptive ids.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use kholes_core::census::*;
use kholes_core::combin::{binomial, for_each_subset};
use kholes_core::generators::*;
use kholes_core::grid::*;
use kholes_core::relations::*;
use kholes_core::{Error as CoreError, GonClass, PointSet};
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::growth::{fit_growth, phi_lower_bound};
use crate::io::OrderTypeDb;
use crate::report::{Check, SuiteReport};

pub const SUITES: [&str; 8] = ["identities", "tables", "existence", "convexmax", "grid", "growth", "witnesses", "optional-db"];

/// Environment variable naming the 9-point order-type database.
pub const DB9_ENV: &str = "KHOLES_OTYPES9";

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Samples per run for the best-effort 7-point profile space; 0 skips it.
    pub k7_samples: u64,
    pub db9: Option<PathBuf>,
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 1, k7_samples: 300_000, db9: std::env::var_os(DB9_ENV).map(PathBuf::from), timing: true }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match name {
        "identities" => vec![timed(cfg, c01)?, timed(cfg, c02)?, timed(cfg, c03)?],
        "tables" => tables(cfg)?,
        "existence" => vec![timed(cfg, c06)?],
        "convexmax" => vec![timed(cfg, c07)?, timed(cfg, c08)?],
        "grid" => vec![timed(cfg, c10)?, timed(cfg, c11)?, timed(cfg, phi_bound_check)?],
        "growth" => vec![timed(cfg, growth_fig5)?, timed(cfg, growth_prime_holes)?],
        "witnesses" => vec![timed(cfg, c09)?, timed(cfg, c12)?],
        "optional-db" => vec![timed(cfg, c13)?],
        _ => bail!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")),
    };
    Ok(SuiteReport::new(name, checks))
}

fn timed(cfg: &SuiteConfig, f: impl FnOnce(&SuiteConfig) -> Result<Check>) -> Result<Check> {
    let t = Instant::now();
    let mut c = f(cfg)?;
    if cfg.timing {
        c.runtime_ms = Some(t.elapsed().as_millis() as u64);
    }
    Ok(c)
}

fn rand_set(n: usize, seed: u64) -> Result<PointSet> {
    Ok(gen_random(n, seed, default_box(n))?)
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> Result<Option<String>>) -> Result<Option<String>> {
    for it in items {
        if let Some(msg) = bad(&it)? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn outcome(id: &str, failure: Option<String>, measured: Value, expected: Value) -> Check {
    let pass = failure.is_none();
    let c = Check::new(id, pass, measured, expected);
    match failure {
        Some(f) => c.with_note(f),
        None => c,
    }
}

/// Seeds and sizes of the identity corpus: 200 sets, n in 5..=12.
fn identity_corpus(cfg: &SuiteConfig) -> impl Iterator<Item = (usize, u64)> + '_ {
    (0..200u64).map(move |i| (5 + (i % 8) as usize, cfg.seed.wrapping_mul(1_000_003).wrapping_add(i)))
}

fn c01(cfg: &SuiteConfig) -> Result<Check> {
    let mut sets = 0;
    let fail = first_failure(identity_corpus(cfg), |&(n, seed)| {
        let s = rand_set(n, seed)?;
        let cr = segment_crossings(&s)?;
        let t = gon_tally(&s, 4, false)?;
        let c4 = binomial(n as u64, 4).unwrap();
        let ok = t.convex == cr && t.nonconvex == 3 * (c4 - cr) && t.general() == 3 * c4 - 2 * cr;
        Ok((!ok).then(|| format!("n {n} seed {seed}: convex {} nonconvex {} cr {cr}", t.convex, t.nonconvex)))
    })?;
    sets += 200;
    Ok(outcome("c01", fail, json!({ "sets": sets }), json!("convex = cr, nonconvex = 3(C(n,4)-cr), general = 3C(n,4)-2cr")))
}

fn c02(cfg: &SuiteConfig) -> Result<Check> {
    let fail = first_failure(identity_corpus(cfg), |&(n, seed)| {
        let s = rand_set(n, seed)?;
        let cr = segment_crossings(&s)?;
        let nc = gon_tally(&s, 5, false)?.nonconvex;
        let want = 10 * binomial(n as u64, 5).unwrap() - 2 * (n as u128 - 4) * cr;
        Ok((nc != want).then(|| format!("n {n} seed {seed}: {nc} != {want}")))
    })?;
    Ok(outcome("c02", fail, json!({ "sets": 200 }), json!("nonconvex 5-gons = 10C(n,5) - 2(n-4)cr")))
}

fn c03(cfg: &SuiteConfig) -> Result<Check> {
    let cases: Vec<(usize, usize, u64)> =
        (0..40u64).flat_map(|i| [5usize, 6].map(|k| (6 + (i % 5) as usize, k, cfg.seed.wrapping_add(7919 * i)))).collect();
    let fail = first_failure(cases.iter().copied(), |&(n, k, seed)| {
        let s = rand_set(n, seed)?;
        let cr = segment_crossings(&s)?;
        let mut sum = 0u128;
        let mut err = None;
        for_each_subset(n, k, |sub| match s.subset(sub).and_then(|t| crossing_number(&t)) {
            Ok(c) => sum += c,
            Err(e) => err = Some(e),
        });
        if let Some(e) = err {
            return Err(e.into());
        }
        let want = binomial(n as u64 - 4, k as u64 - 4).unwrap() * cr;
        Ok((sum != want).then(|| format!("n {n} k {k} seed {seed}: {sum} != {want}")))
    })?;
    Ok(outcome("c03", fail, json!({ "cases": cases.len() }), json!("sum of cr over k-subsets = C(n-4,k-4) cr")))
}

fn rel_json(r: &LinearRelation) -> Value {
    json!({
        "k": r.k,
        "class": r.class.as_str(),
        "c1": format_mixed(&r.c1),
        "c2": format_mixed(&r.c2),
        "x": format_mixed(&r.x),
    })
}

fn rows_match(space: &ProfileSpace, k: usize) -> Result<(bool, Vec<Value>)> {
    let mut ok = true;
    let mut out = vec![];
    for row in published_relations().into_iter().filter(|r| r.k == k) {
        let r = optimize_tight(space, row.class)?;
        ok &= r.c1 == row.c1 && r.c2 == row.c2 && r.x == row.x && r.holds_on(space);
        out.push(rel_json(&r));
    }
    Ok((ok, out))
}

fn tables(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let t = Instant::now();
    let mut spaces = vec![];
    let mut stable = true;
    let mut ok = true;
    let mut rows = vec![];
    let mut meta = vec![];
    for k in [5, 6] {
        let s6 = profile_space_grid(k, 6)?;
        let s7 = profile_space_grid(k, 7)?;
        stable &= s6.profiles == s7.profiles;
        let (m, r) = rows_match(&s7, k)?;
        ok &= m;
        rows.extend(r);
        meta.push(json!({ "k": k, "profiles": s7.len(), "order_types": s7.order_types, "complete": s7.complete }));
        spaces.push(s7);
    }
    let mut c04 = Check::new(
        "c04",
        ok && stable,
        json!({ "rows": rows, "grid_6_equals_grid_7": stable, "spaces": meta }),
        json!("published k = 5, 6 rows as exact rationals"),
    );
    if cfg.timing {
        c04.runtime_ms = Some(t.elapsed().as_millis() as u64);
    }

    let t = Instant::now();
    let c4 = C4Interval::default().lower;
    let mut ok5 = true;
    let mut coeffs = vec![];
    for pb in published_upper_bounds().into_iter().filter(|b| b.k <= 6) {
        let space = &spaces[pb.k - 5];
        let u = optimize_upper(space, pb.class, &c4)?;
        let digits = pb.approx.split('.').nth(1).map_or(0, str::len) as u32;
        let got = to_decimal(&u.coefficient, digits);
        ok5 &= got == pb.approx;
        coeffs.push(json!({ "k": pb.k, "class": pb.class.as_str(), "coefficient": to_decimal(&u.coefficient, 4), "rounded": got, "published": pb.approx }));
    }
    let mut c05 = Check::new("c05", ok5, json!(coeffs), json!({ "c4": "0.379972" }));
    if cfg.timing {
        c05.runtime_ms = Some(t.elapsed().as_millis() as u64);
    }

    let mut checks = vec![c04, c05];
    if cfg.k7_samples > 0 {
        let t = Instant::now();
        let mut space = profile_space_random(7, cfg.k7_samples, cfg.seed)?;
        space.merge(profile_space_random(7, cfg.k7_samples, cfg.seed.wrapping_add(99_000_000))?);
        let (m, r) = rows_match(&space, 7)?;
        let measured = json!({
            "rows": r,
            "order_types": space.order_types,
            "complete": space.complete,
            "max_general": space.max_g(GonClass::General),
            "provenance": space.provenance.to_string(),
        });
        let mut c = if m {
            Check::new("tables-k7", true, measured, json!("published k = 7 rows"))
        } else {
            let mut c = Check::skip("tables-k7", "sampled space differs from the published rows; best effort only");
            c.measured = measured;
            c
        };
        if cfg.timing {
            c.runtime_ms = Some(t.elapsed().as_millis() as u64);
        }
        checks.push(c);
    }
    Ok(checks)
}

fn c06(cfg: &SuiteConfig) -> Result<Check> {
    let seeds = || (0..500u64).map(|i| cfg.seed.wrapping_mul(31).wrapping_add(i));
    let mut missing = vec![];
    for (n, k, hole) in [(5, 4, false), (9, 5, false), (10, 5, true)] {
        let bad: Vec<u64> = seeds()
            .collect::<Vec<_>>()
            .par_iter()
            .filter(|&&seed| {
                let s = rand_set(n, seed).expect("random set");
                let hit = if hole { find_convex_hole(&s, k) } else { find_convex_gon(&s, k) };
                hit.expect("valid k").is_none()
            })
            .copied()
            .collect();
        if !bad.is_empty() {
            missing.push(format!("n {n}: no convex {k}-{} for seeds {bad:?}", if hole { "hole" } else { "gon" }));
        }
    }
    let mut horton = vec![];
    let mut horton_ok = true;
    for n in [16, 32] {
        let h = gen_horton(n)?;
        let six = count_gons(&h, 6, GonClass::Convex, true)?.count;
        let seven = count_gons(&h, 7, GonClass::Convex, true)?.count;
        let (six, seven) = (six.to_string(), seven.to_string());
        horton_ok &= six == "0" && seven == "0";
        horton.push(json!({ "n": n, "convex_6_holes": six, "convex_7_holes": seven }));
    }
    let pass = missing.is_empty() && horton_ok;
    let mut c = Check::new(
        "c06",
        pass,
        json!({ "random_sets_missing": missing, "horton": horton }),
        json!({ "random": "500 seeds each", "horton": { "convex_6_holes": 0, "convex_7_holes": 0 } }),
    );
    if !horton_ok {
        c = c.with_note("every set of 30 or more points has a convex 6-hole, so Horton(32) cannot avoid them");
    }
    Ok(c)
}

fn c07(cfg: &SuiteConfig) -> Result<Check> {
    let convex = binomial(15, 4).unwrap();
    let tri = binomial(15, 3).unwrap();
    let seeds: Vec<u64> = (0..100u64).map(|i| cfg.seed.wrapping_mul(7).wrapping_add(5000 + i)).collect();
    let res: Vec<(u64, u128, u128)> = seeds
        .iter()
        .map(|&seed| {
            let s = rand_set(15, seed)?;
            Ok((seed, gon_tally(&s, 4, true)?.general(), gon_tally(&s, 3, true)?.convex))
        })
        .collect::<Result<_>>()?;
    let max = res.iter().map(|r| r.1).max().unwrap_or(0);
    let bad: Vec<u64> = res.iter().filter(|&&(_, h4, h3)| h4 > convex || (h3 < tri && h4 >= convex)).map(|r| r.0).collect();
    let fail = (!bad.is_empty()).then(|| format!("seeds {bad:?}"));
    Ok(outcome("c07", fail, json!({ "sets": res.len(), "max_4_holes": max }), json!({ "convex_position": convex })))
}

fn c08(_: &SuiteConfig) -> Result<Check> {
    let dc = gen_double_chain(10)?;
    let g = gon_tally(&dc, 9, true)?.general();
    Ok(Check::new("c08", g > 10, json!({ "general_9_holes": g }), json!("> C(10,9) = 10")))
}

fn fig5_series() -> Result<Vec<(f64, f64)>> {
    [16usize, 24, 32, 40]
        .iter()
        .map(|&n| Ok((n as f64, gon_tally(&gen_cluster_fig5(n, 4)?, 4, true)?.nonconvex as f64)))
        .collect()
}

fn c09(cfg: &SuiteConfig) -> Result<Check> {
    let mut cases = 0;
    let mut fail = None;
    'outer: for i in 0..40u64 {
        let n = 5 + (i % 5) as usize;
        let s = rand_set(n, cfg.seed.wrapping_add(31 * i))?;
        for k in [4usize, 5] {
            let reps = match representation_count_nonconvex(&s, k) {
                Ok(r) => r,
                Err(CoreError::Invariant(msg)) => {
                    fail = Some(format!("n {n} seed {i}: {msg}"));
                    break 'outer;
                }
                Err(e) => return Err(e.into()),
            };
            let holes = num_bigint::BigUint::from(gon_tally(&s, k, true)?.nonconvex);
            let falling: u128 = ((n - k + 2)..=n).map(|v| v as u128).product();
            cases += 1;
            if !(holes <= reps && reps <= falling.into()) {
                fail = Some(format!("n {n} k {k}: holes {holes} reps {reps} bound {falling}"));
                break 'outer;
            }
        }
    }
    let fit = fit_growth(&fig5_series()?)?;
    let slope_ok = (2.7..=3.3).contains(&fit.exponent);
    if fail.is_none() && !slope_ok {
        fail = Some(format!("figure-5 slope {:.4}", fit.exponent));
    }
    Ok(outcome(
        "c09",
        fail,
        json!({ "cases": cases, "fig5_counts": fit.series, "fig5_slope": round6(fit.exponent), "fig5_residual": round6(fit.residual) }),
        json!({ "holes <= representations <= n!/(n-k+1)!": true, "fig5_slope": [2.7, 3.3] }),
    ))
}

fn round6(v: f64) -> f64 {
    (v * 1e6).round() / 1e6
}

fn c10(_: &SuiteConfig) -> Result<Check> {
    let mut fail = None;
    let mut phi_checks = 0u64;
    for m in 4..=15usize {
        let grid = GridSpec::new(m)?;
        let c = (m / 3) as i64;
        for x in c..m as i64 - c {
            for y in c..m as i64 - c {
                for d in (1..).take_while(|d| 3 * d < m as i64) {
                    let got = prime_partners_at_distance(grid, (x, y), d)?;
                    phi_checks += 1;
                    if got != 8 * euler_phi(d as u64) && fail.is_none() {
                        fail = Some(format!("m {m} p ({x},{y}) d {d}: {got}"));
                    }
                }
            }
        }
    }
    let mut cutting = 0u64;
    for m in 2..=12usize {
        let grid = GridSpec::new(m)?;
        let mi = m as i64;
        for a in 0..grid.len() {
            for b in a + 1..grid.len() {
                let (p, q) = (grid.point(a), grid.point(b));
                if !is_prime_segment(p, q) {
                    continue;
                }
                let d = SlopeVector::of(p, q).expect("distinct").length();
                let count = collinear_grid_points(grid, p, q)? as i64;
                let upper_ok = count <= (mi + d - 1) / d;
                let lower_ok = !is_cutting_line(grid, p, q) || count >= mi / d;
                cutting += is_cutting_line(grid, p, q) as u64;
                if !(upper_ok && lower_ok) && fail.is_none() {
                    fail = Some(format!("m {m} {p:?}-{q:?}: {count} points, d {d}"));
                }
            }
        }
    }
    let mut rows = vec![];
    for (m, k) in [(4usize, 4usize), (5, 4), (5, 6)] {
        let r = count_row_structured_prime_holes(GridSpec::new(m)?, k)?;
        if !(r.holds() && r.valid == r.candidates) && fail.is_none() {
            fail = Some(format!("rows m {m} k {k}: {} valid of {}, bound {}", r.valid, r.candidates, r.bound));
        }
        rows.push(json!({ "m": m, "k": k, "candidates": r.candidates, "valid": r.valid, "bound": r.bound }));
    }
    Ok(outcome(
        "c10",
        fail,
        json!({ "phi_checks": phi_checks, "cutting_segments": cutting, "row_structures": rows }),
        json!("8 phi(d) partners; floor(m/d) <= points on cutting lines <= ceil(m/d); all candidates valid"),
    ))
}

fn c11(cfg: &SuiteConfig) -> Result<Check> {
    let mut fail = None;
    let mut rows = vec![];
    for m in 2..=5usize {
        let prime = count_prime_k_holes(GridSpec::new(m)?, 4, false)?;
        let pg = gen_perturbed_grid(m, cfg.seed.wrapping_add(m as u64))?;
        let holes = gon_tally(&pg, 4, true)?.general();
        if holes < prime && fail.is_none() {
            fail = Some(format!("m {m}: {holes} < {prime}"));
        }
        rows.push(json!({ "m": m, "grid_prime_4_holes": prime, "perturbed_4_holes": holes }));
    }
    Ok(outcome("c11", fail, json!(rows), json!("perturbed >= prime")))
}

fn phi_bound_check(_: &SuiteConfig) -> Result<Check> {
    let bad: Vec<u64> = (3..=10_000u64).filter(|&d| (euler_phi(d) as f64) < phi_lower_bound(d)).collect();
    Ok(Check::new("grid-phi-lower-bound", bad.is_empty(), json!({ "violations": bad }), json!("3 <= d <= 10000")))
}

fn c12(cfg: &SuiteConfig) -> Result<Check> {
    let n = 10usize;
    let mut fail = None;
    let mut min_found = [u128::MAX; 2];
    for i in 0..50u64 {
        let s = rand_set(n, cfg.seed.wrapping_mul(13).wrapping_add(i))?;
        for (j, k) in [4usize, 5].into_iter().enumerate() {
            let w = min_khole_witnesses(&s, k)?;
            let want = ((n - k + 1) * (n - k + 2) / 2) as u128;
            min_found[j] = min_found[j].min(w);
            if w < want && fail.is_none() {
                fail = Some(format!("set {i} k {k}: {w} < {want}"));
            }
        }
    }
    Ok(outcome("c12", fail, json!({ "sets": 50, "min_witnesses_k4": min_found[0], "min_witnesses_k5": min_found[1] }), json!({ "k4": 28, "k5": 21 })))
}

fn growth_fig5(_: &SuiteConfig) -> Result<Check> {
    let fit = fit_growth(&fig5_series()?)?;
    Ok(Check::new(
        "growth-fig5-nonconvex-4-holes",
        (2.7..=3.3).contains(&fit.exponent),
        json!({ "series": fit.series, "exponent": round6(fit.exponent), "residual": round6(fit.residual) }),
        json!([2.7, 3.3]),
    ))
}

fn growth_prime_holes(_: &SuiteConfig) -> Result<Check> {
    let series: Vec<(f64, f64)> = (4..=8usize)
        .map(|m| Ok(((m * m) as f64, count_prime_k_holes(GridSpec::new(m)?, 4, false)? as f64)))
        .collect::<Result<_>>()?;
    let fit = fit_growth(&series)?;
    let increasing = series.windows(2).all(|w| w[0].1 < w[1].1);
    Ok(Check::new(
        "growth-grid-prime-4-holes",
        increasing && fit.exponent > 2.0,
        json!({ "series": fit.series, "exponent": round6(fit.exponent), "residual": round6(fit.residual) }),
        json!("strictly increasing, exponent in n above 2"),
    ))
}

fn c13(cfg: &SuiteConfig) -> Result<Check> {
    let Some(path) = cfg.db9.as_ref() else {
        return Ok(Check::skip("c13", format!("set {DB9_ENV} to the 9-point order-type database to run")));
    };
    let db = OrderTypeDb::open(path, 9, true).with_context(|| format!("reading {}", path.display()))?;
    let sets: Vec<PointSet> = db.collect::<std::result::Result<_, _>>()?;
    let best = sets
        .par_iter()
        .map(|s| -> Result<(num_bigint::BigUint, u128)> { Ok((polygonization_count(s)?, crossing_number(s)?)) })
        .try_reduce(|| (0u8.into(), 0), |a, b| Ok(if b.0 > a.0 { b } else { a }))?;
    let min_cr = sets.par_iter().map(|s| crossing_number(s).unwrap_or(u128::MAX)).min().unwrap_or(0);
    let pass = best.0 == 1282u32.into() && best.1 == 38 && min_cr == 36;
    Ok(Check::new(
        "c13",
        pass,
        json!({ "max_general_9_gons": best.0.to_string(), "at_cr": best.1, "min_cr": min_cr }),
        json!({ "max_general_9_gons": 1282, "at_cr": 38, "min_cr": 36 }),
    ))
}

/// Ratio helper for callers that parse user input.
pub fn parse_c4(s: &str) -> Result<BigRational> {
    Ok(parse_rational(s)?)
}
