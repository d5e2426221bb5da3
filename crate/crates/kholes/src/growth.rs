//! Log-log growth fits and the totient lower bound.

use anyhow::{bail, Result};
use serde::Serialize;

/// Least-squares line through `(ln n, ln count)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthFit {
    pub series: Vec<(f64, f64)>,
    pub exponent: f64,
    pub intercept: f64,
    /// Sum of squared residuals in log space.
    pub residual: f64,
}

pub fn fit_growth(series: &[(f64, f64)]) -> Result<GrowthFit> {
    if series.len() < 4 {
        bail!("a growth fit needs at least 4 points, got {}", series.len());
    }
    if let Some(&(n, c)) = series.iter().find(|&&(n, c)| !(n > 0.0 && c > 0.0)) {
        bail!("growth fit needs positive n and counts, got ({n}, {c})");
    }
    let pts: Vec<(f64, f64)> = series.iter().map(|&(n, c)| (n.ln(), c.ln())).collect();
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let sxx: f64 = pts.iter().map(|&(x, _)| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        bail!("growth fit needs at least two distinct n");
    }
    let sxy: f64 = pts.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let residual = pts.iter().map(|&(x, y)| (y - intercept - exponent * x).powi(2)).sum();
    Ok(GrowthFit { series: series.to_vec(), exponent, intercept, residual })
}

/// Euler's constant to ten decimals (error below 1e-10).
pub const EULER_GAMMA: f64 = 0.5772156649;

/// `d / (e^γ ln ln d + 3 / ln ln d)`, a lower bound on `φ(d)` for `d >= 3`.
pub fn phi_lower_bound(d: u64) -> f64 {
    assert!(d >= 3, "the bound needs d >= 3");
    let ll = (d as f64).ln().ln();
    d as f64 / (EULER_GAMMA.exp() * ll + 3.0 / ll)
}
