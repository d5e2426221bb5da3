//! Closed-form bound expressions and thresholds for gon and hole counts.

use alloc::format;
use alloc::vec::Vec;
use alloc::vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combin::binomial_big;
use crate::relations::ratio;
use crate::{Error, Result};

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

fn rat(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Smallest n for which convex position maximises the number of k-holes:
/// `2(k-1)!·C(k,4) + k - 1`.
pub fn convex_max_threshold(k: u64) -> Result<BigUint> {
    if k < 4 {
        return Err(Error::OutOfRange(format!("k >= 4, got {k}")));
    }
    Ok(BigUint::from(2u8) * factorial(k - 1) * binomial_big(k, 4) + BigUint::from(k - 1))
}

/// Coefficient of `T` in [`khole_upper_expression`]:
/// `(k-1)!/2 · C(n-3,k-4) - C(n-3,k-3)/C(k,3)`.
pub fn khole_upper_t_coefficient(n: u64, k: u64) -> Result<BigRational> {
    if k < 4 || n < k {
        return Err(Error::OutOfRange(format!("need n >= k >= 4, got n = {n}, k = {k}")));
    }
    let half_fact = rat(factorial(k - 1)) / BigRational::from_integer(2.into());
    Ok(half_fact * rat(binomial_big(n - 3, k - 4)) - rat(binomial_big(n - 3, k - 3)) / rat(binomial_big(k, 3)))
}

/// Upper bound on the number of k-holes of an n-set with `t` non-empty
/// triangles: `C(n,k) + coefficient·t`.
pub fn khole_upper_expression(n: u64, k: u64, t: u64) -> Result<BigRational> {
    let c = khole_upper_t_coefficient(n, k)?;
    Ok(rat(binomial_big(n, k)) + c * BigRational::from_integer(t.into()))
}

/// The binomial prefactor of the double-chain k-hole lower bound,
/// `C((n-4)/2, (n-k)/2) · (n-k+2)/2`.
pub fn dc_khole_lower_factor(n: u64, k: u64) -> Result<BigUint> {
    if !n.is_multiple_of(2) || !(n - k.min(n)).is_multiple_of(2) || k > n || n < 4 {
        return Err(Error::OutOfRange(format!("n even, n - k even and k <= n required; got n = {n}, k = {k}")));
    }
    Ok(binomial_big((n - 4) / 2, (n - k) / 2) * BigUint::from((n - k + 2) / 2))
}

/// Which count a published bound refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    ConvexHolesMin,
    NonconvexHolesMax,
    GeneralHolesMin,
    GeneralHolesMax,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// An evaluable bound, with any dropped lower-order term recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundExpr {
    /// `Σ coeffs[i]·nⁱ`.
    Poly(Vec<BigRational>),
    /// `C(n, k)`.
    Binomial,
    /// `n! / (n-k+1)!`.
    FallingFactorial,
    /// Only the growth order is known.
    Order,
}

impl BoundExpr {
    pub fn eval(&self, n: u64, k: u64) -> Option<BigRational> {
        match self {
            BoundExpr::Poly(c) => {
                let nr = BigRational::from_integer(n.into());
                Some(c.iter().rev().fold(BigRational::zero(), |acc, a| acc * &nr + a))
            }
            BoundExpr::Binomial => Some(rat(binomial_big(n, k))),
            BoundExpr::FallingFactorial => {
                (n + 1 >= k).then(|| rat(((n - k + 2)..=n).fold(BigUint::one(), |a, i| a * BigUint::from(i))))
            }
            BoundExpr::Order => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub quantity: Quantity,
    pub side: Side,
    pub expr: BoundExpr,
    /// Dropped lower-order term such as `o(n)`; comparisons against such a
    /// row are informational only.
    pub dropped: Option<&'static str>,
    /// The bound as printed.
    pub printed: &'static str,
    /// Smallest n the bound is claimed for.
    pub from_n: u64,
}

impl BoundRow {
    pub fn asymptotic(&self) -> bool {
        self.dropped.is_some() || self.expr == BoundExpr::Order
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTable {
    pub k: u64,
    pub rows: Vec<BoundRow>,
}

impl BoundTable {
    pub fn find(&self, quantity: Quantity, side: Side) -> Option<&BoundRow> {
        self.rows.iter().find(|r| r.quantity == quantity && r.side == side)
    }
}

/// Published bounds on k-hole counts for `3 <= k <= 7`.
pub fn published_bounds(k: u64) -> Result<BoundTable> {
    use BoundExpr::*;
    use Quantity::*;
    use Side::*;
    let poly = |c: &[(i64, i64)]| Poly(c.iter().map(|&(a, b)| ratio(a, b)).collect());
    let row = |quantity, side, expr, dropped, printed| BoundRow { quantity, side, expr, dropped, printed, from_n: k };
    let rows = match k {
        3 => vec![
            row(ConvexHolesMin, Lower, poly(&[(22, 7), (-32, 7), (1, 1)]), None, "n^2 - 32/7 n + 22/7"),
            row(ConvexHolesMin, Upper, poly(&[(0, 1), (0, 1), (16196, 10000)]), Some("o(n^2)"), "1.6196 n^2 + o(n^2)"),
        ],
        4 => vec![
            row(ConvexHolesMin, Lower, poly(&[(0, 1), (-9, 4), (1, 2)]), Some("o(n)"), "n^2/2 - 9/4 n - o(n)"),
            row(ConvexHolesMin, Upper, poly(&[(0, 1), (0, 1), (19397, 10000)]), Some("o(n^2)"), "1.9397 n^2 + o(n^2)"),
            row(NonconvexHolesMax, Upper, poly(&[(0, 1), (0, 1), (0, 1), (1, 2)]), Some("O(n^2)"), "n^3/2 - O(n^2)"),
            row(NonconvexHolesMax, Lower, poly(&[(0, 1), (0, 1), (0, 1), (1, 2)]), Some("O(n^2 log n)"), "n^3/2 - O(n^2 log n)"),
            row(GeneralHolesMin, Lower, poly(&[(0, 1), (0, 1), (5, 2)]), Some("O(n)"), "5/2 n^2 - O(n)"),
            row(GeneralHolesMin, Upper, Order, None, "O(n^(5/2) log n)"),
            row(GeneralHolesMax, Upper, Binomial, None, "C(n,4)"),
        ],
        5 => vec![
            row(ConvexHolesMin, Lower, poly(&[(0, 1), (3, 4)]), Some("o(n)"), "3n/4 - o(n)"),
            row(ConvexHolesMin, Upper, poly(&[(0, 1), (0, 1), (10207, 10000)]), Some("o(n^2)"), "1.0207 n^2 + o(n^2)"),
            row(NonconvexHolesMax, Upper, FallingFactorial, None, "n!/(n-4)!"),
            row(GeneralHolesMin, Lower, poly(&[(0, 1), (0, 1), (17, 1)]), Some("O(n)"), "17 n^2 - O(n)"),
            row(GeneralHolesMin, Upper, Order, None, "O(n^3 (log n)^2)"),
            row(GeneralHolesMax, Upper, Binomial, None, "C(n,5)"),
        ],
        6 => vec![
            row(ConvexHolesMin, Lower, poly(&[(-4, 1), (1, 229)]), None, "n/229 - 4"),
            row(ConvexHolesMin, Upper, poly(&[(0, 1), (0, 1), (2006, 10000)]), Some("o(n^2)"), "0.2006 n^2 + o(n^2)"),
            row(NonconvexHolesMax, Upper, FallingFactorial, None, "n!/(n-5)!"),
            row(GeneralHolesMin, Lower, poly(&[(0, 1), (0, 1), (1, 1)]), Some("O(n)"), "n^2 - O(n)"),
            row(GeneralHolesMin, Upper, Order, None, "O(n^(7/2) (log n)^3)"),
            row(GeneralHolesMax, Upper, Binomial, None, "C(n,6)"),
        ],
        7 => vec![
            // sets without any convex 7-hole exist
            row(ConvexHolesMin, Lower, poly(&[(0, 1)]), None, "0"),
            row(ConvexHolesMin, Upper, poly(&[(0, 1)]), None, "0"),
            row(NonconvexHolesMax, Upper, FallingFactorial, None, "n!/(n-6)!"),
            row(GeneralHolesMin, Lower, poly(&[(0, 1), (0, 1), (1, 1)]), Some("O(n)"), "n^2 - O(n)"),
            row(GeneralHolesMin, Upper, Order, None, "O(n^4 (log n)^4)"),
            row(GeneralHolesMax, Upper, Binomial, None, "C(n,7)"),
        ],
        _ => return Err(Error::OutOfRange(format!("published bounds cover 3 <= k <= 7, got {k}"))),
    };
    let mut rows = rows;
    // convex position maximises k-holes only from the threshold on
    for r in rows.iter_mut().filter(|r| r.quantity == GeneralHolesMax) {
        r.from_n = u64::try_from(convex_max_threshold(k)?).unwrap_or(u64::MAX);
    }
    Ok(BoundTable { k, rows })
}
