//! The max-plus semiring over exact rationals.
//!
//! Elements are either a finite rational or the bottom element `-inf`,
//! which is the identity for `⊕ = max` and absorbing for `⊙ = +`.
//!
//! Arithmetic is carried out in `Ratio<i64>`. Overflow panics instead of
//! wrapping (the workspace enables overflow checks in every profile), so a
//! value is either exact or the computation aborts.

use std::fmt;
use std::iter::Sum;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the tropical pipeline.
pub type Rational = Ratio<i64>;

/// Builds `numer / denom` as an exact rational.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

/// An element of `ℚ ∪ {-inf}` under `(max, +)`.
///
/// The derived ordering puts `NegInf` below every finite value, which is
/// exactly the order `⊕` needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropValue {
    NegInf,
    Finite(Rational),
}

pub use TropValue::NegInf as NEG_INF;

impl TropValue {
    /// Tropical one (the ordinary zero).
    pub const ONE: TropValue = TropValue::Finite(Ratio::new_raw(0, 1));

    pub fn int(v: i64) -> Self {
        TropValue::Finite(Rational::from_integer(v))
    }

    pub fn frac(numer: i64, denom: i64) -> Self {
        TropValue::Finite(rat(numer, denom))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropValue::Finite(_))
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            TropValue::Finite(v) => Some(*v),
            TropValue::NegInf => None,
        }
    }

    /// Tropical sum: `max(self, other)`.
    pub fn oplus(self, other: Self) -> Self {
        t_add(self, other)
    }

    /// Tropical product: `self + other`, with `-inf` absorbing.
    pub fn otimes(self, other: Self) -> Self {
        t_mul(self, other)
    }

    /// Ordinary difference of two finite values; `None` if either is `-inf`.
    pub fn diff(self, other: Self) -> Option<Rational> {
        Some(self.finite()? - other.finite()?)
    }

    /// Sign of a finite value; `-inf` counts as negative.
    pub fn is_negative(&self) -> bool {
        match self {
            TropValue::NegInf => true,
            TropValue::Finite(v) => v.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            TropValue::NegInf => false,
            TropValue::Finite(v) => v.is_positive(),
        }
    }
}

impl From<Rational> for TropValue {
    fn from(v: Rational) -> Self {
        TropValue::Finite(v)
    }
}

impl From<i64> for TropValue {
    fn from(v: i64) -> Self {
        TropValue::int(v)
    }
}

/// `a ⊕ b = max(a, b)`.
pub fn t_add(a: TropValue, b: TropValue) -> TropValue {
    a.max(b)
}

/// `a ⊙ b = a + b`; `-inf` absorbs.
pub fn t_mul(a: TropValue, b: TropValue) -> TropValue {
    match (a, b) {
        (TropValue::Finite(x), TropValue::Finite(y)) => TropValue::Finite(x + y),
        _ => TropValue::NegInf,
    }
}

/// Scalar multiple `q · a`; `-inf` is fixed.
pub fn t_scale(q: Rational, a: TropValue) -> TropValue {
    match a {
        TropValue::Finite(x) => TropValue::Finite(q * x),
        TropValue::NegInf => TropValue::NegInf,
    }
}

/// Tropical sum of an iterator; `-inf` when empty.
pub fn t_sum<I: IntoIterator<Item = TropValue>>(values: I) -> TropValue {
    values.into_iter().fold(TropValue::NegInf, t_add)
}

/// Tropical product of an iterator; tropical one (0) when empty.
pub fn t_prod<I: IntoIterator<Item = TropValue>>(values: I) -> TropValue {
    values.into_iter().fold(TropValue::ONE, t_mul)
}

impl Sum for TropValue {
    fn sum<I: Iterator<Item = TropValue>>(iter: I) -> Self {
        t_sum(iter)
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropValue::NegInf => f.write_str("-inf"),
            TropValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for TropValue {
    type Err = Error;

    /// Accepts `"-inf"`, integers and `"p/q"` fractions.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("-inf") {
            return Ok(TropValue::NegInf);
        }
        parse_rational(t).map(TropValue::Finite)
    }
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let numer: i64 = n.parse().map_err(|_| bad())?;
    let denom: i64 = d.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}
