//! Exact membership / non-membership degrees.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = Ratio<i64>;

pub const ZERO: Rational = Ratio::new_raw(0, 1);
pub const ONE: Rational = Ratio::new_raw(1, 1);

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("cannot parse degree {0:?}")]
    Syntax(String),
    #[error("degree {0} outside [0, 1]")]
    OutOfRange(Rational),
    #[error("degrees {mu} + {nu} exceed 1")]
    SumExceedsOne { mu: Rational, nu: Rational },
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.3` into an
/// exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, DegreeError> {
    let t = text.trim();
    let err = || DegreeError::Syntax(t.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| err())?;
        let q: i64 = q.trim().parse().map_err(|_| err())?;
        if q <= 0 {
            return Err(err());
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
            return Err(err());
        }
        let negative = int.starts_with('-');
        let whole: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| err())? };
        let scale = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().map_err(|_| err())?;
        let magnitude = whole.abs().checked_mul(scale).and_then(|w| w.checked_add(f)).ok_or_else(err)?;
        let numer = if negative || whole < 0 { -magnitude } else { magnitude };
        return Ok(Ratio::new(numer, scale));
    }
    let n: i64 = t.parse().map_err(|_| err())?;
    Ok(Ratio::from_integer(n))
}

/// Parses a degree and checks it lies in `[0, 1]`.
pub fn parse_unit(text: &str) -> Result<Rational, DegreeError> {
    let q = parse_rational(text)?;
    if q < Rational::zero() || q > Rational::one() {
        return Err(DegreeError::OutOfRange(q));
    }
    Ok(q)
}

/// The value `(μ, ν)` of an intuitionistic fuzzy set at one element, with
/// `μ, ν ≥ 0` and `μ + ν ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreePair {
    mu: Rational,
    nu: Rational,
}

impl DegreePair {
    /// Full membership `(1, 0)`.
    pub const TOP: DegreePair = DegreePair { mu: ONE, nu: ZERO };
    /// Full non-membership `(0, 1)`.
    pub const BOTTOM: DegreePair = DegreePair { mu: ZERO, nu: ONE };

    pub fn new(mu: Rational, nu: Rational) -> Result<Self, DegreeError> {
        for v in [mu, nu] {
            if v < ZERO || v > ONE {
                return Err(DegreeError::OutOfRange(v));
            }
        }
        if mu + nu > ONE {
            return Err(DegreeError::SumExceedsOne { mu, nu });
        }
        Ok(DegreePair { mu, nu })
    }

    /// Convenience constructor from small integer fractions; panics on
    /// invalid input, so only meant for literals.
    pub fn frac(mu: (i64, i64), nu: (i64, i64)) -> Self {
        Self::new(Ratio::new(mu.0, mu.1), Ratio::new(nu.0, nu.1)).expect("valid degree literal")
    }

    #[inline]
    pub fn mu(&self) -> Rational {
        self.mu
    }

    #[inline]
    pub fn nu(&self) -> Rational {
        self.nu
    }

    /// `self ⊆ other` pointwise: `μ ≤ μ'` and `ν ≥ ν'`.
    #[inline]
    pub fn le(&self, other: &DegreePair) -> bool {
        self.mu <= other.mu && self.nu >= other.nu
    }

    /// `(μ ∨ μ', ν ∧ ν')`; stays valid because the argument attaining the
    /// larger `μ` already bounds the smaller `ν`.
    pub fn join(&self, other: &DegreePair) -> DegreePair {
        DegreePair { mu: self.mu.max(other.mu), nu: self.nu.min(other.nu) }
    }

    pub fn meet(&self, other: &DegreePair) -> DegreePair {
        DegreePair { mu: self.mu.min(other.mu), nu: self.nu.max(other.nu) }
    }

    /// Ordering key for shrinking: smaller means closer to `(0, 1)`.
    pub fn shrink_key(&self) -> (Rational, Rational) {
        (self.mu, -self.nu)
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.mu, self.nu)
    }
}

impl FromStr for DegreePair {
    type Err = DegreeError;

    /// `"μ, ν"` with each side in any form accepted by [`parse_rational`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (mu, nu) = s.split_once(',').ok_or_else(|| DegreeError::Syntax(s.trim().to_string()))?;
        DegreePair::new(parse_unit(mu)?, parse_unit(nu)?)
    }
}

/// Parameters of an `(α, β)`-cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CutSpec {
    alpha: Rational,
    beta: Rational,
    strict: bool,
}

impl CutSpec {
    pub fn new(alpha: Rational, beta: Rational, strict: bool) -> Result<Self, DegreeError> {
        DegreePair::new(alpha, beta)?;
        Ok(CutSpec { alpha, beta, strict })
    }

    pub fn alpha(&self) -> Rational {
        self.alpha
    }

    pub fn beta(&self) -> Rational {
        self.beta
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Whether a single degree pair passes the cut.
    pub fn admits(&self, d: DegreePair) -> bool {
        if self.strict {
            d.mu > self.alpha && d.nu < self.beta
        } else {
            d.mu >= self.alpha && d.nu <= self.beta
        }
    }
}

impl fmt::Display for CutSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.strict { "strict" } else { "level" };
        write!(f, "{kind}({},{})", self.alpha, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("0.3").unwrap(), Ratio::new(3, 10));
        assert_eq!(parse_rational("0.5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_rational("2/4").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_rational("1").unwrap(), ONE);
        assert_eq!(parse_rational(".25").unwrap(), Ratio::new(1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("0.").is_err());
    }

    #[test]
    fn pair_invariant() {
        assert!("2/3, 2/3".parse::<DegreePair>().is_err());
        assert!(matches!(DegreePair::new(Ratio::new(2, 3), Ratio::new(2, 3)), Err(DegreeError::SumExceedsOne { .. })));
        assert!(DegreePair::new(Ratio::new(-1, 3), ZERO).is_err());
        let d: DegreePair = "1/2, 0.5".parse().unwrap();
        assert_eq!(d.to_string(), "1/2,1/2");
        assert_eq!(DegreePair::TOP.to_string(), "1,0");
    }

    #[test]
    fn cut_admission() {
        let half = Ratio::new(1, 2);
        let level = CutSpec::new(half, half, false).unwrap();
        let strict = CutSpec::new(half, half, true).unwrap();
        let d = DegreePair::frac((1, 2), (1, 2));
        assert!(level.admits(d));
        assert!(!strict.admits(d));
        assert!(CutSpec::new(ONE, ONE, false).is_err());
    }
}
