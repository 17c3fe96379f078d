//! Exact scalars and dense exact linear algebra.
//!
//! Every computation in the crate is generic over [`Scalar`], a field with
//! exact arithmetic. Two implementations ship: [`Rational`] (arbitrary
//! precision rationals) and [`RatFunc`] (univariate rational functions over
//! the rationals in an indeterminate `t`).

mod matrix;
mod ratfunc;
mod upoly;

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use matrix::{AffineSolution, Matrix, Rref};
pub use ratfunc::RatFunc;
pub use upoly::UPoly;

/// Arbitrary precision rational number.
pub type Rational = num_rational::BigRational;

/// Error produced when a scalar literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal `{literal}`: {reason}")]
pub struct ScalarParseError {
    pub literal: String,
    pub reason: String,
}

impl ScalarParseError {
    pub(crate) fn new(literal: &str, reason: impl Into<String>) -> Self {
        Self {
            literal: literal.to_string(),
            reason: reason.into(),
        }
    }
}

/// A field with exact arithmetic.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Short tag naming the variant in file headers and reports.
    const VARIANT: &'static str;

    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// Integer power; negative exponents invert. Panics on `0^negative`.
    fn powi(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inv().expect("zero raised to a negative power")
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc *= &base;
        }
        acc
    }

    /// Parses the serialization produced by `Display`.
    fn parse_literal(s: &str) -> Result<Self, ScalarParseError>;

    /// `Some(q)` when the value is a rational constant.
    fn as_rational(&self) -> Option<Rational>;
}

impl Scalar for Rational {
    const VARIANT: &'static str = "rational";

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn parse_literal(s: &str) -> Result<Self, ScalarParseError> {
        parse_rational(s)
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Parses `p`, `p/q` with optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ScalarParseError::new(s, "empty"));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| ScalarParseError::new(s, "bad numerator"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| ScalarParseError::new(s, "bad denominator"))?;
    if den.is_zero() {
        return Err(ScalarParseError::new(s, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_round_trip() {
        for lit in ["0", "-3", "7/2", "-1/3"] {
            let q = parse_rational(lit).unwrap();
            assert_eq!(q.to_string(), lit);
            assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
        }
        assert_eq!(parse_rational(" 4/6 ").unwrap(), ratio(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn powi_handles_negative_exponents() {
        let two = rat(2);
        assert_eq!(two.powi(3), rat(8));
        assert_eq!(two.powi(-2), ratio(1, 4));
        assert_eq!(two.powi(0), rat(1));
    }
}
