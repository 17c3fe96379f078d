use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Rational, Scalar, ScalarParseError, UPoly};

/// Rational function `num / den` in one indeterminate `t` over the rationals.
///
/// Always canonical: `gcd(num, den) = 1`, `den` monic, and zero is `0/1`, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_rem(&g).0, den.div_rem(&g).0);
        let lc = den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn from_poly(p: UPoly) -> Self {
        Self {
            num: p,
            den: UPoly::one(),
        }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_poly(UPoly::t())
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    /// Value at `t = x`; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den);
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for RatFunc {
    type Output = RatFunc;

    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

macro_rules! forward_assign {
    ($($tr:ident $m:ident $op:ident),*) => {$(
        impl $tr<&RatFunc> for RatFunc {
            fn $m(&mut self, rhs: &RatFunc) {
                let lhs = std::mem::take(self);
                *self = lhs.$op(rhs);
            }
        }
    )*};
}
forward_assign!(AddAssign add_assign add, SubAssign sub_assign sub, MulAssign mul_assign mul);

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl Scalar for RatFunc {
    const VARIANT: &'static str = "rational-function";

    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(UPoly::constant(q.clone()))
    }

    /// Accepts `(num)/(den)`, `(num)`, or a bare polynomial such as `3*t^2-1`.
    fn parse_literal(s: &str) -> Result<Self, ScalarParseError> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let close = matching_paren(rest).ok_or_else(|| ScalarParseError::new(s, "unbalanced parentheses"))?;
            let num = UPoly::parse(&rest[..close])?;
            let tail = rest[close + 1..].trim();
            if tail.is_empty() {
                return Ok(Self::from_poly(num));
            }
            let den_text = tail
                .strip_prefix('/')
                .ok_or_else(|| ScalarParseError::new(s, "expected `/`"))?
                .trim();
            let den_text = den_text
                .strip_prefix('(')
                .and_then(|d| d.strip_suffix(')'))
                .unwrap_or(den_text);
            let den = UPoly::parse(den_text)?;
            if den.is_zero() {
                return Err(ScalarParseError::new(s, "zero denominator"));
            }
            return Ok(Self::new(num, den));
        }
        Ok(Self::from_poly(UPoly::parse(t)?))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn canonical_form_has_monic_denominator() {
        // (2t + 2) / (2t^2 - 2) = 1 / (t - 1)
        let num = UPoly::new(vec![rat(2), rat(2)]);
        let den = UPoly::new(vec![rat(-2), rat(0), rat(2)]);
        let f = RatFunc::new(num, den);
        assert_eq!(f.numer(), &UPoly::one());
        assert_eq!(f.denom(), &UPoly::new(vec![rat(-1), rat(1)]));
        assert_eq!(f.to_string(), "(1)/(t-1)");
    }

    #[test]
    fn literal_round_trip() {
        for lit in ["(3*t^2-1)/(t+1)", "(t)/(1)", "(-1/2)/(t^2+1)"] {
            let f = RatFunc::parse_literal(lit).unwrap();
            assert_eq!(RatFunc::parse_literal(&f.to_string()).unwrap(), f);
        }
        assert_eq!(RatFunc::parse_literal("2").unwrap(), RatFunc::from_rational(&rat(2)));
        assert_eq!(RatFunc::parse_literal("(t)").unwrap(), RatFunc::t());
    }

    #[test]
    fn arithmetic_simplifies() {
        let t = RatFunc::t();
        let one = RatFunc::one();
        let a = one.clone() / (t.clone() - &one);
        let b = one.clone() / (t.clone() + &one);
        // 1/(t-1) - 1/(t+1) = 2/(t^2-1)
        let d = a - &b;
        assert_eq!(d.to_string(), "(2)/(t^2-1)");
        assert_eq!(d.eval(&rat(3)), Some(ratio(1, 4)));
        assert_eq!(d.eval(&rat(1)), None);
        assert!((t.clone() / &t - &one).is_zero());
    }
}
