use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{parse_rational, Rational, ScalarParseError};

/// Dense univariate polynomial over the rationals in the indeterminate `t`.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division `self = q * other + r` with `deg r < deg other`.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        let d = other.degree().expect("polynomial division by zero");
        let lc = other.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let c = rem.last().unwrap() / lc;
            if !c.is_zero() {
                for (i, b) in other.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * b;
                }
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| &c / &g * &sign).collect()
    }

    /// All distinct rational roots together with the degree of the part of
    /// the polynomial left unexplained (roots outside the rationals).
    ///
    /// Returns `None` when candidate enumeration would need to factor a
    /// coefficient beyond `divisor_limit`.
    pub fn rational_roots(&self, divisor_limit: u64) -> Option<(Vec<Rational>, usize)> {
        if self.is_zero() {
            return Some((Vec::new(), 0));
        }
        // Squarefree part: roots are unchanged, multiplicities collapse.
        let mut sq = self.clone();
        let g = self.gcd(&self.derivative());
        if !g.is_constant() {
            sq = self.div_rem(&g).0;
        }
        let mut roots = Vec::new();
        // Strip roots at zero.
        while sq.degree().unwrap_or(0) > 0 && sq.constant_term().is_zero() {
            if !roots.contains(&Rational::zero()) {
                roots.push(Rational::zero());
            }
            sq = Self::new(sq.coeffs[1..].to_vec());
        }
        loop {
            match sq.degree() {
                None | Some(0) => return Some((roots, 0)),
                Some(1) => {
                    roots.push(-sq.coeffs[0].clone() / &sq.coeffs[1]);
                    return Some((roots, 0));
                }
                Some(2) => {
                    let (c, b, a) = (&sq.coeffs[0], &sq.coeffs[1], &sq.coeffs[2]);
                    let disc = b * b - Rational::from_integer(BigInt::from(4)) * a * c;
                    return match rational_sqrt(&disc) {
                        Some(s) => {
                            let two_a = a * Rational::from_integer(BigInt::from(2));
                            roots.push((-b.clone() + &s) / &two_a);
                            if !s.is_zero() {
                                roots.push((-b.clone() - s) / two_a);
                            }
                            Some((roots, 0))
                        }
                        None => Some((roots, 2)),
                    };
                }
                Some(deg) => {
                    let ints = sq.primitive_integer();
                    let a0 = ints[0].abs();
                    let an = ints[deg].abs();
                    let ps = divisors(&a0, divisor_limit)?;
                    let qs = divisors(&an, divisor_limit)?;
                    let mut found = None;
                    'search: for p in &ps {
                        for q in &qs {
                            for sign in [1i64, -1] {
                                let cand = Rational::new(
                                    BigInt::from(*p) * BigInt::from(sign),
                                    BigInt::from(*q),
                                );
                                if sq.eval(&cand).is_zero() {
                                    found = Some(cand);
                                    break 'search;
                                }
                            }
                        }
                    }
                    match found {
                        Some(r) => {
                            let lin = Self::new(vec![-r.clone(), Rational::one()]);
                            sq = sq.div_rem(&lin).0;
                            roots.push(r);
                        }
                        None => return Some((roots, deg)),
                    }
                }
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self, ScalarParseError> {
        parse_upoly(s)
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn divisors(n: &BigInt, limit: u64) -> Option<Vec<u64>> {
    let n: u64 = n.try_into().ok()?;
    if n > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    Some(out)
}

impl Zero for UPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;

    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Sub<&UPoly> for &UPoly {
    type Output = UPoly;

    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;

    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;

    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<UPoly> for UPoly {
            type Output = UPoly;

            fn $m(self, rhs: UPoly) -> UPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UPoly {
    type Output = UPoly;

    fn neg(self) -> UPoly {
        -&self
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses sums of terms `c`, `c*t`, `c*t^k`, `t^k` (coefficients may be
/// fractions like `1/2`).
fn parse_upoly(s: &str) -> Result<UPoly, ScalarParseError> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(ScalarParseError::new(s, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = text.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&text[start..i]);
            start = i;
        }
    }
    terms.push(&text[start..]);
    let mut acc = UPoly::zero();
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (-Rational::one(), &term[1..]),
            Some(b'+') => (Rational::one(), &term[1..]),
            _ => (Rational::one(), term),
        };
        if body.is_empty() {
            return Err(ScalarParseError::new(s, "dangling sign"));
        }
        let mut coeff = sign;
        let mut power = 0usize;
        for factor in body.split('*') {
            if let Some(rest) = factor.strip_prefix('t') {
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| ScalarParseError::new(s, "bad exponent"))?
                };
                power += k;
            } else {
                coeff *= parse_rational(factor)?;
            }
        }
        let mut cs = vec![Rational::zero(); power + 1];
        cs[power] = coeff;
        acc = &acc + &UPoly::new(cs);
    }
    Ok(acc)
}
