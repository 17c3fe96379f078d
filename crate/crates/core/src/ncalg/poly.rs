use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::Word;
use crate::scalar::Scalar;

/// Element of the free algebra: a finitely supported map from words to
/// nonzero scalars.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> NCPoly<S> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(letters: &[usize]) -> Self {
        Self::monomial(Word::new(letters.to_vec()), S::one())
    }

    pub fn generator(g: usize) -> Self {
        Self::word(&[g])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    /// Largest word in the support.
    pub fn leading(&self) -> Option<(&Word, &S)> {
        self.terms.iter().next_back()
    }

    /// The common length of all words, if the polynomial is nonzero and
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|w| w.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().filter_map(Word::max_letter).max()
    }

    pub fn component(&self, d: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> NCPoly<T> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Substitutes a polynomial for every generator.
    pub fn substitute(&self, images: &[NCPoly<S>]) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &g in w.letters() {
                term = &term * &images[g];
            }
            out = &out + &term;
        }
        out
    }

    /// Serializes in relation syntax, e.g. `x*x*y - 4*x*y*x + 4*y*x*x`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match c.as_rational() {
                Some(q) if q < num_rational::BigRational::zero() => (true, S::from_rational(&-q)),
                Some(_) => (false, c.clone()),
                None => (false, c.clone()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = w.to_string_with(names);
            if w.degree() == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("{mag}*{word}"));
            }
        }
        out
    }
}

impl<S: Scalar> Default for NCPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Add<&NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn add(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub<&NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn sub(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<S: Scalar> Neg for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn neg(self) -> NCPoly<S> {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

/// Concatenation product, extended bilinearly.
impl<S: Scalar> Mul<&NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn mul(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.concat(b), ca.clone() * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type P = NCPoly<Rational>;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn x() -> P {
        P::generator(0)
    }

    fn y() -> P {
        P::generator(1)
    }

    #[test]
    fn word_product() {
        let xy = &x() * &y();
        assert_eq!(&xy * &x(), P::word(&[0, 1, 0]));
        assert_eq!(xy.homogeneous_degree(), Some(2));
    }

    #[test]
    fn difference_of_squares_expansion() {
        let p = &(&x() - &y()) * &(&x() + &y());
        assert_eq!(p.to_string_with(&names()), "x*x + x*y - y*x - y*y");
    }

    #[test]
    fn square_of_skew_commutator() {
        let two = rat(2);
        let f = &(&x() * &y()) - &(&y() * &x()).scale(&two);
        let sq = &f * &f;
        assert_eq!(
            sq.to_string_with(&names()),
            "x*y*x*y - 2*x*y*y*x - 2*y*x*x*y + 4*y*x*y*x"
        );
        assert_eq!(sq.homogeneous_degree(), Some(4));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &x() - &x();
        assert!(p.is_zero());
        assert_eq!(p.homogeneous_degree(), None);
        assert!(p.is_homogeneous());
        let mixed = &x() + &(&x() * &y());
        assert!(!mixed.is_homogeneous());
    }
}
