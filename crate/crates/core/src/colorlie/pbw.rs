//! Arithmetic in `U(L)` on the PBW basis.
//!
//! Basis elements are ordered by (total degree, input order); a PBW
//! monomial is a word that is nondecreasing in this order. Words are
//! rewritten with `b_j b_i -> ε(|b_j|, |b_i|) b_i b_j + [b_j, b_i]`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use super::{check_color_axioms, ColorLieAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element of `U(L)`: PBW monomial (basis indices) -> coefficient.
pub type UElement<S> = BTreeMap<Vec<usize>, S>;

/// Which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    Leftmost,
    Rightmost,
}

pub(crate) fn add_scaled<S: Scalar>(acc: &mut UElement<S>, other: &UElement<S>, c: &S) {
    if c.is_zero() {
        return;
    }
    for (w, v) in other {
        let e = acc.entry(w.clone()).or_insert_with(S::zero);
        *e += &(c.clone() * v);
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

/// PBW rewriting with a memo of normal forms.
pub struct Pbw<'a, S> {
    l: &'a ColorLieAlgebra<S>,
    key: Vec<usize>,
    order: RewriteOrder,
    memo: RefCell<HashMap<Vec<usize>, UElement<S>>>,
}

impl<'a, S: Scalar> Pbw<'a, S> {
    /// No axiom check: a corrupted algebra still yields some rewriting
    /// (possibly order-dependent).
    pub fn new(l: &'a ColorLieAlgebra<S>, order: RewriteOrder) -> Self {
        let mut idx: Vec<usize> = (0..l.dim()).collect();
        idx.sort_by_key(|&i| (l.total_degree(i), i));
        let mut key = vec![0; l.dim()];
        for (pos, &i) in idx.iter().enumerate() {
            key[i] = pos;
        }
        Self {
            l,
            key,
            order,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &ColorLieAlgebra<S> {
        self.l
    }

    /// Position of basis element `i` in the PBW order.
    pub fn key(&self, i: usize) -> usize {
        self.key[i]
    }

    pub fn is_sorted(&self, w: &[usize]) -> bool {
        w.windows(2).all(|p| self.key[p[0]] <= self.key[p[1]])
    }

    fn inversion(&self, w: &[usize]) -> Option<usize> {
        let bad = |k: &usize| self.key[w[*k]] > self.key[w[*k + 1]];
        let n = w.len().saturating_sub(1);
        match self.order {
            RewriteOrder::Leftmost => (0..n).find(bad),
            RewriteOrder::Rightmost => (0..n).rev().find(bad),
        }
    }

    pub fn normal_form(&self, w: &[usize]) -> UElement<S> {
        if let Some(v) = self.memo.borrow().get(w) {
            return v.clone();
        }
        let out = match self.inversion(w) {
            None => BTreeMap::from([(w.to_vec(), S::one())]),
            Some(k) => {
                let (a, b) = (w[k], w[k + 1]);
                let mut out = BTreeMap::new();
                let mut swapped = w.to_vec();
                swapped.swap(k, k + 1);
                let e = self.l.eps(self.l.degree(a), self.l.degree(b));
                add_scaled(&mut out, &self.normal_form(&swapped), &e);
                for (c, coeff) in self.l.bracket_basis(a, b).iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut shorter = w[..k].to_vec();
                    shorter.push(c);
                    shorter.extend_from_slice(&w[k + 2..]);
                    add_scaled(&mut out, &self.normal_form(&shorter), coeff);
                }
                out
            }
        };
        self.memo.borrow_mut().insert(w.to_vec(), out.clone());
        out
    }

    pub fn mul(&self, a: &UElement<S>, b: &UElement<S>) -> UElement<S> {
        let mut out = BTreeMap::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                add_scaled(&mut out, &self.normal_form(&w), &(ca.clone() * cb));
            }
        }
        out
    }

    /// Image of an `L`-vector in `U(L)`.
    pub fn from_vector(&self, v: &[S]) -> UElement<S> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i], c.clone()))
            .collect()
    }

    pub fn format(&self, u: &UElement<S>) -> String {
        if u.is_empty() {
            return "0".into();
        }
        let names = self.l.names();
        u.iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("*")
                };
                if c.is_one() {
                    word
                } else {
                    format!("{c}*{word}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Normal form of a word in basis elements; the algebra must satisfy the
/// color Lie axioms.
pub fn pbw_normal_form<S: Scalar>(l: &ColorLieAlgebra<S>, word: &[usize]) -> Result<UElement<S>> {
    if let Some(&bad) = word.iter().find(|&&i| i >= l.dim()) {
        return Err(Error::Precondition(format!("basis index {bad} out of range")));
    }
    let rep = check_color_axioms(l);
    if !rep.ok() {
        return Err(Error::Precondition(format!(
            "color Lie axioms fail: {}",
            rep.violations[0].describe(l.names())
        )));
    }
    Ok(Pbw::new(l, RewriteOrder::Leftmost).normal_form(word))
}

fn require_positive<S: Scalar>(l: &ColorLieAlgebra<S>) -> Result<()> {
    match (0..l.dim()).find(|&i| l.total_degree(i) <= 0) {
        Some(i) => Err(Error::Precondition(format!(
            "basis element {} has nonpositive total degree",
            l.names()[i]
        ))),
        None => Ok(()),
    }
}

/// PBW monomials of total degree `d`, as nondecreasing words.
pub fn pbw_monomials<S: Scalar>(l: &ColorLieAlgebra<S>, d: usize) -> Result<Vec<Vec<usize>>> {
    require_positive(l)?;
    let mut idx: Vec<usize> = (0..l.dim()).collect();
    idx.sort_by_key(|&i| (l.total_degree(i), i));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec<S: Scalar>(
        l: &ColorLieAlgebra<S>,
        idx: &[usize],
        from: usize,
        left: i64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in from..idx.len() {
            let deg = l.total_degree(idx[p]);
            if deg <= left {
                cur.push(idx[p]);
                rec(l, idx, p, left - deg, cur, out);
                cur.pop();
            }
        }
    }
    rec(l, &idx, 0, d as i64, &mut cur, &mut out);
    Ok(out)
}

/// `dim U(L)_d` by PBW monomial counting.
pub fn pbw_dimension<S: Scalar>(l: &ColorLieAlgebra<S>, d: usize) -> Result<usize> {
    Ok(pbw_monomials(l, d)?.len())
}
