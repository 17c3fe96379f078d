//! The color Koszul complex `C_r = U(L) ⊗ Λ_ε^r L`, materialized per
//! internal (total) degree.

use std::collections::HashMap;

use super::pbw::{pbw_monomials, Pbw, RewriteOrder};
use super::ColorLieAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{Matrix, Scalar};

/// Largest `dim C_{r,δ}` materialized.
const CELL_BUDGET: u64 = 20_000;

type Cell = (Vec<usize>, usize);

#[derive(Clone, Debug)]
pub struct KoszulComplex<S> {
    pub r_max: usize,
    pub cap: usize,
    /// `wedges[r]`: strictly increasing basis-index words of length `r`.
    pub wedges: Vec<Vec<Vec<usize>>>,
    /// `cells[r][δ]`: basis of `C_r` in degree `δ` as (PBW monomial, wedge
    /// index).
    pub cells: Vec<Vec<Vec<Cell>>>,
    /// `d[r][δ]` for `r ≥ 1` (`d[0]` is empty): columns are images of
    /// `cells[r][δ]` in the basis `cells[r-1][δ]`.
    pub d: Vec<Vec<Matrix<S>>>,
    pub dim_l: usize,
}

impl<S: Scalar> KoszulComplex<S> {
    pub fn dim(&self, r: usize, delta: usize) -> usize {
        self.cells[r][delta].len()
    }

    /// Free rank of `C_r` over `U(L)`.
    pub fn free_rank(&self, r: usize) -> usize {
        self.wedges[r].len()
    }
}

fn wedge_words(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, r: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in from..n {
            cur.push(k);
            rec(n, r, k + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, r, 0, &mut cur, &mut out);
    out
}

/// `b_k ∧ rest` with `rest` increasing, as (sign, sorted word), using
/// `u∧v = -ε(|u|,|v|) v∧u`; `None` when `k` repeats.
fn insert_sorted<S: Scalar>(l: &ColorLieAlgebra<S>, k: usize, rest: &[usize]) -> Option<(S, Vec<usize>)> {
    if rest.contains(&k) {
        return None;
    }
    let p = rest.iter().take_while(|&&w| w < k).count();
    let mut c = S::one();
    for &w in &rest[..p] {
        c *= &(-l.eps(l.degree(k), l.degree(w)));
    }
    let mut out = rest[..p].to_vec();
    out.push(k);
    out.extend_from_slice(&rest[p..]);
    Some((c, out))
}

/// Builds `d_1, …, d_{r_max}` in internal degrees `0..=cap`. The axioms
/// are not checked, so a corrupted algebra yields a complex whose defect
/// [`koszul_verify`] reports.
pub fn koszul_complex<S: Scalar>(l: &ColorLieAlgebra<S>, r_max: usize, cap: usize) -> Result<KoszulComplex<S>> {
    let n = l.dim();
    if r_max > n {
        return Err(Error::Precondition(format!("r_max = {r_max} exceeds dim L = {n}")));
    }
    let pbw = Pbw::new(l, RewriteOrder::Leftmost);
    let monomials: Vec<Vec<Vec<usize>>> = (0..=cap).map(|d| pbw_monomials(l, d)).collect::<Result<_>>()?;
    let wedges: Vec<Vec<Vec<usize>>> = (0..=r_max).map(|r| wedge_words(n, r)).collect();
    let wdeg = |w: &[usize]| w.iter().map(|&i| l.total_degree(i)).sum::<i64>();
    let mut cells = vec![vec![Vec::new(); cap + 1]; r_max + 1];
    for r in 0..=r_max {
        for delta in 0..=cap {
            let mut basis = Vec::new();
            for (wi, w) in wedges[r].iter().enumerate() {
                let rest = delta as i64 - wdeg(w);
                if rest >= 0 {
                    for m in &monomials[rest as usize] {
                        basis.push((m.clone(), wi));
                    }
                }
            }
            if basis.len() as u64 > CELL_BUDGET {
                return Err(Error::BudgetExceeded {
                    degree: delta,
                    words: basis.len() as u128,
                    budget: CELL_BUDGET,
                });
            }
            cells[r][delta] = basis;
        }
    }
    let mut d = vec![Vec::new()];
    for r in 1..=r_max {
        let wedge_index: HashMap<&Vec<usize>, usize> = wedges[r - 1].iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut per_degree = Vec::with_capacity(cap + 1);
        for delta in 0..=cap {
            let target: HashMap<&Cell, usize> = cells[r - 1][delta].iter().enumerate().map(|(i, c)| (c, i)).collect();
            let mut mat = Matrix::zeros(target.len(), cells[r][delta].len());
            for (col, (a, wi)) in cells[r][delta].iter().enumerate() {
                let v = &wedges[r][*wi];
                let mut put = |mono: Vec<usize>, wedge: Vec<usize>, c: S| -> Result<()> {
                    let key = (mono, wedge_index[&wedge]);
                    let row = *target.get(&key).ok_or_else(|| {
                        Error::Precondition("differential leaves its degree; the grading axiom fails".into())
                    })?;
                    mat[(row, col)] += &c;
                    Ok(())
                };
                let eta: Vec<S> = (0..r)
                    .map(|i| {
                        (0..i).fold(S::one(), |acc, t| acc * l.eps(l.degree(v[t]), l.degree(v[i])))
                    })
                    .collect();
                for i in 0..r {
                    let sign = if i % 2 == 0 { S::one() } else { -S::one() };
                    let coeff = sign * &eta[i];
                    let mut w = a.clone();
                    w.push(v[i]);
                    let rest: Vec<usize> = v.iter().enumerate().filter(|(t, _)| *t != i).map(|(_, &x)| x).collect();
                    for (mono, c) in pbw.normal_form(&w) {
                        put(mono, rest.clone(), coeff.clone() * &c)?;
                    }
                }
                for i in 0..r {
                    for j in i + 1..r {
                        let br = l.bracket_basis(v[i], v[j]);
                        if br.iter().all(|c| c.is_zero()) {
                            continue;
                        }
                        let sign = if (i + j) % 2 == 0 { S::one() } else { -S::one() };
                        let coeff = sign * &eta[i] * &eta[j] * l.eps(l.degree(v[j]), l.degree(v[i]));
                        let rest: Vec<usize> = v
                            .iter()
                            .enumerate()
                            .filter(|(t, _)| *t != i && *t != j)
                            .map(|(_, &x)| x)
                            .collect();
                        for (k, ck) in br.iter().enumerate() {
                            if ck.is_zero() {
                                continue;
                            }
                            if let Some((s, wedge)) = insert_sorted(l, k, &rest) {
                                put(a.clone(), wedge, coeff.clone() * ck * &s)?;
                            }
                        }
                    }
                }
            }
            per_degree.push(mat);
        }
        d.push(per_degree);
    }
    Ok(KoszulComplex {
        r_max,
        cap,
        wedges,
        cells,
        d,
        dim_l: n,
    })
}

/// Failures found by [`koszul_verify`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KoszulReport {
    /// `(r, δ)` with `d_{r-1} d_r ≠ 0` in degree `δ`.
    pub d_squared_failures: Vec<(usize, usize)>,
    /// `(r, δ, rank d_r + rank d_{r+1}, dim C_{r,δ})` where these differ.
    pub exactness_failures: Vec<(usize, usize, usize, usize)>,
    /// Homology at `C_0` is one-dimensional, in degree 0.
    pub h0_is_k: bool,
    pub degrees_checked: usize,
}

impl KoszulReport {
    pub fn d_squared_zero(&self) -> bool {
        self.d_squared_failures.is_empty()
    }

    pub fn exact(&self) -> bool {
        self.exactness_failures.is_empty() && self.h0_is_k
    }

    pub fn passed(&self) -> bool {
        self.d_squared_zero() && self.exact()
    }
}

/// Checks `d² = 0` and exactness in internal degrees `1..=cap`. Exactness
/// at `C_r` needs `d_{r+1}`, so it is checked for `r < r_max`, and at
/// `r = r_max` too when `r_max = dim L`.
pub fn koszul_verify<S: Scalar>(k: &KoszulComplex<S>) -> KoszulReport {
    let mut rep = KoszulReport::default();
    for r in 2..=k.r_max {
        for delta in 0..=k.cap {
            let (a, b) = (&k.d[r - 1][delta], &k.d[r][delta]);
            if a.rows() == 0 || b.cols() == 0 || a.cols() == 0 {
                continue;
            }
            if !a.mul(b).is_zero() {
                rep.d_squared_failures.push((r, delta));
            }
        }
    }
    let rank = |r: usize, delta: usize| -> usize {
        if r == 0 || r > k.r_max {
            0
        } else {
            k.d[r][delta].rank()
        }
    };
    let top = if k.r_max == k.dim_l { k.r_max } else { k.r_max.saturating_sub(1) };
    for delta in 1..=k.cap {
        for r in 0..=top {
            let s = rank(r, delta) + rank(r + 1, delta);
            let dim = k.dim(r, delta);
            if s != dim {
                rep.exactness_failures.push((r, delta, s, dim));
            }
        }
    }
    rep.h0_is_k = k.dim(0, 0) == 1 && (k.r_max == 0 || rank(1, 0) == 0);
    rep.degrees_checked = k.cap;
    rep
}
