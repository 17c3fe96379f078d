//! Truncated point modules as sequences of projective points.
//!
//! A sequence `p⁽¹⁾, …, p⁽ᵈ⁾` encodes the module with basis `m_0, …, m_d`
//! and action `x_j·m_i = p⁽ⁱ⁺¹⁾_j·m_{i+1}`, i.e. a truncated point module of
//! length `d + 1`. A word acts rightmost letter first, so
//! `x_{j_1}⋯x_{j_e}·m_i = Π_{t=1..e} p⁽ⁱ⁺ᵗ⁾_{j_{e+1-t}} · m_{i+e}`.

mod compare;
mod search;
mod skew;

pub use compare::{compare_point_sets, stabilization_check, CompareReport, LengthStats, StabilizationReport};
pub use search::{
    sample_modules, torsionfree_search, SampleSet, SearchConfig, SearchStats, SeedSummary, TorsionfreeReport,
};
pub use skew::{skew_point_variety, SupportFamily};

use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Presentation};
use crate::scalar::{Matrix, Scalar};

/// A projective point stored with its first nonzero coordinate equal to one.
pub type Point<S> = Vec<S>;

/// Scales `v` so its first nonzero coordinate is one; `None` for zero.
pub fn normalize_point<S: Scalar>(v: &[S]) -> Option<Point<S>> {
    let lead = v.iter().find(|c| !c.is_zero())?;
    let inv = lead.inv()?;
    Some(v.iter().map(|c| c.clone() * &inv).collect())
}

/// Coefficient of the word `f` acting `m_start → m_{start+e}`, summed over
/// the terms of `f`; the points are 1-indexed in the formula, 0-indexed here.
pub fn window_value<S: Scalar>(f: &NCPoly<S>, pts: &[Point<S>], start: usize) -> S {
    let mut acc = S::zero();
    for (w, c) in f.terms() {
        let letters = w.letters();
        let e = letters.len();
        let mut prod = c.clone();
        for t in 1..=e {
            prod *= &pts[start + t - 1][letters[e - t]];
            if prod.is_zero() {
                break;
            }
        }
        acc += &prod;
    }
    acc
}

/// Result of [`is_truncated_point_module`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCheck {
    pub valid: bool,
    /// `(relation index, window start)` of the first nonvanishing window.
    pub first_violation: Option<(usize, usize)>,
}

/// Whether every relation window vanishes on the point sequence.
pub fn is_truncated_point_module<S: Scalar>(p: &Presentation<S>, pts: &[Point<S>]) -> Result<ModuleCheck> {
    check_points(p.generator_count(), pts)?;
    for start in 0..pts.len() {
        for (k, f) in p.relations().iter().enumerate() {
            let e = f.homogeneous_degree().unwrap_or(0);
            if start + e <= pts.len() && !window_value(f, pts, start).is_zero() {
                return Ok(ModuleCheck {
                    valid: false,
                    first_violation: Some((k, start)),
                });
            }
        }
    }
    Ok(ModuleCheck {
        valid: true,
        first_violation: None,
    })
}

fn check_points<S: Scalar>(m: usize, pts: &[Point<S>]) -> Result<()> {
    for (i, q) in pts.iter().enumerate() {
        if q.len() != m {
            return Err(Error::Precondition(format!(
                "point {} has {} coordinates, expected {m}",
                i + 1,
                q.len()
            )));
        }
        if q.iter().all(|c| c.is_zero()) {
            return Err(Error::Precondition(format!("point {} is zero", i + 1)));
        }
    }
    Ok(())
}

/// Linear constraints on the next point: one row per relation window that
/// ends at position `d + 1`.
pub fn fiber_constraints<S: Scalar>(p: &Presentation<S>, pts: &[Point<S>]) -> Matrix<S> {
    let m = p.generator_count();
    let d = pts.len();
    let mut rows = Vec::new();
    for f in p.relations() {
        let e = f.homogeneous_degree().unwrap_or(0);
        if e == 0 || e > d + 1 {
            continue;
        }
        let start = d + 1 - e;
        let mut row = vec![S::zero(); m];
        for (w, c) in f.terms() {
            let letters = w.letters();
            let mut prod = c.clone();
            for t in 1..e {
                prod *= &pts[start + t - 1][letters[e - t]];
            }
            row[letters[0]] += &prod;
        }
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }
    Matrix::from_rows(m, rows)
}

/// Linear space of admissible next points.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjLinearFiber<S> {
    pub basis: Vec<Vec<S>>,
    pub ambient: usize,
}

impl<S: Scalar> ProjLinearFiber<S> {
    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Projective dimension; `None` when empty.
    pub fn projective_dim(&self) -> Option<usize> {
        self.basis.len().checked_sub(1)
    }

    /// The unique point when the fiber is a single projective point.
    pub fn single_point(&self) -> Option<Point<S>> {
        match self.basis.as_slice() {
            [v] => normalize_point(v),
            _ => None,
        }
    }

    pub fn contains(&self, q: &[S]) -> bool {
        if self.basis.is_empty() {
            return false;
        }
        let mut cols = self.basis.clone();
        let base = Matrix::from_columns(self.ambient, &cols).rank();
        cols.push(q.to_vec());
        Matrix::from_columns(self.ambient, &cols).rank() == base
    }
}

/// The fiber of the projection from length `d + 1` sequences to the given
/// length `d` prefix.
pub fn extension_fiber<S: Scalar>(p: &Presentation<S>, pts: &[Point<S>]) -> Result<ProjLinearFiber<S>> {
    check_points(p.generator_count(), pts)?;
    let m = p.generator_count();
    let a = fiber_constraints(p, pts);
    let basis = if a.rows() == 0 {
        (0..m)
            .map(|i| (0..m).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect()
    } else {
        a.kernel_basis()
    };
    Ok(ProjLinearFiber { basis, ambient: m })
}

/// Scalars `λ_n, …, λ_d` with `g·m_i = λ_{i+n}·m_{i+n}`.
pub fn g_action_scalars<S: Scalar>(g: &NCPoly<S>, pts: &[Point<S>]) -> Result<Vec<S>> {
    let n = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let d = pts.len();
    if d < n {
        return Err(Error::TooShort { len: d, needed: n });
    }
    Ok((0..=d - n).map(|i| window_value(g, pts, i)).collect())
}

/// Whether no nonzero element of `P_0 ⊕ … ⊕ P_{d-n}` is killed by `g`.
pub fn is_g_torsionfree_truncated<S: Scalar>(g: &NCPoly<S>, pts: &[Point<S>]) -> Result<bool> {
    Ok(g_action_scalars(g, pts)?.iter().all(|l| !l.is_zero()))
}

/// Whether a list of scalars is entirely zero or entirely nonzero.
pub fn all_or_nothing<S: Scalar>(lambdas: &[S]) -> bool {
    lambdas.iter().all(|l| l.is_zero()) || lambdas.iter().all(|l| !l.is_zero())
}

pub fn format_point<S: Scalar>(q: &[S]) -> String {
    let parts: Vec<String> = q.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(":"))
}

pub fn format_points<S: Scalar>(pts: &[Point<S>]) -> String {
    pts.iter().map(|q| format_point(q)).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    type P = Presentation<Rational>;

    fn pt(a: i64, b: i64) -> Point<Rational> {
        vec![rat(a), rat(b)]
    }

    fn qplane() -> P {
        P::parse(&["x", "y"], &["x*y - 2*y*x"]).unwrap()
    }

    fn a44() -> P {
        P::parse(&["x", "y"], &["x*x*y - 4*x*y*x + 4*y*x*x", "x*y*y - 4*y*x*y + 4*y*y*x"]).unwrap()
    }

    /// Independent oracle: the module's action matrices, with relations
    /// evaluated as matrix products on every basis vector.
    fn oracle_valid(p: &P, pts: &[Point<Rational>]) -> bool {
        let d = pts.len();
        let dim = d + 1;
        let m = p.generator_count();
        let act: Vec<Matrix<Rational>> = (0..m)
            .map(|j| {
                let mut a = Matrix::zeros(dim, dim);
                for i in 0..d {
                    a[(i + 1, i)] = pts[i][j].clone();
                }
                a
            })
            .collect();
        for f in p.relations() {
            let mut total = Matrix::<Rational>::zeros(dim, dim);
            for (w, c) in f.terms() {
                let mut prod = Matrix::identity(dim);
                for &letter in w.letters() {
                    prod = prod.mul(&act[letter]);
                }
                for i in 0..dim {
                    for k in 0..dim {
                        total[(i, k)] += &(c.clone() * &prod[(i, k)]);
                    }
                }
            }
            if !total.is_zero() {
                return false;
            }
        }
        true
    }

    #[test]
    fn quantum_plane_membership() {
        let p = qplane();
        assert!(is_truncated_point_module(&p, &[pt(1, 1), pt(2, 1)]).unwrap().valid);
        let bad = is_truncated_point_module(&p, &[pt(1, 1), pt(1, 1)]).unwrap();
        assert_eq!(bad.first_violation, Some((0, 0)));
        assert!(is_truncated_point_module(&p, &[pt(3, 5)]).unwrap().valid);
    }

    #[test]
    fn membership_matches_matrix_oracle() {
        let p = a44();
        let q = qplane();
        let vals = [-2, -1, 0, 1, 2];
        for &a in &vals {
            for &b in &vals {
                for &c in &vals {
                    let pts = vec![pt(1, a), pt(b, 1), pt(1, c)];
                    assert_eq!(is_truncated_point_module(&p, &pts).unwrap().valid, oracle_valid(&p, &pts));
                    assert_eq!(is_truncated_point_module(&q, &pts).unwrap().valid, oracle_valid(&q, &pts));
                }
            }
        }
    }

    #[test]
    fn fiber_examples() {
        let f = extension_fiber(&qplane(), &[pt(1, 1)]).unwrap();
        assert_eq!(f.single_point(), Some(vec![rat(1), Rational::new(1.into(), 2.into())]));
        let free = P::parse(&["x", "y"], &[]).unwrap();
        let f = extension_fiber(&free, &[pt(1, 0), pt(0, 1)]).unwrap();
        assert_eq!(f.projective_dim(), Some(1));
        let f = extension_fiber(&a44(), &[pt(0, 1), pt(1, 0), pt(0, 1)]).unwrap();
        assert!(f.projective_dim().is_none_or(|d| d <= 1));
    }

    #[test]
    fn fiber_contains_last_point_of_valid_modules() {
        let p = qplane();
        let pts = vec![pt(1, 1), pt(2, 1), pt(4, 1)];
        assert!(is_truncated_point_module(&p, &pts).unwrap().valid);
        assert!(extension_fiber(&p, &pts[..2]).unwrap().contains(&pts[2]));
    }

    #[test]
    fn g_action_examples() {
        let p = a44();
        let g = p.parse_element("x*y - 2*y*x").unwrap();
        let l = g_action_scalars(&g, &[pt(1, 1), pt(2, 1), pt(4, 1)]).unwrap();
        assert_eq!(l, vec![rat(0), rat(0)]);
        let l = g_action_scalars(&g, &[pt(0, 1), pt(1, 0)]).unwrap();
        assert_eq!(l, vec![rat(1)]);
        assert!(is_g_torsionfree_truncated(&g, &[pt(0, 1), pt(1, 0)]).unwrap());
        assert!(!is_g_torsionfree_truncated(&g, &[pt(1, 1), pt(2, 1)]).unwrap());
        assert_eq!(
            g_action_scalars(&g, &[pt(1, 1)]),
            Err(Error::TooShort { len: 1, needed: 2 })
        );
    }

    #[test]
    fn zero_points_are_rejected() {
        assert!(is_truncated_point_module(&qplane(), &[pt(0, 0)]).is_err());
    }
}
