//! Color Lie algebras graded by `ℤ^{m+1}`, with `L₋ = 0`.

mod koszul;
mod pbw;
mod present;

pub use koszul::{koszul_complex, koszul_verify, KoszulComplex, KoszulReport};
pub use pbw::{pbw_dimension, pbw_monomials, pbw_normal_form, Pbw, RewriteOrder, UElement};
pub use present::{epsilon_symmetric, heisenberg_from_color, u_presentation, ColorHeisenberg};

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Matrix, Scalar};

/// Degree in `ℤ^{m+1}`.
pub type Degree = Vec<i64>;

/// Skew-symmetric bicharacter `ε(α, β) = Π ω_ij^{α_i β_j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bicharacter<S> {
    omega: Matrix<S>,
}

impl<S: Scalar> Bicharacter<S> {
    /// Requires a square `ω` with `ω_ij·ω_ji = 1`.
    pub fn new(omega: Matrix<S>) -> Result<Self> {
        let n = omega.rows();
        if n == 0 || omega.cols() != n {
            return Err(Error::MalformedBicharacter("omega must be a nonempty square matrix".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if omega[(i, j)].clone() * &omega[(j, i)] != S::one() {
                    return Err(Error::MalformedBicharacter(format!(
                        "omega[{i}][{j}] * omega[{j}][{i}] = {} (expected 1)",
                        omega[(i, j)].clone() * &omega[(j, i)]
                    )));
                }
            }
        }
        Ok(Self { omega })
    }

    /// `ε ≡ 1`.
    pub fn trivial(rank: usize) -> Self {
        Self {
            omega: Matrix::from_rows(
                rank,
                (0..rank).map(|_| vec![S::one(); rank]).collect(),
            ),
        }
    }

    pub fn rank(&self) -> usize {
        self.omega.rows()
    }

    pub fn omega(&self) -> &Matrix<S> {
        &self.omega
    }

    pub fn eval(&self, a: &[i64], b: &[i64]) -> S {
        let mut acc = S::one();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc *= &self.omega[(i, j)].powi(ai * bj);
                }
            }
        }
        acc
    }
}

/// Finite-dimensional color Lie algebra on a homogeneous basis.
#[derive(Clone, Debug)]
pub struct ColorLieAlgebra<S> {
    names: Vec<String>,
    degrees: Vec<Degree>,
    eps: Bicharacter<S>,
    /// `brackets[i][j]` = coordinates of `[b_i, b_j]`.
    brackets: Vec<Vec<Vec<S>>>,
    /// Basis index of `θ_i`, the element of degree `e_i`.
    thetas: Vec<usize>,
}

impl<S: Scalar> ColorLieAlgebra<S> {
    /// Brackets are given as `(i, j, [b_i, b_j])`; a pair given in one order
    /// only is completed by antisymmetry, unlisted pairs are zero.
    pub fn new(
        names: Vec<String>,
        degrees: Vec<Degree>,
        eps: Bicharacter<S>,
        given: Vec<(usize, usize, Vec<S>)>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 || degrees.len() != n {
            return Err(Error::Precondition("basis names and degrees must match and be nonempty".into()));
        }
        let rank = eps.rank();
        if let Some(d) = degrees.iter().find(|d| d.len() != rank) {
            return Err(Error::Precondition(format!("degree {d:?} does not have {rank} components")));
        }
        let mut brackets = vec![vec![vec![S::zero(); n]; n]; n];
        let mut set = vec![vec![false; n]; n];
        for (i, j, v) in &given {
            if *i >= n || *j >= n || v.len() != n {
                return Err(Error::Precondition(format!("bracket entry ({i}, {j}) out of range")));
            }
            brackets[*i][*j] = v.clone();
            set[*i][*j] = true;
        }
        for (i, j, v) in &given {
            if !set[*j][*i] {
                let c = -eps.eval(&degrees[*j], &degrees[*i]);
                brackets[*j][*i] = v.iter().map(|x| c.clone() * x).collect();
                set[*j][*i] = true;
            }
        }
        let thetas = (0..rank)
            .map(|k| {
                let e: Degree = (0..rank).map(|l| (l == k) as i64).collect();
                degrees.iter().position(|d| *d == e).ok_or_else(|| {
                    Error::NotGeneratedInDegreeOne(format!("no basis element of degree e_{k}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            names,
            degrees,
            eps,
            brackets,
            thetas,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.degrees[i]
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn total_degree(&self, i: usize) -> i64 {
        self.degrees[i].iter().sum()
    }

    pub fn bicharacter(&self) -> &Bicharacter<S> {
        &self.eps
    }

    pub fn eps(&self, a: &[i64], b: &[i64]) -> S {
        self.eps.eval(a, b)
    }

    pub fn thetas(&self) -> &[usize] {
        &self.thetas
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        &self.brackets[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        (0..self.dim()).map(|k| if k == i { S::one() } else { S::zero() }).collect()
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, a: &[S], b: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.clone() * bj;
                for (o, v) in out.iter_mut().zip(&self.brackets[i][j]) {
                    if !v.is_zero() {
                        *o += &(c.clone() * v);
                    }
                }
            }
        }
        out
    }

    pub fn format_vector(&self, v: &[S]) -> String {
        let mut parts = Vec::new();
        for (c, name) in v.iter().zip(&self.names) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("{c}*{name}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Iterated bracket spans `L₁¹ = span θ`, `L₁^{j+1} = [L₁^j, L₁]`, each
    /// as a list of homogeneous spanning vectors, up to the first zero one
    /// (not included).
    pub fn lower_central_spans(&self) -> Vec<Vec<Vec<S>>> {
        let mut out: Vec<Vec<Vec<S>>> = vec![self.thetas.iter().map(|&t| self.basis_vector(t)).collect()];
        for _ in 0..=self.dim() {
            let last = out.last().expect("nonempty");
            let mut next: Vec<Vec<S>> = Vec::new();
            for a in last {
                for &t in &self.thetas {
                    let b = self.bracket(a, &self.basis_vector(t));
                    if b.iter().any(|c| !c.is_zero()) {
                        next.push(b);
                    }
                }
            }
            let next = independent_subset(next);
            if next.is_empty() {
                break;
            }
            out.push(next);
        }
        out
    }
}

/// A maximal linearly independent subset, in order.
pub(crate) fn independent_subset<S: Scalar>(vs: Vec<Vec<S>>) -> Vec<Vec<S>> {
    let mut kept: Vec<Vec<S>> = Vec::new();
    for v in vs {
        let mut trial = kept.clone();
        trial.push(v.clone());
        let cols = v.len();
        if Matrix::from_rows(cols, trial).rank() > kept.len() {
            kept.push(v);
        }
    }
    kept
}

/// `n_L = max { j | L₁^j ≠ 0 }`.
pub fn n_l<S: Scalar>(l: &ColorLieAlgebra<S>) -> usize {
    l.lower_central_spans().len()
}

/// Whether the `θ`s generate `L`.
pub fn generated_in_degree_one<S: Scalar>(l: &ColorLieAlgebra<S>) -> bool {
    let all: Vec<Vec<S>> = l.lower_central_spans().into_iter().flatten().collect();
    Matrix::from_rows(l.dim(), all).rank() == l.dim()
}

/// A failed color Lie axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `[b_i, b_j]` has a component outside degree `|b_i| + |b_j|`.
    Grading { i: usize, j: usize },
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    /// `ε(γ, γ) ≠ 1` on an occupied degree.
    OddDegree { i: usize },
}

impl Violation {
    pub fn describe(&self, names: &[String]) -> String {
        match self {
            Violation::Grading { i, j } => format!("grading fails for [{}, {}]", names[*i], names[*j]),
            Violation::Antisymmetry { i, j } => format!("antisymmetry fails for ({}, {})", names[*i], names[*j]),
            Violation::Jacobi { i, j, k } => {
                format!("Jacobi identity fails for ({}, {}, {})", names[*i], names[*j], names[*k])
            }
            Violation::OddDegree { i } => format!("eps(g, g) != 1 at the degree of {}", names[*i]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation(s)", self.violations.len())
    }
}

fn add_degrees(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Checks grading, ε-antisymmetry, ε-Jacobi and `L₋ = 0` on basis elements.
pub fn check_color_axioms<S: Scalar>(l: &ColorLieAlgebra<S>) -> AxiomReport {
    let n = l.dim();
    let mut violations = Vec::new();
    for i in 0..n {
        if !l.eps(l.degree(i), l.degree(i)).is_one() {
            violations.push(Violation::OddDegree { i });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let target = add_degrees(l.degree(i), l.degree(j));
            if l.bracket_basis(i, j)
                .iter()
                .enumerate()
                .any(|(k, c)| !c.is_zero() && *l.degree(k) != target)
            {
                violations.push(Violation::Grading { i, j });
            }
            if j >= i {
                let e = l.eps(l.degree(i), l.degree(j));
                let ok = l
                    .bracket_basis(i, j)
                    .iter()
                    .zip(l.bracket_basis(j, i))
                    .all(|(a, b)| *a == -(e.clone() * b));
                if !ok {
                    violations.push(Violation::Antisymmetry { i, j });
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (l.basis_vector(i), l.basis_vector(j), l.basis_vector(k));
                let (da, db, dc) = (l.degree(i), l.degree(j), l.degree(k));
                let t1 = l.bracket(&a, &l.bracket(&b, &c));
                let t2 = l.bracket(&b, &l.bracket(&c, &a));
                let t3 = l.bracket(&c, &l.bracket(&a, &b));
                let (e1, e2, e3) = (l.eps(dc, da), l.eps(da, db), l.eps(db, dc));
                let zero = (0..n).all(|s| {
                    (e1.clone() * &t1[s] + e2.clone() * &t2[s] + e3.clone() * &t3[s]).is_zero()
                });
                if !zero {
                    violations.push(Violation::Jacobi { i, j, k });
                }
            }
        }
    }
    AxiomReport { violations }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::scalar::{rat, ratio, Rational};
    use proptest::prelude::*;

    pub(crate) fn omega2(w: Rational) -> Bicharacter<Rational> {
        let inv = rat(1) / w.clone();
        Bicharacter::new(Matrix::from_rows(2, vec![vec![rat(1), w], vec![inv, rat(1)]])).unwrap()
    }

    /// `x:(1,0), y:(0,1), z:(1,1)`, `[x,y] = z`.
    pub(crate) fn heisenberg(w: Rational) -> ColorLieAlgebra<Rational> {
        ColorLieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            omega2(w),
            vec![(0, 1, vec![rat(0), rat(0), rat(1)])],
        )
        .unwrap()
    }

    pub(crate) fn abelian(w: Rational) -> ColorLieAlgebra<Rational> {
        ColorLieAlgebra::new(
            vec!["x".into(), "y".into()],
            vec![vec![1, 0], vec![0, 1]],
            omega2(w),
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn bicharacter_rejects_non_skew() {
        let m = Matrix::from_rows(2, vec![vec![rat(1), rat(2)], vec![rat(2), rat(1)]]);
        assert!(matches!(Bicharacter::new(m), Err(Error::MalformedBicharacter(_))));
    }

    #[test]
    fn antisymmetry_completion() {
        let l = heisenberg(rat(2));
        assert_eq!(l.bracket_basis(1, 0), &[rat(0), rat(0), ratio(-1, 2)]);
        assert!(check_color_axioms(&l).ok());
    }

    #[test]
    fn axiom_examples() {
        assert!(check_color_axioms(&abelian(rat(3))).ok());
        let bad = ColorLieAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            omega2(rat(2)),
            vec![(0, 1, vec![rat(0), rat(0), rat(1)]), (1, 0, vec![rat(0), rat(0), rat(2)])],
        )
        .unwrap();
        let rep = check_color_axioms(&bad);
        assert!(rep.violations.contains(&Violation::Antisymmetry { i: 0, j: 1 }));
    }

    #[test]
    fn grading_violation_is_reported() {
        let bad = ColorLieAlgebra::new(
            vec!["x".into(), "y".into()],
            vec![vec![1, 0], vec![0, 1]],
            omega2(rat(1)),
            vec![(0, 1, vec![rat(1), rat(0)])],
        )
        .unwrap();
        assert!(check_color_axioms(&bad).violations.contains(&Violation::Grading { i: 0, j: 1 }));
    }

    #[test]
    fn lower_central_series() {
        assert_eq!(n_l(&abelian(rat(1))), 1);
        assert_eq!(n_l(&heisenberg(rat(2))), 2);
        assert!(generated_in_degree_one(&heisenberg(rat(2))));
    }

    #[test]
    fn epsilon_of_mixed_degrees() {
        let e = omega2(rat(2));
        assert_eq!(e.eval(&[1, 1], &[1, 0]), ratio(1, 2));
        assert_eq!(e.eval(&[1, 0], &[1, 1]), rat(2));
        assert_eq!(e.eval(&[1, 1], &[1, 1]), rat(1));
    }

    fn small_vec() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, 3)
    }

    fn omega3() -> Bicharacter<Rational> {
        Bicharacter::new(Matrix::from_rows(
            3,
            vec![
                vec![rat(1), rat(2), ratio(1, 3)],
                vec![ratio(1, 2), rat(-1), rat(5)],
                vec![rat(3), ratio(1, 5), rat(1)],
            ],
        ))
        .unwrap()
    }

    proptest! {
        #[test]
        fn bicharacter_is_additive(a in small_vec(), b in small_vec(), c in small_vec()) {
            let e = omega3();
            let ab: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let bc: Vec<i64> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
            prop_assert_eq!(e.eval(&ab, &c), e.eval(&a, &c) * e.eval(&b, &c));
            prop_assert_eq!(e.eval(&a, &bc), e.eval(&a, &b) * e.eval(&a, &c));
            prop_assert_eq!(e.eval(&a, &b) * e.eval(&b, &a), rat(1));
        }
    }
}
