//! Normal elements, the automorphism `ν_g` with `ν_g(a)g = ga`, and
//! Heisenberg-type normal elements `g = xy - u·yx` with `xg = u·gx`,
//! `gy = u·yg`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, QuotientCache};
use crate::scalar::{AffineSolution, Matrix, Scalar};

fn degree_of<S: Scalar>(f: &NCPoly<S>) -> Result<usize> {
    f.homogeneous_degree().ok_or(Error::NotHomogeneous)
}

/// Matrix whose columns are the retained-basis coordinates of `polys`
/// in degree `d`.
fn coord_matrix<S: Scalar>(c: &QuotientCache<S>, polys: &[NCPoly<S>], d: usize) -> Result<Matrix<S>> {
    let cols = polys
        .iter()
        .map(|p| c.coords(p, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(c.dim(d)?, &cols))
}

/// Whether `g·A_1` and `A_1·g` span the same subspace of `A_{n+1}`.
///
/// For algebras generated in degree one this is the degreewise form of
/// `gA = Ag`; the check is made in degree `n + 1` only.
pub fn is_normal<S: Scalar>(c: &QuotientCache<S>, g: &NCPoly<S>) -> Result<bool> {
    let n = degree_of(g)?;
    c.check_degree(n + 1)?;
    let m = c.generator_count();
    let left: Vec<NCPoly<S>> = (0..m).map(|j| g * &NCPoly::generator(j)).collect();
    let right: Vec<NCPoly<S>> = (0..m).map(|j| &NCPoly::generator(j) * g).collect();
    let l = coord_matrix(c, &left, n + 1)?;
    let r = coord_matrix(c, &right, n + 1)?;
    let both = coord_matrix(c, &[left, right].concat(), n + 1)?;
    let rank = both.rank();
    Ok(l.rank() == rank && r.rank() == rank)
}

/// The automorphism `ν_g` restricted to `A_1`; column `a` holds the
/// coordinates of `ν_g(x_a)` in the generator basis.
#[derive(Clone, Debug, PartialEq)]
pub struct NuAutomorphism<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> NuAutomorphism<S> {
    /// Wraps an invertible generator matrix.
    pub fn from_matrix(matrix: Matrix<S>) -> Result<Self> {
        if matrix.rows() != matrix.cols() || matrix.inverse().is_none() {
            return Err(Error::Precondition("automorphism matrix must be invertible".into()));
        }
        Ok(Self { matrix })
    }

    /// `x_a ↦ s_a·x_a`.
    pub fn diagonal(scales: &[S]) -> Result<Self> {
        let n = scales.len();
        let mut m = Matrix::zeros(n, n);
        for (i, s) in scales.iter().enumerate() {
            m[(i, i)] = s.clone();
        }
        Self::from_matrix(m)
    }

    pub fn identity(m: usize) -> Self {
        Self {
            matrix: Matrix::identity(m),
        }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn generator_image(&self, a: usize) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for k in 0..self.matrix.rows() {
            out.add_term(crate::ncalg::Word::letter(k), self.matrix[(k, a)].clone());
        }
        out
    }

    /// Multiplicative extension to the free algebra.
    pub fn apply(&self, f: &NCPoly<S>) -> NCPoly<S> {
        let images: Vec<NCPoly<S>> = (0..self.matrix.cols()).map(|a| self.generator_image(a)).collect();
        f.substitute(&images)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: self.matrix.inverse().expect("automorphism is invertible"),
        }
    }

    /// `ν^k` for any integer `k`.
    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.matrix.rows());
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// Whether every relation maps into the ideal, i.e. `ν` descends to a
    /// graded automorphism of the quotient.
    pub fn preserves_relations(&self, c: &QuotientCache<S>) -> Result<bool> {
        for r in c.presentation().relations() {
            if !c.is_zero_mod(&self.apply(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Solves `ν_g(a)·g ≡ g·a` for every generator `a`.
pub fn nu_automorphism<S: Scalar>(c: &QuotientCache<S>, g: &NCPoly<S>) -> Result<NuAutomorphism<S>> {
    let n = degree_of(g)?;
    if !is_normal(c, g)? {
        return Err(Error::NotNormal { degree: n + 1 });
    }
    let m = c.generator_count();
    let lhs: Vec<NCPoly<S>> = (0..m).map(|k| &NCPoly::generator(k) * g).collect();
    let a = coord_matrix(c, &lhs, n + 1)?;
    let mut matrix = Matrix::zeros(m, m);
    for j in 0..m {
        let b = c.coords(&(g * &NCPoly::generator(j)), n + 1)?;
        match a.solve_affine(&b) {
            AffineSolution::Inconsistent => return Err(Error::NotNormal { degree: n + 1 }),
            AffineSolution::Solved { particular, kernel } => {
                if !kernel.is_empty() {
                    return Err(Error::NonUnique { degree: n + 1 });
                }
                for (k, v) in particular.into_iter().enumerate() {
                    matrix[(k, j)] = v;
                }
            }
        }
    }
    NuAutomorphism::from_matrix(matrix)
}

/// Candidate display of a Heisenberg-type normal element.
#[derive(Clone, Debug, PartialEq)]
pub struct HeisenbergWitness<S> {
    pub g: NCPoly<S>,
    pub x: NCPoly<S>,
    pub y: NCPoly<S>,
    pub u: S,
}

impl<S: Scalar> HeisenbergWitness<S> {
    pub fn new(g: NCPoly<S>, x: NCPoly<S>, y: NCPoly<S>, u: S) -> Result<Self> {
        let n = degree_of(&g)?;
        if n == 0 {
            return Err(Error::Precondition("g must have positive degree".into()));
        }
        if degree_of(&x)? != 1 {
            return Err(Error::Precondition("x must be homogeneous of degree 1".into()));
        }
        let dy = degree_of(&y)?;
        if dy != n - 1 {
            return Err(Error::DegreeMismatch {
                expected: n - 1,
                found: dy,
            });
        }
        if u.is_zero() {
            return Err(Error::Precondition("u must be nonzero".into()));
        }
        Ok(Self { g, x, y, u })
    }

    /// `deg g`.
    pub fn n(&self) -> usize {
        self.g.homogeneous_degree().expect("validated")
    }
}

/// Outcome of each defining clause of a Heisenberg-type normal element.
#[derive(Clone, Debug, PartialEq)]
pub struct HeisenbergReport {
    pub clauses: Vec<(String, bool)>,
    /// Degree up to which both multiplications by `g` were found injective.
    pub regular_up_to: usize,
}

impl HeisenbergReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|(_, ok)| *ok)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.clauses
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

/// Whether multiplication by `g` on the given side is injective
/// `A_d → A_{d+n}` for every `d ≤ cap - n`.
pub fn is_regular_up_to_cap<S: Scalar>(c: &QuotientCache<S>, g: &NCPoly<S>, left: bool) -> Result<bool> {
    let n = degree_of(g)?;
    for d in 0..=c.cap().saturating_sub(n) {
        let images = c
            .basis(d)?
            .into_iter()
            .map(|w| {
                let w = NCPoly::monomial(w, S::one());
                if left {
                    g * &w
                } else {
                    &w * g
                }
            })
            .collect::<Vec<_>>();
        if coord_matrix(c, &images, d + n)?.rank() != images.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `g = xy - u·yx`, `xg = u·gx`, `gy = u·yg`, normality of `g`, and
/// injectivity of both multiplications by `g` up to the cap.
pub fn is_q_heisenberg<S: Scalar>(c: &QuotientCache<S>, w: &HeisenbergWitness<S>) -> Result<HeisenbergReport> {
    let n = w.n();
    c.check_degree(n + 1)?;
    let (g, x, y, u) = (&w.g, &w.x, &w.y, &w.u);
    let display = &(x * y) - &(y * x).scale(u);
    let c1 = c.equal_mod_ideal(g, &display)?;
    let c2 = c.equal_mod_ideal(&(x * g), &(g * x).scale(u))?;
    let c3 = c.equal_mod_ideal(&(g * y), &(y * g).scale(u))?;
    let normal = is_normal(c, g)?;
    let left = is_regular_up_to_cap(c, g, true)?;
    let right = is_regular_up_to_cap(c, g, false)?;
    Ok(HeisenbergReport {
        clauses: vec![
            ("g = xy - u*yx".into(), c1),
            ("x*g = u*g*x".into(), c2),
            ("g*y = u*y*g".into(), c3),
            (format!("g normal (checked in degree {})", n + 1), normal),
            (format!("left multiplication by g injective up to degree {}", c.cap()), left),
            (format!("right multiplication by g injective up to degree {}", c.cap()), right),
        ],
        regular_up_to: c.cap(),
    })
}

/// Per exponent `r`: whether `x^r y = r u^{r-1} x y x^{r-1} - (r-1) u^r y x^r`
/// and `y x^r = r u^{-(r-1)} x^{r-1} y x - (r-1) u^{-r} x^r y` hold.
pub fn check_power_identities<S: Scalar>(
    c: &QuotientCache<S>,
    w: &HeisenbergWitness<S>,
    r_max: usize,
) -> Result<Vec<(usize, bool, bool)>> {
    let (x, y, u) = (&w.x, &w.y, &w.u);
    c.check_degree(r_max + w.n() - 1)?;
    let mut out = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        let ri = S::from_i64(r as i64);
        let r1 = S::from_i64(r as i64 - 1);
        let xr = x.pow(r);
        let xr1 = x.pow(r - 1);
        let first_rhs = &(&(x * y) * &xr1).scale(&(ri.clone() * u.powi(r as i64 - 1)))
            - &(y * &xr).scale(&(r1.clone() * u.powi(r as i64)));
        let first = c.equal_mod_ideal(&(&xr * y), &first_rhs)?;
        let second_rhs = &(&(&xr1 * y) * x).scale(&(ri * u.powi(1 - r as i64)))
            - &(&xr * y).scale(&(r1 * u.powi(-(r as i64))));
        let second = c.equal_mod_ideal(&(y * &xr), &second_rhs)?;
        out.push((r, first, second));
    }
    Ok(out)
}

/// Candidate values of `u`: `±1`, the diagonal of the twisting
/// automorphism of `g` (when it exists), the nonzero relation coefficients,
/// their negatives and inverses.
fn u_candidates<S: Scalar>(c: &QuotientCache<S>, g: &NCPoly<S>) -> Vec<S> {
    let mut out: Vec<S> = Vec::new();
    let mut push = |v: S| {
        if !v.is_zero() && !out.contains(&v) {
            out.push(v);
        }
    };
    push(S::one());
    push(-S::one());
    if let Ok(nu) = nu_automorphism(c, g) {
        let m = nu.matrix();
        for i in 0..m.rows() {
            let a = m[(i, i)].clone();
            if let Some(inv) = a.inv() {
                push(inv);
            }
            push(a);
        }
    }
    for r in c.presentation().relations() {
        for (_, a) in r.terms() {
            push(a.clone());
            push(-a.clone());
            if let Some(i) = a.inv() {
                push(i.clone());
                push(-i);
            }
        }
    }
    out
}

/// Searches for `x, y, u` displaying `g` as a Heisenberg-type normal
/// element: `u` ranges over [`u_candidates`], `x` over the generators and
/// a few fixed pseudo-random degree-one combinations, and `y` solves the
/// linear system `g ≡ xy - u·yx`. Returns the first witness that passes
/// [`is_q_heisenberg`].
pub fn find_witness<S: Scalar>(c: &QuotientCache<S>, g: &NCPoly<S>) -> Result<Option<HeisenbergWitness<S>>> {
    let n = degree_of(g)?;
    if n < 1 {
        return Ok(None);
    }
    c.check_degree(n + 1)?;
    let m = c.generator_count();
    let mut xs: Vec<NCPoly<S>> = (0..m).map(NCPoly::generator).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..4 {
        let mut x = NCPoly::zero();
        for k in 0..m {
            x.add_term(crate::ncalg::Word::letter(k), S::from_i64(rng.gen_range(-3..=3)));
        }
        if !x.is_zero() {
            xs.push(x);
        }
    }
    let target = c.coords(g, n)?;
    let ybasis: Vec<NCPoly<S>> = c
        .basis(n - 1)?
        .into_iter()
        .map(|w| NCPoly::monomial(w, S::one()))
        .collect();
    for u in u_candidates(c, g) {
        for x in &xs {
            let images: Vec<NCPoly<S>> = ybasis
                .iter()
                .map(|b| &(x * b) - &(b * x).scale(&u))
                .collect();
            let a = coord_matrix(c, &images, n)?;
            let AffineSolution::Solved { particular, kernel } = a.solve_affine(&target) else {
                continue;
            };
            let mut candidates = vec![particular.clone()];
            for k in &kernel {
                candidates.push(particular.iter().zip(k).map(|(p, q)| p.clone() + q).collect());
            }
            for coeffs in candidates {
                let y = c.from_coords(n - 1, &coeffs)?;
                let w = HeisenbergWitness {
                    g: g.clone(),
                    x: x.clone(),
                    y,
                    u: u.clone(),
                };
                if is_q_heisenberg(c, &w)?.passed() {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}
