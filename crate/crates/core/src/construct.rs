//! Quasi-Veronese algebras `A^[r]`, Zhang twists by powers of a graded
//! automorphism, and the homogeneous identity behind the Weyl algebra
//! homomorphism into a dehomogenization.

use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, QuotientCache, Word};
use crate::normelem::{is_normal, is_q_heisenberg, nu_automorphism, HeisenbergReport, HeisenbergWitness, NuAutomorphism};
use crate::scalar::Scalar;

/// Homogeneous element of degree `p` of the `r`-th quasi-Veronese algebra:
/// an `r × r` array whose entry `(i, j)` lies in `A_{rp + j - i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QVElement<S> {
    r: usize,
    p: usize,
    entries: Vec<NCPoly<S>>,
}

impl<S: Scalar> QVElement<S> {
    /// Validates entry degrees; `entries` is row-major.
    pub fn new(r: usize, p: usize, entries: Vec<NCPoly<S>>) -> Result<Self> {
        if r == 0 || entries.len() != r * r {
            return Err(Error::Precondition(format!("expected {} entries for size {r}", r * r)));
        }
        let out = Self { r, p, entries };
        for i in 0..r {
            for j in 0..r {
                let e = out.entry(i, j);
                if e.is_zero() {
                    continue;
                }
                let want = out.entry_degree(i, j);
                match (e.homogeneous_degree(), want) {
                    (Some(d), Some(w)) if d == w => {}
                    (found, want) => {
                        return Err(Error::DegreeMismatch {
                            expected: want.unwrap_or(0),
                            found: found.unwrap_or(usize::MAX),
                        })
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn zero(r: usize, p: usize) -> Self {
        Self {
            r,
            p,
            entries: vec![NCPoly::zero(); r * r],
        }
    }

    /// The unit: scalars one on the diagonal, degree zero.
    pub fn identity(r: usize) -> Self {
        let mut out = Self::zero(r, 0);
        for i in 0..r {
            out.entries[i * r + i] = NCPoly::one();
        }
        out
    }

    /// Element with a single nonzero entry.
    pub fn single(r: usize, p: usize, i: usize, j: usize, f: NCPoly<S>) -> Result<Self> {
        let mut entries = vec![NCPoly::zero(); r * r];
        entries[i * r + j] = f;
        Self::new(r, p, entries)
    }

    pub fn size(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn entry(&self, i: usize, j: usize) -> &NCPoly<S> {
        &self.entries[i * self.r + j]
    }

    /// `rp + j - i`, or `None` where that is negative (entry forced zero).
    pub fn entry_degree(&self, i: usize, j: usize) -> Option<usize> {
        (self.r * self.p + j).checked_sub(i)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    /// Applies `f` to every entry; `f` must preserve degrees.
    pub fn map_entries(&self, f: impl Fn(&NCPoly<S>) -> NCPoly<S>) -> Self {
        Self {
            r: self.r,
            p: self.p,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_entries(|e| e.scale(c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(Self {
            r: self.r,
            p: self.p,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            return Err(Error::Precondition(format!(
                "quasi-Veronese sizes differ: {} and {}",
                self.r, other.r
            )));
        }
        if self.p != other.p {
            return Err(Error::DegreeMismatch {
                expected: self.p,
                found: other.p,
            });
        }
        Ok(())
    }

    /// Entrywise normal form.
    pub fn normalize(&self, c: &QuotientCache<S>) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| if e.is_zero() { Ok(NCPoly::zero()) } else { c.normal_form(e) })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            r: self.r,
            p: self.p,
            entries,
        })
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let rows: Vec<String> = (0..self.r)
            .map(|i| {
                let cells: Vec<String> = (0..self.r)
                    .map(|j| {
                        let e = self.entry(i, j);
                        if e.is_zero() {
                            "0".to_string()
                        } else {
                            e.to_string_with(names)
                        }
                    })
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        rows.join(" ")
    }
}

/// `(a·b)_{i,j} = Σ_l a_{l,j} b_{i,l}` reduced modulo the ideal.
pub fn qv_mul<S: Scalar>(a: &QVElement<S>, b: &QVElement<S>, c: &QuotientCache<S>) -> Result<QVElement<S>> {
    if a.r != b.r {
        return Err(Error::Precondition(format!(
            "quasi-Veronese sizes differ: {} and {}",
            a.r, b.r
        )));
    }
    let r = a.r;
    let mut entries = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let mut acc = NCPoly::zero();
            for l in 0..r {
                let (x, y) = (a.entry(l, j), b.entry(i, l));
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            entries.push(if acc.is_zero() { acc } else { c.normal_form(&acc)? });
        }
    }
    Ok(QVElement {
        r,
        p: a.p + b.p,
        entries,
    })
}

/// Whether two elements agree entrywise modulo the ideal.
pub fn qv_equal<S: Scalar>(a: &QVElement<S>, b: &QVElement<S>, c: &QuotientCache<S>) -> Result<bool> {
    Ok(a.sub(b)?.normalize(c)?.is_zero())
}

/// `diag(g, …, g)` in degree one of `A^[n]`, `n = deg g`.
pub fn bold_g<S: Scalar>(g: &NCPoly<S>, n: usize) -> Result<QVElement<S>> {
    let d = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if d != n || n == 0 {
        return Err(Error::DegreeMismatch { expected: n, found: d });
    }
    let mut out = QVElement::zero(n, 1);
    for i in 0..n {
        out.entries[i * n + i] = g.clone();
    }
    Ok(out)
}

/// Outcome of [`verify_bold_normal`].
#[derive(Clone, Debug, PartialEq)]
pub struct BoldNormalReport {
    /// Quasi-Veronese degrees whose full spanning sets were checked.
    pub degrees: Vec<usize>,
    pub elements_checked: usize,
    /// `(degree, i, j, word)` of each spanning element where
    /// `g·a ≠ ν(a)·g`.
    pub failures: Vec<(usize, usize, usize, Word)>,
}

impl BoldNormalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.elements_checked > 0
    }
}

/// Checks `g·a = ν^[n](a)·g` in `A^[n]` on the single-entry spanning set of
/// every quasi-Veronese degree whose products stay within the cap.
pub fn verify_bold_normal<S: Scalar>(c: &QuotientCache<S>, g: &NCPoly<S>) -> Result<BoldNormalReport> {
    let n = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !is_normal(c, g)? {
        return Err(Error::NotNormal { degree: n + 1 });
    }
    let nu = nu_automorphism(c, g)?;
    let bg = bold_g(g, n)?;
    let mut report = BoldNormalReport {
        degrees: Vec::new(),
        elements_checked: 0,
        failures: Vec::new(),
    };
    let mut q = 0;
    // Largest product entry degree is n(q+1) + n - 1.
    while n * (q + 2) - 1 <= c.cap() {
        for i in 0..n {
            for j in 0..n {
                let Some(d) = (n * q + j).checked_sub(i) else {
                    continue;
                };
                for w in c.basis(d)? {
                    let a = QVElement::single(n, q, i, j, NCPoly::monomial(w.clone(), S::one()))?;
                    let left = qv_mul(&bg, &a, c)?;
                    let right = qv_mul(&a.map_entries(|e| nu.apply(e)), &bg, c)?;
                    report.elements_checked += 1;
                    if !qv_equal(&left, &right, c)? {
                        report.failures.push((q, i, j, w));
                    }
                }
            }
        }
        report.degrees.push(q);
        q += 1;
    }
    Ok(report)
}

/// The twisting system `{ν^i : i ∈ ℤ}` generated by a graded automorphism
/// determined on `A_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistSystem<S> {
    nu: NuAutomorphism<S>,
}

impl<S: Scalar> TwistSystem<S> {
    /// Accepts `ν` only if it maps every relation into the ideal.
    pub fn new(c: &QuotientCache<S>, nu: NuAutomorphism<S>) -> Result<Self> {
        if !nu.preserves_relations(c)? {
            return Err(Error::Precondition(
                "automorphism does not preserve the relations".into(),
            ));
        }
        Ok(Self { nu })
    }

    pub fn automorphism(&self) -> &NuAutomorphism<S> {
        &self.nu
    }

    /// `ν_j = ν^j` applied to a free algebra element.
    pub fn apply(&self, j: i64, f: &NCPoly<S>) -> NCPoly<S> {
        self.nu.power(j).apply(f)
    }

    /// Whether `ν_l(ν_j(a)·b) ≡ ν_{j+l}(a)·ν_l(b)` with `j = deg b`.
    pub fn law_holds(&self, c: &QuotientCache<S>, a: &NCPoly<S>, b: &NCPoly<S>, l: i64) -> Result<bool> {
        let j = b.homogeneous_degree().ok_or(Error::NotHomogeneous)? as i64;
        let left = self.apply(l, &(&self.apply(j, a) * b));
        let right = &self.apply(j + l, a) * &self.apply(l, b);
        c.is_zero_mod(&(&left - &right))
    }

    /// Checks the twisting law on all pairs of basis words with total
    /// degree within the cap, for each `l` in `ls`.
    pub fn law_holds_on_basis(&self, c: &QuotientCache<S>, ls: &[i64]) -> Result<bool> {
        for da in 0..=c.cap() {
            for db in 0..=c.cap() - da {
                for a in c.basis(da)? {
                    let a = NCPoly::monomial(a, S::one());
                    for b in c.basis(db)? {
                        let b = NCPoly::monomial(b, S::one());
                        for &l in ls {
                            if !self.law_holds(c, &a, &b, l)? {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `a ∘ b = ν^j(a)·b` with `j = deg b`, reduced.
pub fn twist_mul<S: Scalar>(ts: &TwistSystem<S>, a: &NCPoly<S>, b: &NCPoly<S>, c: &QuotientCache<S>) -> Result<NCPoly<S>> {
    if b.is_zero() || a.is_zero() {
        return Ok(NCPoly::zero());
    }
    let j = b.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    c.normal_form(&(&ts.apply(j as i64, a) * b))
}

/// `a ∘ b = (ν^[r])^q(a)·b` in `A^[r]` with `q = deg b`.
pub fn twist_mul_qv<S: Scalar>(
    ts: &TwistSystem<S>,
    a: &QVElement<S>,
    b: &QVElement<S>,
    c: &QuotientCache<S>,
) -> Result<QVElement<S>> {
    let nu = ts.nu.power(b.p as i64);
    qv_mul(&a.map_entries(|e| nu.apply(e)), b, c)
}

/// One entry comparison of the Weyl identity.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryCheck<S> {
    pub i: usize,
    pub j: usize,
    pub lhs: NCPoly<S>,
    pub rhs: NCPoly<S>,
    pub equal: bool,
}

/// Certificate for `φ(X)∘φ(Y) - φ(Y)∘φ(X) = g∘g` in the twisted
/// quasi-Veronese algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylCertificate<S> {
    pub n: usize,
    pub phi_x: QVElement<S>,
    pub phi_y: QVElement<S>,
    pub heisenberg: HeisenbergReport,
    pub entries: Vec<EntryCheck<S>>,
}

impl<S: Scalar> WeylCertificate<S> {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.equal)
    }

    pub fn first_failure(&self) -> Option<&EntryCheck<S>> {
        self.entries.iter().find(|e| !e.equal)
    }
}

/// `φ(X)`: `xg` on the superdiagonal and `x` in the bottom-left corner.
pub fn phi_x<S: Scalar>(w: &HeisenbergWitness<S>) -> Result<QVElement<S>> {
    let n = w.n();
    let mut m = QVElement::zero(n, 1);
    let xg = &w.x * &w.g;
    for i in 0..n.saturating_sub(1) {
        m.entries[i * n + i + 1] = xg.clone();
    }
    m.entries[(n - 1) * n] = w.x.clone();
    QVElement::new(n, 1, m.entries)
}

/// `φ(Y)`: `gy` in the top-right corner and `y` on the subdiagonal.
pub fn phi_y<S: Scalar>(w: &HeisenbergWitness<S>) -> Result<QVElement<S>> {
    let n = w.n();
    let mut m = QVElement::zero(n, 1);
    m.entries[n - 1] = &w.g * &w.y;
    for i in 0..n.saturating_sub(1) {
        m.entries[(i + 1) * n + i] = w.y.clone();
    }
    QVElement::new(n, 1, m.entries)
}

/// Builds `φ(X)`, `φ(Y)` and compares `φ(X)∘φ(Y) - φ(Y)∘φ(X)` with
/// `g∘g` entrywise, the twist being by `ν_g` applied entrywise. Since
/// `1 ≡ g` in the dehomogenization this certifies `φ(XY - YX - 1) = 0`.
pub fn weyl_witness<S: Scalar>(c: &QuotientCache<S>, w: &HeisenbergWitness<S>) -> Result<WeylCertificate<S>> {
    let n = w.n();
    c.check_degree(2 * n)?;
    let heisenberg = is_q_heisenberg(c, w)?;
    let ts = TwistSystem::new(c, nu_automorphism(c, &w.g)?)?;
    let px = phi_x(w)?;
    let py = phi_y(w)?;
    let bg = bold_g(&w.g, n)?;
    let lhs = twist_mul_qv(&ts, &px, &py, c)?.sub(&twist_mul_qv(&ts, &py, &px, c)?)?;
    let rhs = twist_mul_qv(&ts, &bg, &bg, c)?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let l = lhs.entry(i, j).clone();
            let r = rhs.entry(i, j).clone();
            let equal = c.is_zero_mod(&(&l - &r))?;
            entries.push(EntryCheck { i, j, lhs: l, rhs: r, equal });
        }
    }
    Ok(WeylCertificate {
        n,
        phi_x: px,
        phi_y: py,
        heisenberg,
        entries,
    })
}
