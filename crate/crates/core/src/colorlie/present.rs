use super::pbw::{pbw_monomials, Pbw, RewriteOrder};
use super::{check_color_axioms, generated_in_degree_one, n_l, ColorLieAlgebra};
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Presentation, Word, DEFAULT_WORD_BUDGET};
use crate::normelem::HeisenbergWitness;
use crate::scalar::{AffineSolution, Matrix, Scalar};

fn theta_names<S: Scalar>(l: &ColorLieAlgebra<S>) -> Vec<String> {
    l.thetas().iter().map(|&t| l.names()[t].clone()).collect()
}

/// Evaluation of all `θ`-words of length `d` on the PBW basis of
/// `U(L)_d`: one column per word, in word index order.
struct Evaluation<S> {
    monomials: Vec<Vec<usize>>,
    matrix: Matrix<S>,
}

fn evaluation<S: Scalar>(pbw: &Pbw<'_, S>, d: usize) -> Result<Evaluation<S>> {
    let l = pbw.algebra();
    let gens = l.thetas().len();
    let words = (gens as u128).pow(d as u32);
    if words > DEFAULT_WORD_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            degree: d,
            words,
            budget: DEFAULT_WORD_BUDGET,
        });
    }
    let monomials = pbw_monomials(l, d)?;
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        monomials.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut cols = Vec::with_capacity(words as usize);
    for wi in 0..words as usize {
        let w = Word::from_index(wi, d, gens);
        let basis_word: Vec<usize> = w.letters().iter().map(|&k| l.thetas()[k]).collect();
        let nf = pbw.normal_form(&basis_word);
        let mut col = vec![S::zero(); monomials.len()];
        for (m, c) in nf {
            let Some(&i) = index.get(&m) else {
                return Err(Error::Precondition(format!(
                    "rewriting left degree {d}; the grading axiom must fail"
                )));
            };
            col[i] = c;
        }
        cols.push(col);
    }
    let matrix = Matrix::from_columns(monomials.len(), &cols);
    Ok(Evaluation { monomials, matrix })
}

fn poly_from_coords<S: Scalar>(v: &[S], d: usize, gens: usize) -> NCPoly<S> {
    NCPoly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Word::from_index(i, d, gens), c.clone())),
    )
}

fn require_generated<S: Scalar>(l: &ColorLieAlgebra<S>) -> Result<()> {
    let rep = check_color_axioms(l);
    if !rep.ok() {
        return Err(Error::Precondition(format!(
            "color Lie axioms fail: {}",
            rep.violations[0].describe(l.names())
        )));
    }
    if !generated_in_degree_one(l) {
        return Err(Error::NotGeneratedInDegreeOne(
            "the degree-one elements do not generate L".into(),
        ));
    }
    Ok(())
}

/// Presentation of `U(L)` on the `θ`s, with relations up to degree `cap`:
/// in each degree, the kernel of word evaluation modulo the part already
/// generated by lower-degree relations.
pub fn u_presentation<S: Scalar>(l: &ColorLieAlgebra<S>, cap: usize) -> Result<Presentation<S>> {
    require_generated(l)?;
    let gens = l.thetas().len();
    let pbw = Pbw::new(l, RewriteOrder::Leftmost);
    let mut relations = Vec::new();
    let mut prev_kernel: Vec<Vec<S>> = Vec::new();
    for d in 2..=cap {
        let ev = evaluation(&pbw, d)?;
        if ev.matrix.rank() != ev.monomials.len() {
            return Err(Error::NotGeneratedInDegreeOne(format!("words of length {d} do not span U(L)_{d}")));
        }
        let kernel = ev.matrix.kernel_basis();
        let size = gens.pow(d as u32);
        let below = gens.pow(d as u32 - 1);
        let mut span: Vec<Vec<S>> = Vec::new();
        for k in &prev_kernel {
            for t in 0..gens {
                let mut left = vec![S::zero(); size];
                let mut right = vec![S::zero(); size];
                for (i, c) in k.iter().enumerate() {
                    if !c.is_zero() {
                        left[t * below + i] = c.clone();
                        right[i * gens + t] = c.clone();
                    }
                }
                span.push(left);
                span.push(right);
            }
        }
        let mut rank = if span.is_empty() { 0 } else { Matrix::from_rows(size, span.clone()).rank() };
        for v in &kernel {
            span.push(v.clone());
            let r = Matrix::from_rows(size, span.clone()).rank();
            if r > rank {
                rank = r;
                relations.push(poly_from_coords(v, d, gens));
            } else {
                span.pop();
            }
        }
        prev_kernel = kernel;
    }
    Presentation::new(theta_names(l), relations)
}

/// The `ε`-symmetric algebra on the `θ`s: `θ_iθ_j - ω_ij·θ_jθ_i`.
pub fn epsilon_symmetric<S: Scalar>(l: &ColorLieAlgebra<S>) -> Result<Presentation<S>> {
    let gens = l.thetas().len();
    let mut relations = Vec::new();
    for i in 0..gens {
        for j in i + 1..gens {
            let w = l.eps(l.degree(l.thetas()[i]), l.degree(l.thetas()[j]));
            let mut r = NCPoly::word(&[i, j]);
            r.add_term(Word::new(vec![j, i]), -w);
            relations.push(r);
        }
    }
    Presentation::new(theta_names(l), relations)
}

/// A Heisenberg-type normal element of `U(L)` read off from a nonzero
/// bracket in the top layer of the lower central series.
#[derive(Clone, Debug)]
pub struct ColorHeisenberg<S> {
    pub n_l: usize,
    /// Presentation of `U(L)` up to degree `2 n_L - 1`.
    pub presentation: Presentation<S>,
    /// Basis indices of the chosen `x` (a `θ`) and `y`.
    pub x_basis: usize,
    pub y_basis: usize,
    pub witness: HeisenbergWitness<S>,
}

/// Picks the first `θ_i` and basis element `b` of total degree `n_L - 1`
/// (in basis order) with `[θ_i, b] ≠ 0`, and writes `g = [θ_i, b]` as
/// `xy - u·yx` with `u = ε(|θ_i|, |b|)`.
pub fn heisenberg_from_color<S: Scalar>(l: &ColorLieAlgebra<S>) -> Result<ColorHeisenberg<S>> {
    require_generated(l)?;
    let n = n_l(l);
    if n < 2 {
        return Err(Error::Precondition(
            "n_L = 1: U(L) is an eps-symmetric algebra and needs no Heisenberg element".into(),
        ));
    }
    let gens = l.thetas().len();
    let mut choice = None;
    'outer: for (k, &t) in l.thetas().iter().enumerate() {
        for b in 0..l.dim() {
            if l.total_degree(b) != n as i64 - 1 {
                continue;
            }
            if l.bracket_basis(t, b).iter().any(|c| !c.is_zero()) {
                choice = Some((k, t, b));
                break 'outer;
            }
        }
    }
    let Some((k, t, b)) = choice else {
        return Err(Error::Precondition(format!("no nonzero bracket reaches degree {n}")));
    };
    let pbw = Pbw::new(l, RewriteOrder::Leftmost);
    let ev = evaluation(&pbw, n - 1)?;
    let mut target = vec![S::zero(); ev.monomials.len()];
    let pos = ev
        .monomials
        .iter()
        .position(|m| *m == [b])
        .expect("a basis element is a PBW monomial");
    target[pos] = S::one();
    let AffineSolution::Solved { particular, .. } = ev.matrix.solve_affine(&target) else {
        return Err(Error::NotGeneratedInDegreeOne(format!("{} is not a word in the generators", l.names()[b])));
    };
    let y = poly_from_coords(&particular, n - 1, gens);
    let x = NCPoly::generator(k);
    let u = l.eps(l.degree(t), l.degree(b));
    let g = &(&x * &y) - &(&y * &x).scale(&u);
    let presentation = u_presentation(l, 2 * n - 1)?;
    Ok(ColorHeisenberg {
        n_l: n,
        presentation,
        x_basis: t,
        y_basis: b,
        witness: HeisenbergWitness::new(g, x, y, u)?,
    })
}
