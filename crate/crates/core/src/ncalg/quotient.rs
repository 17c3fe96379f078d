use std::collections::{BTreeMap, HashMap};

use super::{NCPoly, Presentation, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default per-degree word budget for [`QuotientCache::build`].
pub const DEFAULT_WORD_BUDGET: u64 = 200_000;

type SparseRow<S> = Vec<(usize, S)>;

/// Echelon basis of a subspace of a word space; each row is keyed by its
/// largest column (the eliminated word) and stored with coefficient one there.
struct Echelon<S> {
    rows: BTreeMap<usize, SparseRow<S>>,
}

impl<S: Scalar> Echelon<S> {
    fn new() -> Self {
        Self { rows: BTreeMap::new() }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a vector; returns whether it enlarged the span.
    fn insert(&mut self, v: BTreeMap<usize, S>) -> bool {
        let mut v = v;
        while let Some((&top, _)) = v.iter().next_back() {
            let Some(row) = self.rows.get(&top) else {
                break;
            };
            let f = v[&top].clone();
            for (c, a) in row {
                let e = v.entry(*c).or_insert_with(S::zero);
                *e -= &(f.clone() * a);
                if e.is_zero() {
                    v.remove(c);
                }
            }
        }
        let Some((&top, lc)) = v.iter().next_back() else {
            return false;
        };
        let inv = lc.inv().expect("nonzero leading coefficient");
        let row: SparseRow<S> = v.into_iter().map(|(c, a)| (c, a * &inv)).collect();
        self.rows.insert(top, row);
        true
    }

    /// Back-substitutes so no row mentions another row's pivot.
    fn interreduce(&mut self) {
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for &p in &keys {
            let row = self.rows.get(&p).unwrap();
            if row.iter().all(|(c, _)| *c == p || !self.rows.contains_key(c)) {
                continue;
            }
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            for (c, a) in row {
                if *c != p {
                    if let Some(lower) = self.rows.get(c) {
                        for (c2, b) in lower {
                            if c2 != c {
                                let e = acc.entry(*c2).or_insert_with(S::zero);
                                *e -= &(a.clone() * b);
                            }
                        }
                        continue;
                    }
                }
                let e = acc.entry(*c).or_insert_with(S::zero);
                *e += a;
            }
            let row: SparseRow<S> = acc.into_iter().filter(|(_, a)| !a.is_zero()).collect();
            self.rows.insert(p, row);
        }
    }
}

/// Linear data of one graded component `A_d = F_d / I_d`.
#[derive(Clone, Debug)]
struct Component<S> {
    /// Word indices kept as the basis of `A_d`, increasing.
    retained: Vec<usize>,
    retained_pos: HashMap<usize, usize>,
    /// Eliminated word index -> combination of retained word indices.
    reducer: HashMap<usize, SparseRow<S>>,
    /// Fully reduced rows of `I_d` (pivot last).
    ideal_rows: Vec<SparseRow<S>>,
    /// `dim (F_1 I_{d-1} + I_{d-1} F_1)`.
    generated_dim: usize,
}

/// Per-degree bases, eliminated words, and normal-form reducers of a
/// presentation up to a degree cap.
///
/// Retained words are the non-pivot words of the reduced row echelon form of
/// `I_d` with columns in graded-lexicographic order; each row eliminates its
/// largest word.
#[derive(Clone, Debug)]
pub struct QuotientCache<S> {
    presentation: Presentation<S>,
    cap: usize,
    components: Vec<Component<S>>,
}

impl<S: Scalar> QuotientCache<S> {
    pub fn build(presentation: &Presentation<S>, cap: usize) -> Result<Self> {
        Self::build_with_budget(presentation, cap, DEFAULT_WORD_BUDGET)
    }

    pub fn build_with_budget(presentation: &Presentation<S>, cap: usize, budget: u64) -> Result<Self> {
        let gens = presentation.generator_count();
        for d in 0..=cap {
            let words = (gens as u128).pow(d as u32);
            if words > budget as u128 {
                return Err(Error::BudgetExceeded {
                    degree: d,
                    words,
                    budget,
                });
            }
        }
        let mut components: Vec<Component<S>> = Vec::with_capacity(cap + 1);
        for d in 0..=cap {
            let mut ech = Echelon::new();
            if d >= 1 {
                let prev = &components[d - 1];
                let shift = gens.pow(d as u32 - 1);
                for row in &prev.ideal_rows {
                    for a in 0..gens {
                        // a * row
                        ech.insert(row.iter().map(|(c, v)| (a * shift + c, v.clone())).collect());
                        // row * a
                        ech.insert(row.iter().map(|(c, v)| (c * gens + a, v.clone())).collect());
                    }
                }
            }
            let generated_dim = ech.len();
            for rel in presentation.relations() {
                if rel.homogeneous_degree() == Some(d) {
                    ech.insert(rel.terms().map(|(w, c)| (w.index(gens), c.clone())).collect());
                }
            }
            ech.interreduce();
            let total = gens.pow(d as u32);
            let mut reducer = HashMap::with_capacity(ech.len());
            let mut ideal_rows = Vec::with_capacity(ech.len());
            for (p, row) in ech.rows {
                let tail: SparseRow<S> = row
                    .iter()
                    .filter(|(c, _)| *c != p)
                    .map(|(c, a)| (*c, -a.clone()))
                    .collect();
                reducer.insert(p, tail);
                ideal_rows.push(row);
            }
            let retained: Vec<usize> = (0..total).filter(|i| !reducer.contains_key(i)).collect();
            let retained_pos = retained.iter().enumerate().map(|(k, &w)| (w, k)).collect();
            components.push(Component {
                retained,
                retained_pos,
                reducer,
                ideal_rows,
                generated_dim,
            });
        }
        Ok(Self {
            presentation: presentation.clone(),
            cap,
            components,
        })
    }

    pub fn presentation(&self) -> &Presentation<S> {
        &self.presentation
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn generator_count(&self) -> usize {
        self.presentation.generator_count()
    }

    fn component(&self, d: usize) -> Result<&Component<S>> {
        self.components
            .get(d)
            .ok_or(Error::DegreeOverCap { degree: d, cap: self.cap })
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        self.component(d).map(|_| ())
    }

    /// `dim A_d`.
    pub fn dim(&self, d: usize) -> Result<usize> {
        Ok(self.component(d)?.retained.len())
    }

    /// `dim I_d`.
    pub fn ideal_dim(&self, d: usize) -> Result<usize> {
        Ok(self.component(d)?.reducer.len())
    }

    /// Dimensions of `A_0, ..., A_cap`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.retained.len()).collect()
    }

    /// Number of minimal ideal generators in each degree with a nonzero count.
    pub fn minimal_relation_degrees(&self) -> BTreeMap<usize, usize> {
        self.components
            .iter()
            .enumerate()
            .map(|(d, c)| (d, c.reducer.len() - c.generated_dim))
            .filter(|&(_, n)| n > 0)
            .collect()
    }

    /// Retained basis words of `A_d`, increasing.
    pub fn basis(&self, d: usize) -> Result<Vec<Word>> {
        let gens = self.generator_count();
        Ok(self
            .component(d)?
            .retained
            .iter()
            .map(|&i| Word::from_index(i, d, gens))
            .collect())
    }

    pub fn is_retained(&self, w: &Word) -> Result<bool> {
        let c = self.component(w.degree())?;
        Ok(!c.reducer.contains_key(&w.index(self.generator_count())))
    }

    /// Canonical representative of `f` modulo the ideal, supported on
    /// retained words.
    pub fn normal_form(&self, f: &NCPoly<S>) -> Result<NCPoly<S>> {
        let gens = self.generator_count();
        let mut out = NCPoly::zero();
        for (w, c) in f.terms() {
            let d = w.degree();
            let comp = self.component(d)?;
            let idx = w.index(gens);
            match comp.reducer.get(&idx) {
                Some(tail) => {
                    for (j, a) in tail {
                        out.add_term(Word::from_index(*j, d, gens), a.clone() * c);
                    }
                }
                None => out.add_term(w.clone(), c.clone()),
            }
        }
        Ok(out)
    }

    /// Normal form of a product.
    pub fn mul(&self, a: &NCPoly<S>, b: &NCPoly<S>) -> Result<NCPoly<S>> {
        self.normal_form(&(a * b))
    }

    pub fn is_zero_mod(&self, f: &NCPoly<S>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether `f - g` lies in the ideal; both must be homogeneous of the
    /// same degree.
    pub fn equal_mod_ideal(&self, f: &NCPoly<S>, g: &NCPoly<S>) -> Result<bool> {
        let df = homogeneous_or_zero(f)?;
        let dg = homogeneous_or_zero(g)?;
        if let (Some(a), Some(b)) = (df, dg) {
            if a != b {
                return Err(Error::DegreeMismatch { expected: a, found: b });
            }
        }
        self.is_zero_mod(&(f - g))
    }

    /// Coordinates of the normal form of a homogeneous degree-`d` element in
    /// the retained basis of `A_d`.
    pub fn coords(&self, f: &NCPoly<S>, d: usize) -> Result<Vec<S>> {
        let comp = self.component(d)?;
        let nf = self.normal_form(f)?;
        let gens = self.generator_count();
        let mut v = vec![S::zero(); comp.retained.len()];
        for (w, c) in nf.terms() {
            if w.degree() != d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: w.degree(),
                });
            }
            v[comp.retained_pos[&w.index(gens)]] = c.clone();
        }
        Ok(v)
    }

    /// Element of `A_d` with the given retained-basis coordinates.
    pub fn from_coords(&self, d: usize, v: &[S]) -> Result<NCPoly<S>> {
        let comp = self.component(d)?;
        let gens = self.generator_count();
        Ok(NCPoly::from_terms(
            comp.retained
                .iter()
                .zip(v)
                .map(|(&i, c)| (Word::from_index(i, d, gens), c.clone())),
        ))
    }
}

fn homogeneous_or_zero<S: Scalar>(f: &NCPoly<S>) -> Result<Option<usize>> {
    if f.is_zero() {
        return Ok(None);
    }
    f.homogeneous_degree().map(Some).ok_or(Error::NotHomogeneous)
}

/// `dim A_d` for `d = 0..=cap`.
pub fn hilbert<S: Scalar>(p: &Presentation<S>, cap: usize) -> Result<Vec<usize>> {
    Ok(QuotientCache::build(p, cap)?.hilbert())
}

/// Minimal homogeneous generators of the ideal per degree, up to `cap`.
pub fn minimal_relation_degrees<S: Scalar>(p: &Presentation<S>, cap: usize) -> Result<BTreeMap<usize, usize>> {
    if cap < p.max_relation_degree() {
        return Err(Error::Precondition(format!(
            "cap {cap} is below the largest relation degree {}",
            p.max_relation_degree()
        )));
    }
    Ok(QuotientCache::build(p, cap)?.minimal_relation_degrees())
}
