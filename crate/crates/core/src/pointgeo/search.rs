//! Depth-first propagation of point sequences over extension fibers.
//!
//! Prefixes are rational or carry one free parameter `t`. A projective line
//! fiber over a rational prefix becomes the generic branch `v0 + t·v1` plus
//! the point `v1`; the generic branch is followed over ℚ(t), and every
//! rational value of `t` at which an elimination pivot vanishes or has a pole
//! is re-explored over ℚ. Irrational special values are counted, not
//! explored. Positive-dimensional fibers met while `t` is already in use are
//! sampled, and the run is flagged as not exhaustive.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{fiber_constraints, is_truncated_point_module, normalize_point, window_value, Point};
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Presentation, QuotientCache};
use crate::normelem::{find_witness, is_normal, HeisenbergWitness};
use crate::scalar::{RatFunc, Rational, Scalar, UPoly};

/// Knobs of the propagation search.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Number of random rational seed points.
    pub random_seeds: usize,
    pub seed: u64,
    /// Also start from the generic point `(1 : t : t² : …)`.
    pub generic: bool,
    /// Largest projective fiber dimension that may be sampled.
    pub fiber_dim_bound: usize,
    /// Random points drawn from a sampled fiber (besides its basis).
    pub fiber_samples: usize,
    /// Bound on integer divisors tried when looking for rational roots.
    pub root_divisor_limit: u64,
    /// Require a Heisenberg-type display of `g` before searching.
    pub require_heisenberg: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            random_seeds: 1000,
            seed: 0,
            generic: true,
            fiber_dim_bound: 3,
            fiber_samples: 4,
            root_divisor_limit: 100_000,
            require_heisenberg: true,
        }
    }
}

/// Counters accumulated over a search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: usize,
    /// Vector-space dimension of each fiber met -> occurrences.
    pub fiber_dims: BTreeMap<usize, usize>,
    /// Rational special parameter values re-explored over ℚ.
    pub special_values: usize,
    /// Degree of special-value factors without rational roots.
    pub unresolved_special: usize,
    /// Some positive-dimensional fiber was sampled rather than enumerated.
    pub sampled: bool,
}

impl SearchStats {
    pub(crate) fn merge(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        for (k, v) in &other.fiber_dims {
            *self.fiber_dims.entry(*k).or_default() += v;
        }
        self.special_values += other.special_values;
        self.unresolved_special += other.unresolved_special;
        self.sampled |= other.sampled;
    }

    pub fn exhaustive(&self) -> bool {
        !self.sampled && self.unresolved_special == 0
    }
}

type QPoint = Point<Rational>;
type TPoint = Point<RatFunc>;

struct Engine<'a> {
    rels_q: &'a Presentation<Rational>,
    rels_t: Presentation<RatFunc>,
    /// `g`, its degree, and its image over ℚ(t); sequences where some
    /// `λ` vanishes are pruned.
    g: Option<(NCPoly<Rational>, usize, NCPoly<RatFunc>)>,
    target: usize,
    max_results: usize,
    random_completion: bool,
    cfg: &'a SearchConfig,
}

struct Run {
    rng: ChaCha8Rng,
    stats: SearchStats,
    results: Vec<Vec<QPoint>>,
}

impl Run {
    fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            stats: SearchStats::default(),
            results: Vec::new(),
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=6).into())
}

fn random_point(rng: &mut ChaCha8Rng, m: usize) -> QPoint {
    loop {
        let v: Vec<Rational> = (0..m).map(|_| random_rational(rng)).collect();
        if let Some(p) = normalize_point(&v) {
            return p;
        }
    }
}

fn random_combination<S: Scalar>(rng: &mut ChaCha8Rng, basis: &[Vec<S>]) -> Vec<S> {
    let m = basis[0].len();
    let mut v = vec![S::zero(); m];
    for b in basis {
        let c = S::from_rational(&random_rational(rng));
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi += &(c.clone() * bi);
        }
    }
    v
}

/// Scales a vector over ℚ(t) to polynomial entries with no common factor,
/// the first nonzero entry monic.
fn primitive_point(v: &[RatFunc]) -> Option<TPoint> {
    let first = v.iter().position(|c| !c.is_zero())?;
    let mut lcm = UPoly::one();
    for c in v {
        let d = c.denom();
        let g = lcm.gcd(d);
        lcm = (&lcm * d).div_rem(&g).0;
    }
    let polys: Vec<UPoly> = v.iter().map(|c| (c.numer() * &lcm).div_rem(c.denom()).0).collect();
    let mut content = UPoly::zero();
    for p in &polys {
        content = content.gcd(p);
    }
    let lead = polys[first].div_rem(&content).0;
    let scale = lead.leading()?.clone();
    let denom = content.scale(&scale);
    Some(
        polys
            .iter()
            .map(|p| RatFunc::from_poly(p.div_rem(&denom).0))
            .collect(),
    )
}

fn lift(pts: &[QPoint]) -> Vec<TPoint> {
    pts.iter()
        .map(|q| q.iter().map(RatFunc::from_rational).collect())
        .collect()
}

impl Engine<'_> {
    fn done(&self, run: &Run) -> bool {
        run.results.len() >= self.max_results
    }

    /// `λ` at the newest position is nonzero (or not yet defined).
    fn last_lambda_ok_q(&self, pts: &[QPoint]) -> bool {
        match &self.g {
            Some((g, n, _)) if pts.len() >= *n => !window_value(g, pts, pts.len() - n).is_zero(),
            _ => true,
        }
    }

    fn last_lambda_ok_t(&self, pts: &[TPoint]) -> bool {
        match &self.g {
            Some((_, n, g)) if pts.len() >= *n => !window_value(g, pts, pts.len() - n).is_zero(),
            _ => true,
        }
    }

    fn all_lambdas_ok_q(&self, pts: &[QPoint]) -> bool {
        match &self.g {
            Some((g, n, _)) if pts.len() >= *n => (0..=pts.len() - n).all(|i| !window_value(g, pts, i).is_zero()),
            _ => true,
        }
    }

    /// Evaluates a parametrized prefix at `t0`; `None` if some point
    /// degenerates or some `λ` vanishes there.
    fn specialize(&self, pts: &[TPoint], t0: &Rational) -> Option<Vec<QPoint>> {
        let mut out = Vec::with_capacity(pts.len());
        for q in pts {
            let v = q.iter().map(|c| c.eval(t0)).collect::<Option<Vec<_>>>()?;
            out.push(normalize_point(&v)?);
        }
        self.all_lambdas_ok_q(&out).then_some(out)
    }

    fn record_dim(&self, run: &mut Run, k: usize) {
        *run.stats.fiber_dims.entry(k).or_default() += 1;
    }

    fn check_budget(&self, k: usize) -> Result<()> {
        if k - 1 > self.cfg.fiber_dim_bound {
            return Err(Error::FiberBudget {
                dim: k - 1,
                bound: self.cfg.fiber_dim_bound,
            });
        }
        Ok(())
    }

    fn fiber_q(&self, pts: &[QPoint]) -> Vec<Vec<Rational>> {
        let a = fiber_constraints(self.rels_q, pts);
        if a.rows() == 0 {
            return (0..self.rels_q.generator_count())
                .map(|i| {
                    (0..self.rels_q.generator_count())
                        .map(|j| if i == j { Rational::from_i64(1) } else { Rational::from_i64(0) })
                        .collect()
                })
                .collect();
        }
        a.kernel_basis()
    }

    fn push_q(&self, mut pts: Vec<QPoint>, v: &[Rational], run: &mut Run) -> Result<()> {
        let Some(q) = normalize_point(v) else {
            return Ok(());
        };
        pts.push(q);
        if self.last_lambda_ok_q(&pts) {
            self.dfs_q(pts, run)?;
        }
        Ok(())
    }

    fn dfs_q(&self, pts: Vec<QPoint>, run: &mut Run) -> Result<()> {
        if self.done(run) {
            return Ok(());
        }
        run.stats.nodes += 1;
        if pts.len() == self.target {
            run.results.push(pts);
            return Ok(());
        }
        let basis = self.fiber_q(&pts);
        self.record_dim(run, basis.len());
        match basis.len() {
            0 => Ok(()),
            1 => self.push_q(pts, &basis[0], run),
            2 => {
                let t = RatFunc::t();
                let generic: Vec<RatFunc> = basis[0]
                    .iter()
                    .zip(&basis[1])
                    .map(|(a, b)| RatFunc::from_rational(a) + t.clone() * RatFunc::from_rational(b))
                    .collect();
                let mut seen = BTreeSet::new();
                self.push_t(lift(&pts), &generic, &mut seen, run)?;
                self.push_q(pts, &basis[1], run)
            }
            k => {
                self.check_budget(k)?;
                run.stats.sampled = true;
                let mut candidates = basis.clone();
                for _ in 0..self.cfg.fiber_samples {
                    candidates.push(random_combination(&mut run.rng, &basis));
                }
                for v in candidates {
                    self.push_q(pts.clone(), &v, run)?;
                }
                Ok(())
            }
        }
    }

    fn push_t(&self, mut pts: Vec<TPoint>, v: &[RatFunc], seen: &mut BTreeSet<Rational>, run: &mut Run) -> Result<()> {
        let Some(q) = primitive_point(v) else {
            return Ok(());
        };
        pts.push(q);
        if self.last_lambda_ok_t(&pts) {
            self.dfs_t(pts, seen, run)?;
        }
        Ok(())
    }

    fn dfs_t(&self, pts: Vec<TPoint>, seen: &mut BTreeSet<Rational>, run: &mut Run) -> Result<()> {
        if self.done(run) {
            return Ok(());
        }
        run.stats.nodes += 1;
        if pts.len() == self.target {
            self.complete_generic(&pts, seen, run);
            return Ok(());
        }
        let a = fiber_constraints(&self.rels_t, &pts);
        let mut pivots = Vec::new();
        let basis = if a.rows() == 0 {
            let m = self.rels_t.generator_count();
            (0..m)
                .map(|i| (0..m).map(|j| if i == j { RatFunc::from_i64(1) } else { RatFunc::from_i64(0) }).collect())
                .collect()
        } else {
            a.kernel_basis_with(|p| pivots.push(p.clone()))
        };
        self.record_dim(run, basis.len());
        let mut specials = Vec::new();
        for p in &pivots {
            for poly in [p.numer(), p.denom()] {
                if poly.is_constant() {
                    continue;
                }
                match poly.rational_roots(self.cfg.root_divisor_limit) {
                    Some((roots, leftover)) => {
                        run.stats.unresolved_special += leftover;
                        specials.extend(roots);
                    }
                    None => run.stats.unresolved_special += poly.degree().unwrap_or(0),
                }
            }
        }
        match basis.len() {
            0 => {}
            1 => self.push_t(pts.clone(), &basis[0], seen, run)?,
            k => {
                self.check_budget(k)?;
                run.stats.sampled = true;
                let mut candidates = basis.clone();
                for _ in 0..self.cfg.fiber_samples {
                    candidates.push(random_combination(&mut run.rng, &basis));
                }
                for v in candidates {
                    self.push_t(pts.clone(), &v, seen, run)?;
                }
            }
        }
        for t0 in specials {
            if !seen.insert(t0.clone()) {
                continue;
            }
            run.stats.special_values += 1;
            if let Some(q) = self.specialize(&pts, &t0) {
                self.dfs_q(q, run)?;
            }
        }
        Ok(())
    }

    /// Emits one rational member of a completed parametrized family.
    fn complete_generic(&self, pts: &[TPoint], seen: &BTreeSet<Rational>, run: &mut Run) {
        for k in 0..64i64 {
            let t0 = if self.random_completion {
                random_rational(&mut run.rng)
            } else {
                // 0, 1, -1, 2, -2, ...
                Rational::from_i64(if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) })
            };
            if seen.contains(&t0) {
                continue;
            }
            if let Some(q) = self.specialize(pts, &t0) {
                run.results.push(q);
                return;
            }
        }
    }

    fn run_rational(&self, start: QPoint, run: &mut Run) -> Result<()> {
        let pts = vec![start];
        if self.last_lambda_ok_q(&pts) {
            self.dfs_q(pts, run)?;
        }
        Ok(())
    }

    fn run_generic(&self, run: &mut Run) -> Result<()> {
        let m = self.rels_q.generator_count();
        let t = RatFunc::t();
        let start: TPoint = (0..m).map(|i| t.powi(i as i64)).collect();
        let mut seen = BTreeSet::new();
        let pts = vec![start];
        if self.last_lambda_ok_t(&pts) {
            self.dfs_t(pts, &mut seen, run)?;
        }
        Ok(())
    }
}

/// Which seeds a torsion-free search started from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeedSummary {
    pub coordinate: usize,
    pub random: usize,
    pub generic: usize,
}

/// Outcome of [`torsionfree_search`].
#[derive(Clone, Debug)]
pub struct TorsionfreeReport {
    /// Module length `d + 1`.
    pub length: usize,
    pub degree: usize,
    pub witness: Option<HeisenbergWitness<Rational>>,
    /// A truncated `g`-torsion-free module, as `d` points.
    pub found: Option<Vec<QPoint>>,
    /// `λ_n, …, λ_d` of the found module.
    pub lambdas: Option<Vec<Rational>>,
    pub seeds: SeedSummary,
    pub stats: SearchStats,
}

impl TorsionfreeReport {
    /// Lengths at which no such module can exist: `d ≥ 2n - 1`.
    pub fn bound_applies(&self) -> bool {
        self.length > 2 * self.degree - 1
    }

    /// Empty whenever the nonexistence bound applies.
    pub fn consistent(&self) -> bool {
        !(self.bound_applies() && self.found.is_some())
    }
}

#[derive(Clone, Debug)]
enum Seed {
    Rational(QPoint),
    Generic,
}

/// Searches for a truncated `g`-torsion-free point module of module length
/// `length` (that is, `length - 1` points).
pub fn torsionfree_search(
    p: &Presentation<Rational>,
    g: &NCPoly<Rational>,
    length: usize,
    cfg: &SearchConfig,
) -> Result<TorsionfreeReport> {
    let n = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if n == 0 {
        return Err(Error::Precondition("g must have positive degree".into()));
    }
    if length < n + 1 {
        return Err(Error::Precondition(format!(
            "length {length} is below deg g + 1 = {}",
            n + 1
        )));
    }
    let cache = QuotientCache::build(p, (2 * n).max(n + 1))?;
    if cache.is_zero_mod(g)? {
        return Err(Error::Precondition("g is zero in the algebra".into()));
    }
    if !is_normal(&cache, g)? {
        return Err(Error::NotNormal { degree: n + 1 });
    }
    let witness = if cfg.require_heisenberg {
        let w = find_witness(&cache, g)?;
        if w.is_none() {
            return Err(Error::Precondition(
                "no Heisenberg-type display g = xy - u*yx was found".into(),
            ));
        }
        w
    } else {
        None
    };
    let m = p.generator_count();
    let mut seeds: Vec<Seed> = (0..m)
        .map(|i| Seed::Rational((0..m).map(|j| Rational::from_i64((i == j) as i64)).collect()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_seeds {
        seeds.push(Seed::Rational(random_point(&mut rng, m)));
    }
    if cfg.generic {
        seeds.push(Seed::Generic);
    }
    let engine = Engine {
        rels_q: p,
        rels_t: p.map_scalars(RatFunc::from_rational),
        g: Some((g.clone(), n, g.map_scalars(RatFunc::from_rational))),
        target: length - 1,
        max_results: 1,
        random_completion: false,
        cfg,
    };
    let runs: Vec<Result<Run>> = seeds
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let mut run = Run::new(cfg.seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(i as u64 + 1)));
            match s {
                Seed::Rational(q) => engine.run_rational(q.clone(), &mut run)?,
                Seed::Generic => engine.run_generic(&mut run)?,
            }
            Ok(run)
        })
        .collect();
    let mut stats = SearchStats::default();
    let mut found = None;
    for run in runs {
        let run = run?;
        stats.merge(&run.stats);
        if found.is_none() {
            found = run.results.into_iter().next();
        }
    }
    if let Some(f) = &found {
        debug_assert!(is_truncated_point_module(p, f)?.valid);
    }
    let lambdas = found
        .as_ref()
        .map(|f| super::g_action_scalars(g, f))
        .transpose()?;
    Ok(TorsionfreeReport {
        length,
        degree: n,
        witness,
        found,
        lambdas,
        seeds: SeedSummary {
            coordinate: m,
            random: cfg.random_seeds,
            generic: cfg.generic as usize,
        },
        stats,
    })
}

/// Point sequences sampled by seeded propagation.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub modules: Vec<Vec<QPoint>>,
    pub attempts: usize,
    pub stats: SearchStats,
}

/// Samples `count` truncated point modules given by `len` points each: a
/// random first point, then propagation with random choices in
/// parametrized families.
pub fn sample_modules(p: &Presentation<Rational>, len: usize, count: usize, cfg: &SearchConfig) -> Result<SampleSet> {
    if len == 0 {
        return Err(Error::Precondition("sequence length must be positive".into()));
    }
    let m = p.generator_count();
    let engine = Engine {
        rels_q: p,
        rels_t: p.map_scalars(RatFunc::from_rational),
        g: None,
        target: len,
        max_results: 1,
        random_completion: true,
        cfg,
    };
    let mut modules = Vec::with_capacity(count);
    let mut stats = SearchStats::default();
    let mut attempts = 0usize;
    let max_attempts = 20 * count.max(1);
    while modules.len() < count && attempts < max_attempts {
        let batch = (count - modules.len()).max(8).min(max_attempts - attempts);
        let runs: Vec<Result<Run>> = (attempts..attempts + batch)
            .into_par_iter()
            .map(|i| {
                let mut run = Run::new(cfg.seed.wrapping_add(0x2545_f491_4f6c_dd1du64.wrapping_mul(i as u64 + 1)));
                let start = random_point(&mut run.rng, m);
                engine.run_rational(start, &mut run)?;
                Ok(run)
            })
            .collect();
        attempts += batch;
        for run in runs {
            let run = run?;
            stats.merge(&run.stats);
            if modules.len() < count {
                modules.extend(run.results.into_iter().take(1));
            }
        }
    }
    if modules.is_empty() && count > 0 {
        return Err(Error::SamplingFailure(format!(
            "no sequence of {len} points found in {attempts} attempts"
        )));
    }
    Ok(SampleSet {
        modules,
        attempts,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointgeo::{all_or_nothing, g_action_scalars, is_g_torsionfree_truncated};

    type P = Presentation<Rational>;

    fn down_up(alpha: i64, beta: i64) -> P {
        P::parse(
            &["x", "y"],
            &[
                &format!("x*x*y - {alpha}*x*y*x - {beta}*y*x*x"),
                &format!("x*y*y - {alpha}*y*x*y - {beta}*y*y*x"),
            ],
        )
        .unwrap()
    }

    fn small_cfg() -> SearchConfig {
        SearchConfig {
            random_seeds: 40,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn primitive_points_are_canonical() {
        let t = RatFunc::t();
        let one = RatFunc::from_i64(1);
        let v = vec![t.clone() / RatFunc::from_i64(2), (t.clone() * t.clone()) / (t.clone() + one.clone())];
        let q = primitive_point(&v).unwrap();
        assert_eq!(q[0], t.clone() + one);
        assert_eq!(q[1], RatFunc::from_i64(2) * t);
    }

    #[test]
    fn no_torsionfree_module_of_length_four() {
        let p = down_up(4, -4);
        let g = p.parse_element("x*y - 2*y*x").unwrap();
        let rep = torsionfree_search(&p, &g, 4, &small_cfg()).unwrap();
        assert!(rep.found.is_none());
        assert!(rep.bound_applies() && rep.consistent());
        assert!(rep.witness.is_some());
    }

    #[test]
    fn torsionfree_module_of_length_three_exists() {
        let p = down_up(4, -4);
        let g = p.parse_element("x*y - 2*y*x").unwrap();
        let rep = torsionfree_search(&p, &g, 3, &small_cfg()).unwrap();
        let f = rep.found.clone().unwrap();
        assert_eq!(f.len(), 2);
        assert!(is_g_torsionfree_truncated(&g, &f).unwrap());
        assert!(!rep.bound_applies());
        assert!(rep.lambdas.unwrap().iter().all(|l| !l.is_zero()));
    }

    #[test]
    fn commutative_plane_has_no_admissible_g() {
        let p = P::parse(&["x", "y"], &["x*y - y*x"]).unwrap();
        let g = p.parse_element("x*y").unwrap();
        assert!(matches!(
            torsionfree_search(&p, &g, 4, &small_cfg()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn samples_are_valid_and_deterministic() {
        let p = down_up(4, -4);
        let cfg = SearchConfig {
            seed: 7,
            ..SearchConfig::default()
        };
        let a = sample_modules(&p, 5, 10, &cfg).unwrap();
        let b = sample_modules(&p, 5, 10, &cfg).unwrap();
        assert_eq!(a.modules, b.modules);
        assert_eq!(a.modules.len(), 10);
        for m in &a.modules {
            assert!(is_truncated_point_module(&p, m).unwrap().valid);
        }
    }

    #[test]
    fn sampled_lambdas_are_all_or_nothing() {
        let p = down_up(2, -1);
        let g = p.parse_element("x*y - y*x").unwrap();
        for len in 2..6 {
            let s = sample_modules(&p, len, 10, &SearchConfig::default()).unwrap();
            for m in &s.modules {
                assert!(all_or_nothing(&g_action_scalars(&g, m).unwrap()), "{m:?}");
            }
        }
    }
}
