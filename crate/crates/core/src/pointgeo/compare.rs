use rayon::prelude::*;

use super::search::{sample_modules, SearchConfig, SearchStats};
use super::{extension_fiber, is_truncated_point_module, Point};
use crate::error::{Error, Result};
use crate::ncalg::Presentation;
use crate::scalar::Rational;

type QPoint = Point<Rational>;

/// Cross-membership of sampled point sequences of two presentations.
#[derive(Clone, Debug)]
pub struct CompareReport {
    /// Sequence length (number of points).
    pub length: usize,
    pub samples_u: usize,
    pub samples_s: usize,
    /// Sampled from the first presentation but invalid for the second.
    pub u_only: usize,
    pub s_only: usize,
    pub u_only_examples: Vec<Vec<QPoint>>,
    pub s_only_examples: Vec<Vec<QPoint>>,
    pub stats: SearchStats,
}

impl CompareReport {
    pub fn agree(&self) -> bool {
        self.u_only == 0 && self.s_only == 0
    }
}

const EXAMPLES_KEPT: usize = 3;

fn outside(p: &Presentation<Rational>, modules: &[Vec<QPoint>]) -> Result<Vec<Vec<QPoint>>> {
    let verdicts: Vec<Result<bool>> = modules
        .par_iter()
        .map(|m| Ok(!is_truncated_point_module(p, m)?.valid))
        .collect();
    let mut out = Vec::new();
    for (m, v) in modules.iter().zip(verdicts) {
        if v? {
            out.push(m.clone());
        }
    }
    Ok(out)
}

/// Samples `n` sequences of `length` points from each presentation and
/// checks them against the other.
pub fn compare_point_sets(
    pu: &Presentation<Rational>,
    ps: &Presentation<Rational>,
    length: usize,
    n: usize,
    cfg: &SearchConfig,
) -> Result<CompareReport> {
    if pu.generator_count() != ps.generator_count() {
        return Err(Error::Precondition(format!(
            "generator counts differ: {} vs {}",
            pu.generator_count(),
            ps.generator_count()
        )));
    }
    let su = sample_modules(pu, length, n, cfg)?;
    let cfg_s = SearchConfig {
        seed: cfg.seed ^ 0x5a5a_5a5a,
        ..cfg.clone()
    };
    let ss = sample_modules(ps, length, n, &cfg_s)?;
    let uo = outside(ps, &su.modules)?;
    let so = outside(pu, &ss.modules)?;
    let mut stats = su.stats.clone();
    stats.merge(&ss.stats);
    Ok(CompareReport {
        length,
        samples_u: su.modules.len(),
        samples_s: ss.modules.len(),
        u_only: uo.len(),
        s_only: so.len(),
        u_only_examples: uo.into_iter().take(EXAMPLES_KEPT).collect(),
        s_only_examples: so.into_iter().take(EXAMPLES_KEPT).collect(),
        stats,
    })
}

/// Fiber and shift behaviour of sampled sequences of one length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LengthStats {
    /// Sequence length (number of points).
    pub length: usize,
    pub samples: usize,
    pub singleton: usize,
    pub empty: usize,
    /// Fibers of positive projective dimension.
    pub positive: usize,
    pub shift_failures: usize,
}

#[derive(Clone, Debug)]
pub struct StabilizationReport {
    pub lengths: Vec<LengthStats>,
    pub stats: SearchStats,
}

impl StabilizationReport {
    /// No positive-dimensional fiber and every shift valid.
    pub fn stabilized(&self) -> bool {
        self.lengths.iter().all(|l| l.positive == 0 && l.shift_failures == 0)
    }

    pub fn all_singletons(&self) -> bool {
        self.lengths.iter().all(|l| l.singleton == l.samples && l.shift_failures == 0)
    }
}

/// Outcome for one sample: (fiber projective dimension or `None` if
/// empty, shift ok).
fn check_sample(p: &Presentation<Rational>, pts: &[QPoint]) -> Result<(Option<usize>, bool)> {
    let fiber = extension_fiber(p, pts)?;
    let shifted = pts[1..].to_vec();
    let shift_ok = match fiber.single_point() {
        Some(q) => {
            let mut s = shifted;
            s.push(q);
            is_truncated_point_module(p, &s)?.valid && !extension_fiber(p, &s[..s.len() - 1])?.is_empty()
        }
        None => is_truncated_point_module(p, &shifted)?.valid,
    };
    let dim = if fiber.is_empty() { None } else { fiber.projective_dim() };
    Ok((dim, shift_ok))
}

/// For each sequence length in `d0..dmax`, samples `n` sequences and
/// records the extension fiber dimension and whether dropping the first
/// point leaves a valid sequence.
pub fn stabilization_check(
    p: &Presentation<Rational>,
    d0: usize,
    dmax: usize,
    n: usize,
    cfg: &SearchConfig,
) -> Result<StabilizationReport> {
    if d0 < 1 || dmax < d0 {
        return Err(Error::Precondition(format!("need 1 <= d0 <= D, got d0 = {d0}, D = {dmax}")));
    }
    let mut lengths = Vec::new();
    let mut stats = SearchStats::default();
    for len in d0..dmax {
        let c = SearchConfig {
            seed: cfg.seed.wrapping_add(len as u64),
            ..cfg.clone()
        };
        let s = sample_modules(p, len, n, &c)?;
        stats.merge(&s.stats);
        let outcomes: Vec<Result<(Option<usize>, bool)>> =
            s.modules.par_iter().map(|m| check_sample(p, m)).collect();
        let mut ls = LengthStats {
            length: len,
            samples: s.modules.len(),
            ..LengthStats::default()
        };
        for o in outcomes {
            let (dim, shift_ok) = o?;
            match dim {
                None => ls.empty += 1,
                Some(0) => ls.singleton += 1,
                Some(_) => ls.positive += 1,
            }
            if !shift_ok {
                ls.shift_failures += 1;
            }
        }
        lengths.push(ls);
    }
    Ok(StabilizationReport { lengths, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Presentation<Rational>;

    fn a44() -> P {
        P::parse(&["x", "y"], &["x*x*y - 4*x*y*x + 4*y*x*x", "x*y*y - 4*y*x*y + 4*y*y*x"]).unwrap()
    }

    fn qplane() -> P {
        P::parse(&["x", "y"], &["x*y - 2*y*x"]).unwrap()
    }

    fn cfg() -> SearchConfig {
        SearchConfig {
            seed: 11,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn down_up_matches_quantum_plane_at_length_four() {
        let r = compare_point_sets(&a44(), &qplane(), 4, 40, &cfg()).unwrap();
        assert!(r.agree(), "{r:?}");
        assert_eq!(r.samples_u, 40);
    }

    #[test]
    fn short_sequences_differ() {
        let r = compare_point_sets(&a44(), &qplane(), 2, 60, &cfg()).unwrap();
        assert!(r.u_only > 0);
        assert_eq!(r.s_only, 0);
    }

    #[test]
    fn identical_presentations_agree() {
        let r = compare_point_sets(&qplane(), &qplane(), 3, 20, &cfg()).unwrap();
        assert!(r.agree());
    }

    #[test]
    fn generator_counts_must_match() {
        let p3 = P::parse(&["x", "y", "z"], &["x*y - y*x"]).unwrap();
        assert!(compare_point_sets(&qplane(), &p3, 3, 5, &cfg()).is_err());
    }

    #[test]
    fn down_up_stabilizes() {
        let r = stabilization_check(&a44(), 3, 6, 30, &cfg()).unwrap();
        assert!(r.all_singletons(), "{:?}", r.lengths);
    }

    #[test]
    fn free_algebra_does_not_stabilize() {
        let free = P::parse(&["x", "y"], &[]).unwrap();
        let r = stabilization_check(&free, 1, 3, 5, &cfg()).unwrap();
        assert!(!r.stabilized());
    }

    #[test]
    fn quantum_plane_is_singleton_from_the_start() {
        let r = stabilization_check(&qplane(), 1, 5, 20, &cfg()).unwrap();
        assert!(r.all_singletons(), "{:?}", r.lengths);
    }
}
