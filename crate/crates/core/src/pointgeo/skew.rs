use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{Matrix, Rational, Scalar};

/// Maximal coordinate supports `S ⊆ {0, …, m}` whose coordinate subspaces
/// make up a skew point variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFamily {
    /// Each support increasing; supports in lexicographic order.
    pub supports: Vec<Vec<usize>>,
}

impl SupportFamily {
    /// Whether the support of `p` lies in some listed support.
    pub fn contains<S: Scalar>(&self, p: &[S]) -> bool {
        let supp: Vec<usize> = (0..p.len()).filter(|&i| !p[i].is_zero()).collect();
        self.supports.iter().any(|s| supp.iter().all(|i| s.contains(i)))
    }
}

fn bad_triple(omega: &Matrix<Rational>, i: usize, j: usize, l: usize) -> bool {
    omega[(i, j)].clone() * &omega[(j, l)] != omega[(i, l)]
}

/// The maximal supports containing no `i < j < l` with
/// `ω_ij·ω_jl ≠ ω_il`.
pub fn skew_point_variety(omega: &Matrix<Rational>) -> Result<SupportFamily> {
    let m = omega.rows();
    if m == 0 || omega.cols() != m {
        return Err(Error::MalformedBicharacter("omega must be a nonempty square matrix".into()));
    }
    for i in 0..m {
        if !omega[(i, i)].is_one() {
            return Err(Error::MalformedBicharacter(format!("omega[{i}][{i}] must be 1")));
        }
        for j in 0..m {
            if (omega[(i, j)].clone() * &omega[(j, i)]) != Rational::from_i64(1) {
                return Err(Error::MalformedBicharacter(format!(
                    "omega[{i}][{j}] * omega[{j}][{i}] must be 1"
                )));
            }
        }
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::new();
    extend(omega, 0, &mut current, &mut found);
    found.sort();
    Ok(SupportFamily { supports: found })
}

/// Backtracking over admissible supports, recording those that no later
/// or earlier index can enlarge.
fn extend(omega: &Matrix<Rational>, next: usize, current: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    let m = omega.rows();
    if next == m {
        let maximal = (0..m).filter(|k| !current.contains(k)).all(|k| !admits(omega, current, k));
        if maximal {
            found.push(current.clone());
        }
        return;
    }
    if admits(omega, current, next) {
        current.push(next);
        extend(omega, next + 1, current, found);
        current.pop();
    }
    extend(omega, next + 1, current, found);
}

/// Whether adding `k` to `set` keeps every triple good.
fn admits(omega: &Matrix<Rational>, set: &[usize], k: usize) -> bool {
    for (a, &p) in set.iter().enumerate() {
        for &q in &set[a + 1..] {
            let mut t = [p, q, k];
            t.sort_unstable();
            if bad_triple(omega, t[0], t[1], t[2]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn omega3(w01: Rational, w02: Rational, w12: Rational) -> Matrix<Rational> {
        let one = rat(1);
        Matrix::from_rows(
            3,
            vec![
                vec![one.clone(), w01.clone(), w02.clone()],
                vec![rat(1) / w01, one.clone(), w12.clone()],
                vec![rat(1) / w02, rat(1) / w12, one],
            ],
        )
    }

    #[test]
    fn examples() {
        assert_eq!(
            skew_point_variety(&omega3(rat(1), rat(1), rat(1))).unwrap().supports,
            vec![vec![0, 1, 2]]
        );
        assert_eq!(
            skew_point_variety(&omega3(rat(2), rat(2), rat(2))).unwrap().supports,
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(
            skew_point_variety(&omega3(rat(2), rat(2), rat(1))).unwrap().supports,
            vec![vec![0, 1, 2]]
        );
    }

    #[test]
    fn projective_line_is_everything() {
        let omega = Matrix::from_rows(2, vec![vec![rat(1), rat(5)], vec![ratio(1, 5), rat(1)]]);
        let fam = skew_point_variety(&omega).unwrap();
        assert_eq!(fam.supports, vec![vec![0, 1]]);
        assert!(fam.contains(&[rat(3), rat(4)]));
    }

    #[test]
    fn membership_follows_supports() {
        let fam = skew_point_variety(&omega3(rat(2), rat(2), rat(2))).unwrap();
        assert!(fam.contains(&[rat(1), rat(1), rat(0)]));
        assert!(!fam.contains(&[rat(1), rat(1), rat(1)]));
    }

    #[test]
    fn malformed_omega_is_rejected() {
        let bad = Matrix::from_rows(2, vec![vec![rat(1), rat(2)], vec![rat(2), rat(1)]]);
        assert!(matches!(skew_point_variety(&bad), Err(Error::MalformedBicharacter(_))));
    }
}
