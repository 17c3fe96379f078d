use std::fmt;

use super::Scalar;

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref<S> {
    pub rank: usize,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
    pub reduced: Matrix<S>,
}

/// Result of [`Matrix::solve_affine`].
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution<S> {
    Inconsistent,
    Solved { particular: Vec<S>, kernel: Vec<Vec<S>> },
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self { rows: n, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a.clone() * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a.clone() * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<S> {
        self.rref_with(|_| {})
    }

    /// Reduced row echelon form, reporting each pivot value (before it is
    /// scaled to one) to `on_pivot`. Callers working over a function field
    /// use this to learn where the elimination stops being valid.
    pub fn rref_with(&self, mut on_pivot: impl FnMut(&S)) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let piv = m[(r, c)].clone();
            on_pivot(&piv);
            let inv = piv.inv().expect("nonzero pivot");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] *= &inv;
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let delta = f.clone() * &m[(r, j)];
                        m[(i, j)] -= &delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            rank: pivots.len(),
            pivots,
            reduced: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let rr = self.rref();
        kernel_from_rref(&rr, self.cols)
    }

    /// As [`Matrix::kernel_basis`], reporting pivot values as in
    /// [`Matrix::rref_with`].
    pub fn kernel_basis_with(&self, on_pivot: impl FnMut(&S)) -> Vec<Vec<S>> {
        let rr = self.rref_with(on_pivot);
        kernel_from_rref(&rr, self.cols)
    }

    /// Solves `self * x = b`, returning a particular solution (free variables
    /// set to zero) and a kernel basis, or `Inconsistent`.
    pub fn solve_affine(&self, b: &[S]) -> AffineSolution<S> {
        assert_eq!(b.len(), self.rows, "right-hand side dimension mismatch");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let rr = aug.rref();
        if rr.pivots.last() == Some(&self.cols) {
            return AffineSolution::Inconsistent;
        }
        let mut particular = vec![S::zero(); self.cols];
        for (k, &p) in rr.pivots.iter().enumerate() {
            particular[p] = rr.reduced[(k, self.cols)].clone();
        }
        let coeff = Rref {
            rank: rr.rank,
            pivots: rr.pivots.clone(),
            reduced: rr.reduced,
        };
        AffineSolution::Solved {
            particular,
            kernel: kernel_from_rref(&coeff, self.cols),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let rr = aug.rref();
        if rr.pivots.len() < n || rr.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = rr.reduced[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

fn kernel_from_rref<S: Scalar>(rr: &Rref<S>, cols: usize) -> Vec<Vec<S>> {
    let mut is_pivot = vec![false; cols];
    for &p in &rr.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![S::zero(); cols];
            v[f] = S::one();
            for (k, &p) in rr.pivots.iter().enumerate() {
                v[p] = -rr.reduced[(k, f)].clone();
            }
            v
        })
        .collect()
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, RatFunc, Rational};
    use num_traits::Zero;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rref_of_proportional_rows() {
        let rr = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(rr.rank, 1);
        assert_eq!(rr.pivots, vec![0]);
        assert_eq!(rr.reduced, q(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_of_identity() {
        let id = Matrix::<Rational>::identity(3);
        let rr = id.rref();
        assert_eq!(rr.rank, 3);
        assert_eq!(rr.pivots, vec![0, 1, 2]);
        assert_eq!(rr.reduced, id);
    }

    #[test]
    fn rref_over_rational_functions() {
        // [[1, t], [t, t^2]]: second row is t times the first.
        let t = RatFunc::t();
        let m = Matrix::from_rows(
            2,
            vec![
                vec![RatFunc::from_i64(1), t.clone()],
                vec![t.clone(), t.clone() * &t],
            ],
        );
        assert_eq!(m.rref().rank, 1);
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        let m = Matrix::<Rational>::zeros(0, 0);
        assert_eq!(m.rref().rank, 0);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k = q(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
        assert!(q(&[&[1, 0], &[0, 1]]).kernel_basis().is_empty());
        let m = q(&[&[1, 2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn affine_examples() {
        match q(&[&[3]]).solve_affine(&[rat(6)]) {
            AffineSolution::Solved { particular, kernel } => {
                assert_eq!(particular, vec![rat(2)]);
                assert!(kernel.is_empty());
            }
            AffineSolution::Inconsistent => panic!("expected a solution"),
        }
        match q(&[&[1, 1]]).solve_affine(&[rat(0)]) {
            AffineSolution::Solved { particular, kernel } => {
                assert_eq!(particular, vec![rat(0), rat(0)]);
                assert_eq!(kernel, vec![vec![rat(-1), rat(1)]]);
            }
            AffineSolution::Inconsistent => panic!("expected a solution"),
        }
        assert_eq!(
            q(&[&[1], &[2]]).solve_affine(&[rat(1), rat(1)]),
            AffineSolution::Inconsistent
        );
    }

    #[test]
    fn inverse_round_trips() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
