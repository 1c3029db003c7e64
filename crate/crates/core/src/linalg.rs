//! Dense matrices over a [`Scalar`] with the handful of elimination routines
//! the module computations need: reduced row echelon form, kernels, solving,
//! and quotient maps.
//!
//! Vectors are rows. A matrix `m` with `r` rows and `c` columns is the linear
//! map `x -> x * m` from `F^r` to `F^c`.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from rows of length `cols`. `rows` may be empty.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_negligible())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_negligible() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if b.is_negligible() {
                        continue;
                    }
                    let v = out[(r, c)].clone() + a.clone() * b.clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }

    /// `x * self` for a row vector `x`.
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![F::zero(); self.cols];
        for (k, a) in x.iter().enumerate() {
            if a.is_negligible() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let b = &self[(k, c)];
                if !b.is_negligible() {
                    *o = o.clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<F> {
        let rows = idx.iter().map(|&r| self.row(r).to_vec()).collect();
        Matrix::from_rows(rows, self.cols)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix<F> {
        let mut out = Self::zeros(self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out[(r, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces to reduced row echelon form in place, considering only the
    /// first `limit` columns for pivots. Returns the pivot columns in row order.
    pub fn rref_limited(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..limit.min(self.cols) {
            if lead >= self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !self[(r, c)].is_negligible()) else {
                continue;
            };
            self.swap_rows(lead, p);
            let inv = F::one() / self[(lead, c)].clone();
            for k in 0..self.cols {
                let v = self[(lead, k)].clone() * inv.clone();
                self[(lead, k)] = v;
            }
            // exact zero at the pivot column avoids drift for inexact types
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self[(r, c)].clone();
                if factor.is_negligible() {
                    continue;
                }
                for k in 0..self.cols {
                    let lv = self[(lead, k)].clone();
                    if lv.is_negligible() {
                        continue;
                    }
                    let v = self[(r, k)].clone() - factor.clone() * lv;
                    self[(r, k)] = v;
                }
                self[(r, c)] = F::zero();
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        let cols = self.cols;
        self.rref_limited(cols)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x^T = 0}`, returned as rows.
    pub fn null_space(&self) -> Matrix<F> {
        let mut r = self.clone();
        let pivots = r.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out[(k, f)] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                out[(k, p)] = -r[(row, f)].clone();
            }
        }
        out
    }

    /// Basis of `{x : x * A = 0}`, returned as rows.
    pub fn left_kernel(&self) -> Matrix<F> {
        self.transpose().null_space()
    }

    /// Basis of the row space, in reduced echelon form.
    pub fn row_space(&self) -> Matrix<F> {
        let mut r = self.clone();
        let n = r.rref().len();
        r.select_rows(&(0..n).collect::<Vec<_>>())
    }

    /// Some `X` with `self * X = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hstack(b);
        let pivots = aug.rref_limited(self.cols);
        // rows below the pivots must vanish on the right-hand side
        for r in pivots.len()..aug.rows {
            if (0..b.cols).any(|c| !aug[(r, self.cols + c)].is_negligible()) {
                return None;
            }
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = aug[(row, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    /// Some `C` with `C * self = y`, or `None` when a row of `y` is outside
    /// the row space.
    pub fn solve_left(&self, y: &Matrix<F>) -> Option<Matrix<F>> {
        self.transpose()
            .solve(&y.transpose())
            .map(|x| x.transpose())
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Quotient of `F^n` by the span of some rows.
///
/// `projection` is `n x q` and sends a vector to its class; `section` is
/// `q x n` and lifts classes back to representatives on the non-pivot
/// coordinates.
#[derive(Clone)]
pub struct Quotient<F> {
    pub projection: Matrix<F>,
    pub section: Matrix<F>,
}

impl<F: Scalar> Quotient<F> {
    pub fn new(ambient: usize, sub: &Matrix<F>) -> Self {
        assert_eq!(sub.cols(), ambient);
        let mut r = sub.clone();
        let pivots = r.rref();
        let mut pivot_row = vec![None; ambient];
        for (row, &p) in pivots.iter().enumerate() {
            pivot_row[p] = Some(row);
        }
        let free: Vec<usize> = (0..ambient).filter(|&c| pivot_row[c].is_none()).collect();
        let mut projection = Matrix::zeros(ambient, free.len());
        let mut section = Matrix::zeros(free.len(), ambient);
        for (k, &f) in free.iter().enumerate() {
            projection[(f, k)] = F::one();
            section[(k, f)] = F::one();
        }
        for (c, row) in pivot_row.iter().enumerate() {
            if let Some(row) = *row {
                for (k, &f) in free.iter().enumerate() {
                    projection[(c, k)] = -r[(row, f)].clone();
                }
            }
        }
        Quotient {
            projection,
            section,
        }
    }

    pub fn dim(&self) -> usize {
        self.section.rows()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Q::from_integer(v)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rank_and_kernels() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.null_space();
        assert_eq!(k.rows(), 1);
        assert!(a.mul(&k.transpose()).is_zero());
        let lk = a.left_kernel();
        assert_eq!(lk.rows(), 1);
        assert!(lk.mul(&a).is_zero());
    }

    #[test]
    fn solve_and_inconsistency() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[3], &[1]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let singular = m(&[&[1, 1], &[1, 1]]);
        assert!(singular.solve(&m(&[&[1], &[2]])).is_none());
    }

    #[test]
    fn quotient_kills_subspace() {
        let sub = m(&[&[1, 1, 0]]);
        let q = Quotient::new(3, &sub);
        assert_eq!(q.dim(), 2);
        assert!(sub.mul(&q.projection).is_zero());
        // section followed by projection is the identity on the quotient
        assert_eq!(q.section.mul(&q.projection), Matrix::identity(2));
    }

    #[test]
    fn empty_shapes() {
        let a: Matrix<Q> = Matrix::zeros(0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.null_space().rows(), 3);
        let q = Quotient::new(3, &a);
        assert_eq!(q.dim(), 3);
        let z: Matrix<Q> = Matrix::zeros(2, 0);
        assert_eq!(z.left_kernel().rows(), 2);
    }
}
