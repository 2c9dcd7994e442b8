use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix over a field.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        let expected = rows
            .checked_mul(cols)
            .ok_or_else(|| Error::Shape("matrix too large".into()))?;
        if data.len() != expected {
            return Err(Error::Shape(format!(
                "declared {rows}x{cols} but got {} entries",
                data.len()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_fn(
        field: F,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Builds a matrix from small integers, row-major.
    pub fn from_i64(field: F, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        let data = entries.iter().map(|&v| field.from_i64(v)).collect();
        Self::new(field, rows, cols, data)
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column {j} has wrong length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    f.add_mul_assign(o, a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let f = &self.field;
        let support: Vec<usize> = (0..v.len()).filter(|&j| !f.is_zero(&v[j])).collect();
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut acc = f.zero();
                for &j in &support {
                    if !f.is_zero(&row[j]) {
                        f.add_mul_assign(&mut acc, &row[j], &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, other: &Matrix<F>, op: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Matrix<F> {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| op(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, c: &F::Elem) -> Matrix<F> {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(
            self.field.clone(),
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        )
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, idx.len(), |i, j| {
            self.get(i, idx[j]).clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), idx.len(), self.cols, |i, j| {
            self.get(idx[i], j).clone()
        })
    }

    /// Row reduction in place. With `full`, clears above pivots too (RREF);
    /// otherwise stops at row echelon form. Returns the pivot columns.
    fn reduce(&mut self, full: bool) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(&self.data[i * cols + c])) else {
                continue;
            };
            if p != r {
                for j in c..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&self.data[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                let x = &mut self.data[r * cols + j];
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
            let pivot_row: Vec<(usize, F::Elem)> = (c..cols)
                .filter_map(|j| {
                    let x = &self.data[r * cols + j];
                    (!f.is_zero(x)).then(|| (j, x.clone()))
                })
                .collect();
            let start = if full { 0 } else { r + 1 };
            for i in start..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let factor = f.neg(&factor);
                for (j, x) in &pivot_row {
                    let y = &mut self.data[i * cols + j];
                    f.add_mul_assign(y, &factor, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let pivots = m.reduce(true);
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        let mut m = if self.rows > self.cols {
            self.transpose()
        } else {
            self.clone()
        };
        m.reduce(false).len()
    }

    /// Basis of the right kernel: one column per free column of the RREF,
    /// ordered by free column index.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let f = &self.field;
        let Rref { matrix: r, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut k = Matrix::zeros(f.clone(), self.cols, free.len());
        for (col, &fc) in free.iter().enumerate() {
            k.set(fc, col, f.one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = r.get(i, fc);
                if !f.is_zero(v) {
                    k.set(p, col, f.neg(v));
                }
            }
        }
        k
    }

    /// Indices of a deterministic maximal independent set of columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut m = self.clone();
        m.reduce(false)
    }

    /// A basis of the column space made of original columns.
    pub fn column_basis(&self) -> Matrix<F> {
        self.select_columns(&self.pivot_columns())
    }

    /// Some `X` with `self * X = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(
            self.rows, b.rows,
            "solve: right-hand side has wrong row count"
        );
        let f = &self.field;
        let aug = self.hstack(b);
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f.clone(), self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols || self.rank() != self.rows {
            return None;
        }
        self.solve(&Matrix::identity(self.field.clone(), self.rows))
    }

    /// True if every column of `other` lies in the column space of `self`.
    pub fn spans(&self, other: &Matrix<F>) -> bool {
        self.rank() == self.hstack(other).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(rows: usize, cols: usize, v: &[i64]) -> Matrix<Rationals> {
        Matrix::from_i64(Rationals, rows, cols, v).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Rationals, 2).rank(), 2);
        assert_eq!(Matrix::zeros(Rationals, 3, 4).rank(), 0);
        assert_eq!(q(2, 2, &[1, 2, 2, 4]).rank(), 1);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(Matrix::from_i64(f2, 2, 2, &[1, 2, 2, 4]).unwrap().rank(), 1);
        // Rank depends on the characteristic: det = 3.
        let m = [1, 1, 1, 4];
        assert_eq!(q(2, 2, &m).rank(), 2);
        assert_eq!(
            Matrix::from_i64(PrimeField::new(3).unwrap(), 2, 2, &m)
                .unwrap()
                .rank(),
            1
        );
    }

    #[test]
    fn shape_error() {
        assert!(matches!(
            Matrix::from_i64(Rationals, 2, 2, &[1, 2, 3]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Rationals, 3).kernel_basis().cols(), 0);
        let k = Matrix::zeros(Rationals, 2, 3).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
        let a = q(1, 2, &[1, 1]);
        let k = a.kernel_basis();
        assert_eq!(k, q(2, 1, &[-1, 1]));
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let a = q(2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let b = q(2, 1, &[3, 2]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let singular = q(2, 2, &[1, 1, 1, 1]);
        assert!(singular.solve(&q(2, 1, &[1, 0])).is_none());
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn rref_pivots_are_leftmost() {
        let a = q(2, 3, &[0, 1, 1, 0, 2, 2]);
        let r = a.rref();
        assert_eq!(r.pivots, vec![1]);
        assert_eq!(a.pivot_columns(), vec![1]);
    }
}
