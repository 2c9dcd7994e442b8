use crate::error::{Error, Result};
use crate::field::Field;

use super::Matrix;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Column-compressed sparse matrix. Chain-complex differentials are built in
/// this form since each column touches only a handful of summands.
#[derive(Clone, Debug)]
pub struct SparseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> PartialEq for SparseMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.columns == other.columns
    }
}

/// Sorts by index, sums duplicates and drops zeros.
fn normalize<F: Field>(field: &F, mut entries: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w = field.add(w, &v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}

/// `a + c * b` for sorted sparse vectors.
fn axpy<F: Field>(
    field: &F,
    a: &[(usize, F::Elem)],
    c: &F::Elem,
    b: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(c, &b[j].1)));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            field.add_mul_assign(&mut v, c, &b[j].1);
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field,
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let one = field.one();
        let columns = (0..n).map(|i| vec![(i, one.clone())]).collect();
        SparseMatrix {
            field,
            rows: n,
            cols: n,
            columns,
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        field: F,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::Shape(format!(
                    "triplet ({i},{j}) outside {rows}x{cols}"
                )));
            }
            buckets[j].push((i, v));
        }
        let columns = buckets.into_iter().map(|b| normalize(&field, b)).collect();
        Ok(SparseMatrix {
            field,
            rows,
            cols,
            columns,
        })
    }

    /// Builds from per-column entry lists (unsorted, duplicates summed).
    pub fn from_column_entries(
        field: F,
        rows: usize,
        columns: Vec<Vec<(usize, F::Elem)>>,
    ) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for (j, c) in columns.into_iter().enumerate() {
            if let Some((i, _)) = c.iter().find(|(i, _)| *i >= rows) {
                return Err(Error::Shape(format!(
                    "entry ({i},{j}) outside {rows}x{cols}"
                )));
            }
            out.push(normalize(&field, c));
        }
        Ok(SparseMatrix {
            field,
            rows,
            cols,
            columns: out,
        })
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        let f = m.field().clone();
        let columns = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter_map(|i| {
                        let v = m.get(i, j);
                        (!f.is_zero(v)).then(|| (i, v.clone()))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix {
            field: f,
            rows: m.rows(),
            cols: m.cols(),
            columns,
        }
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.field.clone(), self.rows, self.cols);
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c {
                m.set(*i, j, v.clone());
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
    pub fn column(&self, j: usize) -> &[(usize, F::Elem)] {
        &self.columns[j]
    }
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix<F> {
        let mut cols: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            columns: cols,
        }
    }

    /// Matrix product `self * other`. Panics on incompatible shapes.
    pub fn mul(&self, other: &SparseMatrix<F>) -> SparseMatrix<F> {
        assert_eq!(self.cols, other.rows, "sparse product shape mismatch");
        let f = &self.field;
        let columns = other
            .columns
            .iter()
            .map(|oc| {
                let mut acc = Vec::new();
                for (k, v) in oc {
                    for (i, w) in &self.columns[*k] {
                        acc.push((*i, f.mul(v, w)));
                    }
                }
                normalize(f, acc)
            })
            .collect();
        SparseMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: other.cols,
            columns,
        }
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            if f.is_zero(&v[j]) {
                continue;
            }
            for (i, w) in c {
                f.add_mul_assign(&mut out[*i], &v[j], w);
            }
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix<F>) -> SparseMatrix<F> {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "sparse sum shape mismatch"
        );
        let one = self.field.one();
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| axpy(&self.field, a, &one, b))
            .collect();
        SparseMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn sub(&self, other: &SparseMatrix<F>) -> SparseMatrix<F> {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "sparse difference shape mismatch"
        );
        let m1 = self.field.neg(&self.field.one());
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| axpy(&self.field, a, &m1, b))
            .collect();
        SparseMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    /// Exact rank by incremental column reduction: each column is reduced
    /// against the pivots found so far, keyed by leading row index.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut pivots: Vec<Option<SparseVec<F::Elem>>> = vec![None; self.rows];
        let mut rank = 0;
        for col in &self.columns {
            let mut v = col.clone();
            while let Some((lead, coef)) = v.first().cloned() {
                match &pivots[lead] {
                    Some(p) => {
                        let c = f.neg(&coef);
                        v = axpy(f, &v, &c, p);
                    }
                    None => {
                        let inv = f.inv(&coef).expect("leading entry is nonzero");
                        for (_, x) in v.iter_mut() {
                            *x = f.mul(x, &inv);
                        }
                        pivots[lead] = Some(v);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn triplets_sum_and_drop_zeros() {
        let m = SparseMatrix::from_triplets(
            Rationals,
            2,
            2,
            vec![
                (0, 0, Rationals.from_i64(1)),
                (0, 0, Rationals.from_i64(-1)),
                (1, 1, Rationals.from_i64(3)),
            ],
        )
        .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(
            m.to_dense(),
            Matrix::from_i64(Rationals, 2, 2, &[0, 0, 0, 3]).unwrap()
        );
        assert!(
            SparseMatrix::from_triplets(Rationals, 1, 1, vec![(1, 0, Rationals.one())]).is_err()
        );
    }

    #[test]
    fn rank_matches_dense() {
        let f = PrimeField::new(5).unwrap();
        let d = Matrix::from_i64(f, 3, 4, &[1, 2, 0, 1, 2, 4, 0, 2, 0, 1, 1, 0]).unwrap();
        let s = SparseMatrix::from_dense(&d);
        assert_eq!(s.rank(), d.rank());
        assert_eq!(s.transpose().rank(), d.rank());
        assert_eq!(s.mul(&s.transpose()).to_dense(), d.mul(&d.transpose()));
    }
}
