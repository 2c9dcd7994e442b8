use crate::error::{Error, Result};
use crate::field::Field;

use super::Matrix;

/// A quotient `K^n / W` with explicit coordinates.
///
/// The complement of `W` is spanned by the unit vectors picked out as pivot
/// columns when `[W | I]` is row reduced, so the choice is deterministic.
#[derive(Clone, Debug)]
pub struct QuotientSpace<F: Field> {
    pub ambient_dim: usize,
    /// Independent columns spanning `W`.
    pub subspace_basis: Matrix<F>,
    /// Ambient coordinates to quotient coordinates.
    pub projection: Matrix<F>,
    /// Quotient coordinates to ambient representatives.
    pub section: Matrix<F>,
}

impl<F: Field> QuotientSpace<F> {
    pub fn new(ambient_dim: usize, span: &Matrix<F>) -> Result<Self> {
        if span.rows() != ambient_dim {
            return Err(Error::Shape(format!(
                "span has {} rows but ambient dimension is {ambient_dim}",
                span.rows()
            )));
        }
        let f = span.field().clone();
        let k = span.cols();
        let aug = span.hstack(&Matrix::identity(f.clone(), ambient_dim));
        let rref = aug.rref();
        let sub_cols: Vec<usize> = rref.pivots.iter().copied().filter(|&p| p < k).collect();
        let comp: Vec<usize> = rref
            .pivots
            .iter()
            .copied()
            .filter(|&p| p >= k)
            .map(|p| p - k)
            .collect();
        let r = sub_cols.len();
        debug_assert_eq!(r + comp.len(), ambient_dim);
        // RREF = R [W | I] with R invertible, and R maps [W_piv | E_comp] to I,
        // so the right block of the RREF is the inverse of that basis.
        let inverse = Matrix::from_fn(f.clone(), ambient_dim, ambient_dim, |i, j| {
            rref.matrix.get(i, k + j).clone()
        });
        let rows: Vec<usize> = (r..ambient_dim).collect();
        let projection = inverse.select_rows(&rows);
        let mut section = Matrix::zeros(f.clone(), ambient_dim, comp.len());
        for (j, &c) in comp.iter().enumerate() {
            section.set(c, j, f.one());
        }
        Ok(QuotientSpace {
            ambient_dim,
            subspace_basis: span.select_columns(&sub_cols),
            projection,
            section,
        })
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.section.mul_vec(v)
    }

    /// Whether `v` lies in the subspace being factored out.
    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.projection.field();
        self.project(v).iter().all(|x| f.is_zero(x))
    }
}

/// The map `g` on quotients with `g * dom.projection = cod.projection * f`.
pub fn induced_map<F: Field>(
    f: &Matrix<F>,
    dom: &QuotientSpace<F>,
    cod: &QuotientSpace<F>,
) -> Result<Matrix<F>> {
    if f.cols() != dom.ambient_dim || f.rows() != cod.ambient_dim {
        return Err(Error::Shape(format!(
            "map is {}x{} but quotients live in {} -> {}",
            f.rows(),
            f.cols(),
            dom.ambient_dim,
            cod.ambient_dim
        )));
    }
    if !cod.projection.mul(&f.mul(&dom.subspace_basis)).is_zero() {
        return Err(Error::SubspaceNotPreserved);
    }
    Ok(cod.projection.mul(&f.mul(&dom.section)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(rows: usize, cols: usize, v: &[i64]) -> Matrix<Rationals> {
        Matrix::from_i64(Rationals, rows, cols, v).unwrap()
    }

    #[test]
    fn trivial_quotients() {
        let z = QuotientSpace::new(3, &Matrix::zeros(Rationals, 3, 0)).unwrap();
        assert_eq!(z.dim(), 3);
        assert!(z.projection.is_identity());
        let full = QuotientSpace::new(3, &Matrix::identity(Rationals, 3)).unwrap();
        assert_eq!(full.dim(), 0);
    }

    #[test]
    fn line_in_plane() {
        let qs = QuotientSpace::new(2, &q(2, 1, &[1, 1])).unwrap();
        assert_eq!(qs.dim(), 1);
        assert_eq!(qs.section, q(2, 1, &[1, 0]));
        assert!(qs.projection.mul(&qs.section).is_identity());
        assert!(qs.projection.mul(&qs.subspace_basis).is_zero());
    }

    #[test]
    fn induced_swap_is_minus_one() {
        let qs = QuotientSpace::new(2, &q(2, 1, &[1, 1])).unwrap();
        let swap = q(2, 2, &[0, 1, 1, 0]);
        assert_eq!(induced_map(&swap, &qs, &qs).unwrap(), q(1, 1, &[-1]));
        let id = Matrix::identity(Rationals, 2);
        assert!(induced_map(&id, &qs, &qs).unwrap().is_identity());
        assert!(induced_map(&Matrix::zeros(Rationals, 2, 2), &qs, &qs)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn subspace_not_preserved() {
        let qs = QuotientSpace::new(2, &q(2, 1, &[1, 0])).unwrap();
        let swap = q(2, 2, &[0, 1, 1, 0]);
        assert_eq!(
            induced_map(&swap, &qs, &qs),
            Err(Error::SubspaceNotPreserved)
        );
    }

    #[test]
    fn shape_mismatch() {
        assert!(matches!(
            QuotientSpace::new(3, &q(2, 1, &[1, 1])),
            Err(Error::Shape(_))
        ));
    }
}
