use super::algebra::Algebra;
use super::crossed::CrossedProduct;
use crate::error::{Error, Result};
use crate::exactla::{induced_map, Matrix, QuotientSpace};
use crate::field::Field;
use crate::monhom::{KSModule, Side};

/// A bimodule over a finite-dimensional algebra: left and right action
/// matrices for each basis element.
#[derive(Clone, Debug)]
pub struct Bimodule<F: Field> {
    algebra: Algebra<F>,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    /// Checks that `left` is a unital homomorphism, `right` a unital
    /// anti-homomorphism, and that they commute.
    pub fn new(
        algebra: &Algebra<F>,
        dim: usize,
        left: Vec<Matrix<F>>,
        right: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::Shape(format!(
                "{} left / {} right matrices for an algebra of dimension {n}",
                left.len(),
                right.len()
            )));
        }
        if left
            .iter()
            .chain(&right)
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::Shape(format!("action matrices must be {dim}x{dim}")));
        }
        let m = Bimodule {
            algebra: algebra.clone(),
            dim,
            left,
            right,
        };
        if !m.left_of(algebra.unit()).is_identity() || !m.right_of(algebra.unit()).is_identity() {
            return Err(Error::BimoduleAxioms(
                "the unit does not act as the identity".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let ij = m.combine(&m.left, algebra.basis_product(i, j));
                if m.left[i].mul(&m.left[j]) != ij {
                    return Err(Error::BimoduleAxioms(format!(
                        "left action fails at ({i},{j})"
                    )));
                }
                let rij = m.combine(&m.right, algebra.basis_product(i, j));
                if m.right[j].mul(&m.right[i]) != rij {
                    return Err(Error::BimoduleAxioms(format!(
                        "right action fails at ({i},{j})"
                    )));
                }
                if m.left[i].mul(&m.right[j]) != m.right[j].mul(&m.left[i]) {
                    return Err(Error::BimoduleAxioms(format!(
                        "left {i} and right {j} do not commute"
                    )));
                }
            }
        }
        Ok(m)
    }

    fn combine(&self, mats: &[Matrix<F>], coeffs: &[(usize, F::Elem)]) -> Matrix<F> {
        let f = self.algebra.field();
        coeffs.iter().fold(
            Matrix::zeros(f.clone(), self.dim, self.dim),
            |acc, (k, c)| acc.add(&mats[*k].scale(c)),
        )
    }

    fn dense_combine(&self, mats: &[Matrix<F>], a: &[F::Elem]) -> Matrix<F> {
        let f = self.algebra.field();
        let coeffs: Vec<(usize, F::Elem)> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(k, c)| (k, c.clone()))
            .collect();
        self.combine(mats, &coeffs)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left(&self, i: usize) -> &Matrix<F> {
        &self.left[i]
    }
    pub fn right(&self, i: usize) -> &Matrix<F> {
        &self.right[i]
    }
    pub fn lefts(&self) -> &[Matrix<F>] {
        &self.left
    }
    pub fn rights(&self) -> &[Matrix<F>] {
        &self.right
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_of(&self, a: &[F::Elem]) -> Matrix<F> {
        self.dense_combine(&self.left, a)
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_of(&self, a: &[F::Elem]) -> Matrix<F> {
        self.dense_combine(&self.right, a)
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(algebra: &Algebra<F>) -> Self {
        let n = algebra.dim();
        let left = (0..n)
            .map(|i| algebra.left_mult(&algebra.basis(i)))
            .collect();
        let right = (0..n)
            .map(|i| algebra.right_mult(&algebra.basis(i)))
            .collect();
        Bimodule {
            algebra: algebra.clone(),
            dim: n,
            left,
            right,
        }
    }

    /// Restriction along `h : source → self.algebra` (columns are images of
    /// the source basis).
    pub fn pullback(&self, source: &Algebra<F>, h: &Matrix<F>) -> Result<Self> {
        if h.rows() != self.algebra.dim() || h.cols() != source.dim() {
            return Err(Error::Shape("pullback map has the wrong shape".into()));
        }
        let left = (0..source.dim())
            .map(|i| self.left_of(&h.column(i)))
            .collect();
        let right = (0..source.dim())
            .map(|i| self.right_of(&h.column(i)))
            .collect();
        Bimodule::new(source, self.dim, left, right)
    }

    /// Matrices of `x ↦ a·x − x·a` for each basis element of `A`, acting
    /// through `embed` (columns are images of the basis of `A`).
    fn commutators(&self, embed: &Matrix<F>) -> Vec<Matrix<F>> {
        (0..embed.cols())
            .map(|i| {
                let a = embed.column(i);
                self.left_of(&a).sub(&self.right_of(&a))
            })
            .collect()
    }
}

fn check_over<F: Field>(m: &Bimodule<F>, c: &CrossedProduct<F>) -> Result<()> {
    if m.algebra != *c.algebra() {
        return Err(Error::BimoduleAxioms(
            "bimodule is not over this crossed product".into(),
        ));
    }
    Ok(())
}

/// `s·x = Γ(s)·x·Γ(s⁻¹)` as a left `KS`-module.
pub fn module_as_ks<F: Field>(m: &Bimodule<F>, c: &CrossedProduct<F>) -> Result<KSModule<F>> {
    check_over(m, c)?;
    let s = c.action().monoid();
    let act = (0..s.size())
        .map(|x| m.left_of(c.gamma(x)).mul(&m.right_of(c.gamma(s.inv(x)))))
        .collect();
    KSModule::new(s, m.algebra.field().clone(), m.dim, act, Side::Left)
        .map_err(|e| Error::BimoduleAxioms(format!("induced KS-action: {e}")))
}

/// `M / [A, M]` with its induced left `KS`-action.
pub fn coinvariants<F: Field>(
    m: &Bimodule<F>,
    c: &CrossedProduct<F>,
) -> Result<(QuotientSpace<F>, KSModule<F>)> {
    let v = module_as_ks(m, c)?;
    let f = m.algebra.field().clone();
    let span = m
        .commutators(c.embed_a())
        .iter()
        .fold(Matrix::zeros(f.clone(), m.dim, 0), |acc, x| acc.hstack(x));
    let q = QuotientSpace::new(m.dim, &span)?;
    let act = v
        .actions()
        .iter()
        .map(|a| induced_map(a, &q, &q))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::BimoduleAxioms("[A,M] is not a KS-submodule".into()))?;
    let module = KSModule::new(v.monoid(), f, q.dim(), act, Side::Left)?;
    Ok((q, module))
}

/// `M^A = {x : a·x = x·a}` with the restricted left `KS`-action; also
/// returns the inclusion (columns span `M^A`).
pub fn invariants_sub<F: Field>(
    m: &Bimodule<F>,
    c: &CrossedProduct<F>,
) -> Result<(Matrix<F>, KSModule<F>)> {
    let v = module_as_ks(m, c)?;
    let f = m.algebra.field().clone();
    let stacked = m
        .commutators(c.embed_a())
        .iter()
        .fold(Matrix::zeros(f.clone(), 0, m.dim), |acc, x| acc.vstack(x));
    let k = stacked.kernel_basis();
    let act = v
        .actions()
        .iter()
        .map(|a| {
            k.solve(&a.mul(&k))
                .ok_or_else(|| Error::BimoduleAxioms("M^A is not a KS-submodule".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = KSModule::new(v.monoid(), f, k.cols(), act, Side::Left)?;
    Ok((k, module))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossprod::action::{trivial_action, UnitalAction};
    use crate::crossprod::algebra::{diagonal_algebra, dual_numbers, matrix_algebra};
    use crate::crossprod::crossed::crossed_product;
    use crate::field::Rationals;
    use crate::invmon::{symmetric_inverse_monoid, trivial_monoid};

    fn q(v: &[i64]) -> Vec<<Rationals as Field>::Elem> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn regular_bimodules_validate() {
        for a in [
            matrix_algebra(Rationals, 2),
            dual_numbers(Rationals),
            diagonal_algebra(Rationals, 3),
        ] {
            let r = Bimodule::regular(&a);
            Bimodule::new(&a, r.dim(), r.lefts().to_vec(), r.rights().to_vec()).unwrap();
        }
        let a = dual_numbers(Rationals);
        let r = Bimodule::regular(&a);
        // a zero left action is not unital
        let zero = vec![Matrix::zeros(Rationals, 2, 2); 2];
        assert!(matches!(
            Bimodule::new(&a, 2, zero, r.rights().to_vec()),
            Err(Error::BimoduleAxioms(_))
        ));
    }

    #[test]
    fn trivial_monoid_module_structure() {
        let a = matrix_algebra(Rationals, 2);
        let c = crossed_product(&trivial_action(&trivial_monoid(), &a)).unwrap();
        let m = Bimodule::regular(c.algebra());
        assert!(module_as_ks(&m, &c).unwrap().act(0).is_identity());
        let (qs, v) = coinvariants(&m, &c).unwrap();
        assert_eq!((qs.dim(), v.dim()), (1, 1));
        let (k, w) = invariants_sub(&m, &c).unwrap();
        assert_eq!((k.cols(), w.dim()), (1, 1));
    }

    #[test]
    fn i1_regular_bimodule() {
        let s = symmetric_inverse_monoid(1).unwrap();
        let a = diagonal_algebra(Rationals, 2);
        let p = Matrix::from_i64(Rationals, 2, 2, &[1, 0, 0, 0]).unwrap();
        let act = UnitalAction::new(
            &s,
            &a,
            vec![q(&[1, 0]), q(&[1, 1])],
            vec![p, Matrix::identity(Rationals, 2)],
        )
        .unwrap();
        let c = crossed_product(&act).unwrap();
        let m = Bimodule::regular(c.algebra());
        let v = module_as_ks(&m, &c).unwrap();
        for &e in s.idempotents() {
            assert_eq!(v.act(e).mul(v.act(e)), *v.act(e));
        }
        let g0 = c.gamma(0).to_vec();
        let expected = c.algebra().left_mult(&g0).mul(&c.algebra().right_mult(&g0));
        assert_eq!(*v.act(0), expected);
        assert_eq!(coinvariants(&m, &c).unwrap().0.dim(), 2);
        assert_eq!(invariants_sub(&m, &c).unwrap().0.cols(), 2);
    }
}
