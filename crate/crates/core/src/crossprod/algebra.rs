use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::invmon::InverseMonoid;

/// A finite-dimensional unital associative algebra given by structure
/// constants `b_i b_j = Σ_k c_{ij}^k b_k`.
#[derive(Clone, Debug)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    /// Nonzero `(k, c_{ij}^k)` for the pair `(i, j)` at `i * dim + j`.
    products: Vec<Vec<(usize, F::Elem)>>,
    unit: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.products == other.products && self.unit == other.unit
    }
}

impl<F: Field> Algebra<F> {
    /// From the flat array `sc[(i * dim + j) * dim + k] = c_{ij}^k`; checks
    /// associativity and the unit.
    pub fn new(field: F, dim: usize, sc: Vec<F::Elem>, unit: Vec<F::Elem>) -> Result<Self> {
        let expected = dim
            .checked_pow(3)
            .ok_or_else(|| Error::Shape("algebra dimension too large".into()))?;
        if sc.len() != expected {
            return Err(Error::Shape(format!(
                "{} structure constants for dimension {dim}",
                sc.len()
            )));
        }
        let products = (0..dim * dim)
            .map(|p| {
                sc[p * dim..(p + 1) * dim]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        Self::from_products(field, dim, products, unit)
    }

    /// From sparse products, one list per pair `(i, j)` in row-major order.
    pub fn from_products(
        field: F,
        dim: usize,
        products: Vec<Vec<(usize, F::Elem)>>,
        unit: Vec<F::Elem>,
    ) -> Result<Self> {
        if products.len() != dim * dim || unit.len() != dim {
            return Err(Error::Shape(format!(
                "algebra data does not match dimension {dim}"
            )));
        }
        if products.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::Shape("structure constant index out of range".into()));
        }
        let alg = Self::trusted(field, dim, products, unit);
        alg.check()?;
        Ok(alg)
    }

    pub(crate) fn trusted(
        field: F,
        dim: usize,
        mut products: Vec<Vec<(usize, F::Elem)>>,
        unit: Vec<F::Elem>,
    ) -> Self {
        for p in &mut products {
            p.sort_by_key(|e| e.0);
            p.retain(|(_, c)| !field.is_zero(c));
        }
        Algebra {
            field,
            dim,
            products,
            unit,
        }
    }

    /// Associativity on all basis triples and two-sided unit.
    pub fn check(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let bi = self.basis(i);
            let ui = self.mul(&self.unit, &bi);
            let iu = self.mul(&bi, &self.unit);
            if ui != bi || iu != bi {
                return Err(Error::AlgebraInvalid(format!(
                    "unit fails against basis element {i}"
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let mut left = vec![self.field.zero(); n];
                    for (l, c) in ij {
                        for (m, d) in self.basis_product(*l, k) {
                            self.field.add_mul_assign(&mut left[*m], c, d);
                        }
                    }
                    let mut right = vec![self.field.zero(); n];
                    for (l, c) in self.basis_product(j, k) {
                        for (m, d) in self.basis_product(i, *l) {
                            self.field.add_mul_assign(&mut right[*m], c, d);
                        }
                    }
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.products[i * self.dim + j]
    }

    /// The flat structure-constant array.
    pub fn structure_constants(&self) -> Vec<F::Elem> {
        let n = self.dim;
        let mut sc = vec![self.field.zero(); n * n * n];
        for (p, list) in self.products.iter().enumerate() {
            for (k, c) in list {
                sc[p * n + k] = c.clone();
            }
        }
        sc
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.basis_product(i, j) {
                    f.add_mul_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field.clone(), self.dim, &cols)
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field.clone(), self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_central(&self, a: &[F::Elem]) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis(i);
            self.mul(a, &b) == self.mul(&b, a)
        })
    }

    pub fn is_idempotent(&self, a: &[F::Elem]) -> bool {
        self.mul(a, a) == a
    }

    /// Whether `m` (columns are images of basis vectors) is a unital algebra
    /// homomorphism from `self` to `target`.
    pub fn is_homomorphism(&self, target: &Algebra<F>, m: &Matrix<F>) -> bool {
        if m.rows() != target.dim || m.cols() != self.dim || m.mul_vec(&self.unit) != target.unit {
            return false;
        }
        let images: Vec<Vec<F::Elem>> = m.columns();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let mut lhs = vec![self.field.zero(); target.dim];
                for (k, c) in self.basis_product(i, j) {
                    for (r, x) in images[*k].iter().enumerate() {
                        self.field.add_mul_assign(&mut lhs[r], c, x);
                    }
                }
                lhs == target.mul(&images[i], &images[j])
            })
        })
    }
}

fn from_table<F: Field>(
    field: F,
    dim: usize,
    rule: impl Fn(usize, usize) -> Option<usize>,
    unit: Vec<F::Elem>,
) -> Algebra<F> {
    let one = field.one();
    let products = (0..dim * dim)
        .map(|p| {
            rule(p / dim, p % dim)
                .map(|k| vec![(k, one.clone())])
                .unwrap_or_default()
        })
        .collect();
    Algebra::trusted(field, dim, products, unit)
}

/// `Kⁿ` with pointwise product (`n = 1` gives `K`).
pub fn diagonal_algebra<F: Field>(field: F, n: usize) -> Algebra<F> {
    let unit = vec![field.one(); n];
    from_table(field, n, |i, j| (i == j).then_some(i), unit)
}

/// `M_n(K)` with basis the matrix units `e_{ij}` at index `i * n + j`.
pub fn matrix_algebra<F: Field>(field: F, n: usize) -> Algebra<F> {
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    from_table(
        field,
        n * n,
        |a, b| (a % n == b / n).then_some((a / n) * n + b % n),
        unit,
    )
}

/// `K[x]/(x²)` with basis `1, x`.
pub fn dual_numbers<F: Field>(field: F) -> Algebra<F> {
    let unit = vec![field.one(), field.zero()];
    from_table(field, 2, |i, j| (i + j < 2).then_some(i + j), unit)
}

/// The semigroup algebra `KS` with basis the elements of `S`.
pub fn semigroup_algebra<F: Field>(field: F, s: &InverseMonoid) -> Algebra<F> {
    let mut unit = vec![field.zero(); s.size()];
    unit[s.unit()] = field.one();
    from_table(field, s.size(), |a, b| Some(s.mul(a, b)), unit)
}

/// `KE(S)` with basis the idempotents of `S` in increasing order.
pub fn idempotent_algebra<F: Field>(field: F, s: &InverseMonoid) -> Algebra<F> {
    let idem = s.idempotents();
    let pos = |e: usize| {
        idem.binary_search(&e)
            .expect("idempotents are closed under products")
    };
    let mut unit = vec![field.zero(); idem.len()];
    unit[pos(s.unit())] = field.one();
    from_table(
        field,
        idem.len(),
        |a, b| Some(pos(s.mul(idem[a], idem[b]))),
        unit,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::invmon::{cyclic_group, symmetric_inverse_monoid};

    #[test]
    fn constructions_validate() {
        let f = Rationals;
        for a in [
            diagonal_algebra(f, 1),
            diagonal_algebra(f, 3),
            matrix_algebra(f, 2),
            dual_numbers(f),
            semigroup_algebra(f, &symmetric_inverse_monoid(2).unwrap()),
            idempotent_algebra(f, &symmetric_inverse_monoid(2).unwrap()),
            semigroup_algebra(f, &cyclic_group(3).unwrap()),
        ] {
            a.check().unwrap();
            let rebuilt =
                Algebra::new(f, a.dim(), a.structure_constants(), a.unit().to_vec()).unwrap();
            assert_eq!(rebuilt, a);
        }
    }

    #[test]
    fn matrix_units_multiply() {
        let m = matrix_algebra(Rationals, 2);
        // e01 e10 = e00, e10 e01 = e11
        assert_eq!(m.basis_product(1, 2), &[(0, Rationals.one())]);
        assert_eq!(m.basis_product(2, 1), &[(3, Rationals.one())]);
        assert!(m.basis_product(1, 1).is_empty());
        assert!(!m.is_commutative());
    }

    #[test]
    fn rejects_bad_data() {
        let f = PrimeField::new(3).unwrap();
        // b0 b0 = b1, b1 anything = 0, unit b0 is not a unit
        let mut sc = vec![0u64; 8];
        sc[1] = 1;
        assert!(matches!(
            Algebra::new(f, 2, sc, vec![1, 0]),
            Err(Error::AlgebraInvalid(_))
        ));
        assert!(matches!(
            Algebra::new(f, 2, vec![0; 7], vec![1, 0]),
            Err(Error::Shape(_))
        ));
        // basis 1, x, y with x² = y, yx = x, all other products of x, y zero: (xx)x = x but x(xx) = 0
        let q = Rationals;
        let mut products = vec![Vec::new(); 9];
        for i in 0..3 {
            products[i] = vec![(i, q.one())];
            products[i * 3] = vec![(i, q.one())];
        }
        products[4] = vec![(2, q.one())];
        products[7] = vec![(1, q.one())];
        assert_eq!(
            Algebra::from_products(q, 3, products, vec![q.one(), q.zero(), q.zero()]),
            Err(Error::NotAssociative(1, 1, 1))
        );
    }
}
