use super::algebra::{idempotent_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::invmon::InverseMonoid;

/// A unital action of an inverse monoid on an algebra: central idempotents
/// `1_s` and total matrices `T_s = θ_s(1_{s⁻¹} ·)`.
#[derive(Clone, Debug)]
pub struct UnitalAction<F: Field> {
    monoid: InverseMonoid,
    algebra: Algebra<F>,
    one: Vec<Vec<F::Elem>>,
    theta: Vec<Matrix<F>>,
}

/// Outcome of [`validate_action`]: each failed identity with its witnesses.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActionReport {
    pub failures: Vec<String>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl<F: Field> UnitalAction<F> {
    /// Checks shapes only; see [`validate_action`] for the axioms.
    pub fn from_parts(
        monoid: &InverseMonoid,
        algebra: &Algebra<F>,
        one: Vec<Vec<F::Elem>>,
        theta: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let (n, d) = (monoid.size(), algebra.dim());
        if one.len() != n || theta.len() != n {
            return Err(Error::Shape(format!(
                "action data for {} / {} elements, monoid has {n}",
                one.len(),
                theta.len()
            )));
        }
        if let Some(s) = one.iter().position(|v| v.len() != d) {
            return Err(Error::Shape(format!("1_{s} has the wrong length")));
        }
        if let Some(s) = theta.iter().position(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Shape(format!("T_{s} is not {d}x{d}")));
        }
        Ok(UnitalAction {
            monoid: monoid.clone(),
            algebra: algebra.clone(),
            one,
            theta,
        })
    }

    /// Shapes plus every axiom; the first failure becomes the error.
    pub fn new(
        monoid: &InverseMonoid,
        algebra: &Algebra<F>,
        one: Vec<Vec<F::Elem>>,
        theta: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let a = Self::from_parts(monoid, algebra, one, theta)?;
        let report = validate_action(&a);
        match report.failures.into_iter().next() {
            Some(msg) => Err(Error::ActionInvalid(msg)),
            None => Ok(a),
        }
    }

    pub fn monoid(&self) -> &InverseMonoid {
        &self.monoid
    }
    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn one(&self, s: usize) -> &[F::Elem] {
        &self.one[s]
    }
    pub fn theta(&self, s: usize) -> &Matrix<F> {
        &self.theta[s]
    }

    /// Matrix of multiplication by `1_s`, the projector onto `1_sA`.
    pub fn ideal_projector(&self, s: usize) -> Matrix<F> {
        self.algebra.left_mult(&self.one[s])
    }
}

/// The trivial action: every `1_s = 1_A` and `T_s = id`.
pub fn trivial_action<F: Field>(monoid: &InverseMonoid, algebra: &Algebra<F>) -> UnitalAction<F> {
    let one = vec![algebra.unit().to_vec(); monoid.size()];
    let theta = vec![Matrix::identity(algebra.field().clone(), algebra.dim()); monoid.size()];
    UnitalAction {
        monoid: monoid.clone(),
        algebra: algebra.clone(),
        one,
        theta,
    }
}

/// `S` acting on `KE(S)` by `e ↦ ses⁻¹`, with `1_s = ss⁻¹`.
pub fn conjugation_action<F: Field>(monoid: &InverseMonoid, field: F) -> UnitalAction<F> {
    let alg = idempotent_algebra(field.clone(), monoid);
    let idem = monoid.idempotents();
    let pos = |e: usize| idem.binary_search(&e).expect("idempotent");
    let (one, theta) = (0..monoid.size())
        .map(|s| {
            let t = Matrix::from_fn(field.clone(), idem.len(), idem.len(), |r, c| {
                let image = monoid.product(&[s, idem[c], monoid.inv(s)]);
                if pos(image) == r {
                    field.one()
                } else {
                    field.zero()
                }
            });
            (alg.basis(pos(monoid.r(s))), t)
        })
        .unzip();
    UnitalAction {
        monoid: monoid.clone(),
        algebra: alg,
        one,
        theta,
    }
}

/// Checks every axiom of a unital action and reports all failures.
pub fn validate_action<F: Field>(a: &UnitalAction<F>) -> ActionReport {
    let s = &a.monoid;
    let alg = &a.algebra;
    let n = s.size();
    let d = alg.dim();
    let mut fails = Vec::new();
    let proj: Vec<Matrix<F>> = (0..n).map(|x| a.ideal_projector(x)).collect();
    let ranks: Vec<usize> = proj.iter().map(Matrix::rank).collect();

    for x in 0..n {
        if !alg.is_idempotent(&a.one[x]) {
            fails.push(format!("1_{x} is not idempotent"));
        }
        if !alg.is_central(&a.one[x]) {
            fails.push(format!("1_{x} is not central"));
        }
    }
    if a.one[s.unit()] != alg.unit() {
        fails.push("1_1 ≠ 1_A".into());
    }
    if !a.theta[s.unit()].is_identity() {
        fails.push("T_1 ≠ id".into());
    }
    for x in 0..n {
        let t = &a.theta[x];
        let xi = s.inv(x);
        let rank = t.rank();
        if rank != ranks[x] || proj[x].mul(t) != *t {
            fails.push(format!("image(T_{x}) ≠ 1_{x}A"));
        }
        if t.mul(&proj[xi]) != *t {
            fails.push(format!("T_{x} ≠ T_{x}·1_{{{xi}}}"));
        }
        if rank != ranks[xi] {
            fails.push(format!("T_{x} is not injective on 1_{{{xi}}}A"));
        }
        let images = t.columns();
        'pairs: for i in 0..d {
            for j in 0..d {
                let lhs = t.mul_vec(&alg.mul(&alg.basis(i), &alg.basis(j)));
                if lhs != alg.mul(&images[i], &images[j]) {
                    fails.push(format!(
                        "T_{x} is not multiplicative at basis pair ({i},{j})"
                    ));
                    break 'pairs;
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = s.mul(x, y);
            let e = alg.mul(&a.one[s.inv(y)], &a.one[s.inv(xy)]);
            let p = alg.left_mult(&e);
            if a.theta[x].mul(&a.theta[y]).mul(&p) != a.theta[xy].mul(&p) {
                fails.push(format!(
                    "T_{x}T_{y} ≠ T_{xy} on 1_{{{}}}1_{{{}}}A",
                    s.inv(y),
                    s.inv(xy)
                ));
            }
            if s.natural_leq(x, y) && alg.mul(&a.one[x], &a.one[y]) != a.one[x] {
                fails.push(format!("1_{x}1_{y} ≠ 1_{x} although {x} ≤ {y}"));
            }
            let lhs = a.theta[x].mul_vec(&alg.mul(&a.one[s.inv(x)], &a.one[y]));
            if lhs != alg.mul(&a.one[x], &a.one[xy]) {
                fails.push(format!("θ_{x}(1_{{{}}}1_{y}) ≠ 1_{x}1_{{{xy}}}", s.inv(x)));
            }
        }
        if a.one[s.r(x)] != a.one[x] {
            fails.push(format!("1_{{{}}} ≠ 1_{x}", s.r(x)));
        }
    }
    for &e in s.idempotents() {
        for &f in s.idempotents() {
            if a.one[s.mul(e, f)] != alg.mul(&a.one[e], &a.one[f]) {
                fails.push(format!("1_{{{}}} ≠ 1_{e}1_{f}", s.mul(e, f)));
            }
        }
    }
    ActionReport { failures: fails }
}

/// `T_s` and `T_t` agree on `1_{s⁻¹}1_{t⁻¹}A` for every σ-related pair.
pub fn is_compatible<F: Field>(a: &UnitalAction<F>) -> bool {
    let s = &a.monoid;
    let classes = s.sigma_classes();
    let alg = &a.algebra;
    (0..s.size()).all(|x| {
        (x + 1..s.size())
            .filter(|&y| classes[x] == classes[y])
            .all(|y| {
                let p = alg.left_mult(&alg.mul(&a.one[s.inv(x)], &a.one[s.inv(y)]));
                a.theta[x].mul(&p) == a.theta[y].mul(&p)
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossprod::algebra::{diagonal_algebra, matrix_algebra};
    use crate::field::Rationals;
    use crate::invmon::{
        chain_semilattice, cyclic_group, direct_product, symmetric_inverse_monoid, trivial_monoid,
    };

    fn q(v: &[i64]) -> Vec<<Rationals as Field>::Elem> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    pub(crate) fn i1_on_kxk(first: &[i64]) -> UnitalAction<Rationals> {
        let s = symmetric_inverse_monoid(1).unwrap();
        let a = diagonal_algebra(Rationals, 2);
        let p = Matrix::from_i64(Rationals, 2, 2, &[1, 0, 0, 0]).unwrap();
        UnitalAction::from_parts(
            &s,
            &a,
            vec![q(first), q(&[1, 1])],
            vec![p, Matrix::identity(Rationals, 2)],
        )
        .unwrap()
    }

    #[test]
    fn i1_example() {
        let good = i1_on_kxk(&[1, 0]);
        assert!(validate_action(&good).passed());
        assert!(is_compatible(&good));
        let bad = i1_on_kxk(&[1, 1]);
        let report = validate_action(&bad);
        assert!(
            report.failures.contains(&"image(T_0) ≠ 1_0A".to_string()),
            "{report:?}"
        );
    }

    #[test]
    fn conjugation_validates() {
        for s in [
            symmetric_inverse_monoid(2).unwrap(),
            chain_semilattice(3).unwrap(),
            cyclic_group(3).unwrap(),
        ] {
            let act = conjugation_action(&s, Rationals);
            assert!(
                validate_action(&act).passed(),
                "{:?}",
                validate_action(&act)
            );
        }
    }

    #[test]
    fn trivial_actions_validate() {
        let k = diagonal_algebra(Rationals, 1);
        let m2 = matrix_algebra(Rationals, 2);
        for s in [
            trivial_monoid(),
            cyclic_group(2).unwrap(),
            direct_product(&chain_semilattice(2).unwrap(), &cyclic_group(2).unwrap()),
        ] {
            for a in [&k, &m2] {
                let act = trivial_action(&s, a);
                assert!(validate_action(&act).passed());
                assert!(is_compatible(&act));
            }
        }
    }

    #[test]
    fn swap_on_kxk_is_an_action_of_z2() {
        let z2 = cyclic_group(2).unwrap();
        let a = diagonal_algebra(Rationals, 2);
        let swap = Matrix::from_i64(Rationals, 2, 2, &[0, 1, 1, 0]).unwrap();
        let act = UnitalAction::new(
            &z2,
            &a,
            vec![q(&[1, 1]); 2],
            vec![Matrix::identity(Rationals, 2), swap],
        );
        assert!(act.is_ok());
        // swapping while projecting is not an action of I(1)
        let i1 = symmetric_inverse_monoid(1).unwrap();
        let sp = Matrix::from_i64(Rationals, 2, 2, &[0, 0, 1, 0]).unwrap();
        let bad = UnitalAction::new(
            &i1,
            &a,
            vec![q(&[1, 0]), q(&[1, 1])],
            vec![sp, Matrix::identity(Rationals, 2)],
        );
        assert!(matches!(bad, Err(Error::ActionInvalid(_))));
    }
}
