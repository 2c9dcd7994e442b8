use rayon::prelude::*;

use super::action::{validate_action, UnitalAction};
use super::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, QuotientSpace};
use crate::field::Field;
use crate::monhom::Summand;

/// `A ⋊_θ S = L(A, θ, S) / 𝒩`.
///
/// `L = ⊕_s 1_sAδ_s` has basis `(s, j)`, with `j` running over the pivot
/// basis of `1_sA`; the quotient has basis the section vectors of `𝒩`.
#[derive(Clone, Debug)]
pub struct CrossedProduct<F: Field> {
    action: UnitalAction<F>,
    ideals: Vec<Summand<F>>,
    offsets: Vec<usize>,
    l_basis: Vec<(usize, usize)>,
    l_algebra: Algebra<F>,
    n_generators: Matrix<F>,
    n_space: QuotientSpace<F>,
    algebra: Algebra<F>,
    embed_a: Matrix<F>,
    gamma: Vec<Vec<F::Elem>>,
}

/// Builds the crossed product of a validated action and checks that the
/// induced multiplication is well defined, `A` embeds, and `Γ` is multiplicative.
pub fn crossed_product<F: Field>(a: &UnitalAction<F>) -> Result<CrossedProduct<F>> {
    let report = validate_action(a);
    if let Some(msg) = report.failures.first() {
        return Err(Error::ActionInvalid(msg.clone()));
    }
    let s = a.monoid();
    let alg = a.algebra();
    let f = alg.field().clone();
    let n = s.size();
    let ideals: Vec<Summand<F>> = (0..n)
        .into_par_iter()
        .map(|x| Summand::new(a.ideal_projector(x)))
        .collect();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut l_basis = Vec::new();
    for (x, ideal) in ideals.iter().enumerate() {
        offsets.push(l_basis.len());
        l_basis.extend((0..ideal.dim()).map(|j| (x, j)));
    }
    offsets.push(l_basis.len());
    let l_dim = l_basis.len();

    // (aδ_s)(bδ_t) = a θ_s(1_{s⁻¹}b) δ_{st}
    let products: Vec<Vec<(usize, F::Elem)>> = (0..l_dim * l_dim)
        .into_par_iter()
        .map(|p| {
            let ((x, i), (y, j)) = (l_basis[p / l_dim], l_basis[p % l_dim]);
            let av = ideals[x].basis.column(i);
            let bv = a.theta(x).mul_vec(&ideals[y].basis.column(j));
            let c = alg.mul(&av, &bv);
            let xy = s.mul(x, y);
            coords_in(&ideals[xy], &c, offsets[xy]).ok_or_else(|| {
                Error::IllDefined(format!("product of ({x},{i}) and ({y},{j}) leaves 1_{xy}A"))
            })
        })
        .collect::<Result<_>>()?;
    let mut l_unit = vec![f.zero(); l_dim];
    for (k, c) in coords_in(&ideals[s.unit()], alg.unit(), offsets[s.unit()]).expect("1_1 = 1_A") {
        l_unit[k] = c;
    }
    let l_algebra = Algebra::trusted(f.clone(), l_dim, products, l_unit.clone());

    // 𝒩 = span{aδ_s − aδ_t : s ≤ t, a in the basis of 1_sA}
    let mut gens: Vec<Vec<F::Elem>> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y || !s.natural_leq(x, y) {
                continue;
            }
            for j in 0..ideals[x].dim() {
                let av = ideals[x].basis.column(j);
                let mut v = vec![f.zero(); l_dim];
                v[offsets[x] + j] = f.one();
                let inner = coords_in(&ideals[y], &av, offsets[y])
                    .ok_or_else(|| Error::IllDefined(format!("1_{x}A is not inside 1_{y}A")))?;
                for (k, c) in inner {
                    v[k] = f.sub(&v[k], &c);
                }
                gens.push(v);
            }
        }
    }
    let n_generators = Matrix::from_columns(f.clone(), l_dim, &gens);
    let n_space = QuotientSpace::new(l_dim, &n_generators)?;

    // 𝒩 must be a two-sided ideal for the quotient product to be defined.
    let nb: Vec<Vec<(usize, F::Elem)>> = n_space
        .subspace_basis
        .columns()
        .into_iter()
        .map(|v| sparse(&f, v))
        .collect();
    let proj = &n_space.projection;
    let in_n = |terms: &mut dyn Iterator<Item = (usize, F::Elem)>| {
        let mut acc = vec![f.zero(); proj.rows()];
        for (k, c) in terms {
            for (r, a) in acc.iter_mut().enumerate() {
                f.add_mul_assign(a, proj.get(r, k), &c);
            }
        }
        acc.iter().all(|x| f.is_zero(x))
    };
    let not_ideal = nb.par_iter().enumerate().find_map_any(|(g, v)| {
        (0..l_dim).find_map(|k| {
            let scaled = |list: &[(usize, F::Elem)], c: &F::Elem| {
                list.iter()
                    .map(|(i, x)| (*i, f.mul(c, x)))
                    .collect::<Vec<_>>()
            };
            let mut left = v
                .iter()
                .flat_map(|(i, c)| scaled(l_algebra.basis_product(k, *i), c));
            let mut right = v
                .iter()
                .flat_map(|(i, c)| scaled(l_algebra.basis_product(*i, k), c));
            let ok = in_n(&mut left) && in_n(&mut right);
            (!ok).then(|| format!("𝒩 basis vector {g} times L basis vector {k} leaves 𝒩"))
        })
    });
    if let Some(msg) = not_ideal {
        return Err(Error::IllDefined(msg));
    }

    let q_dim = n_space.dim();
    let reps: Vec<usize> = (0..q_dim)
        .map(|i| {
            (0..l_dim)
                .find(|&k| f.is_one(n_space.section.get(k, i)))
                .expect("section columns are unit vectors")
        })
        .collect();
    let q_products: Vec<Vec<(usize, F::Elem)>> = (0..q_dim * q_dim)
        .into_par_iter()
        .map(|p| {
            let prod = l_algebra.basis_product(reps[p / q_dim], reps[p % q_dim]);
            let mut dense = vec![f.zero(); l_dim];
            for (k, c) in prod {
                dense[*k] = c.clone();
            }
            sparse(&f, n_space.project(&dense))
        })
        .collect();
    let algebra = Algebra::from_products(f.clone(), q_dim, q_products, n_space.project(&l_unit))
        .map_err(|e| Error::IllDefined(format!("quotient algebra: {e}")))?;

    let unit_block = s.unit();
    let embed_cols: Vec<Vec<F::Elem>> = (0..alg.dim())
        .map(|i| {
            n_space.project(
                &l_vector(&ideals, &offsets, l_dim, &f, unit_block, &alg.basis(i))
                    .expect("1_1A = A"),
            )
        })
        .collect();
    let embed_a = Matrix::from_columns(f.clone(), q_dim, &embed_cols);
    if embed_a.rank() != alg.dim() || !alg.is_homomorphism(&algebra, &embed_a) {
        return Err(Error::IllDefined(
            "A → A⋊S is not an injective algebra homomorphism".into(),
        ));
    }
    let gamma: Vec<Vec<F::Elem>> = (0..n)
        .map(|x| {
            n_space
                .project(&l_vector(&ideals, &offsets, l_dim, &f, x, a.one(x)).expect("1_s ∈ 1_sA"))
        })
        .collect();
    for x in 0..n {
        for y in 0..n {
            if algebra.mul(&gamma[x], &gamma[y]) != gamma[s.mul(x, y)] {
                return Err(Error::IllDefined(format!("Γ(s)Γ(t) ≠ Γ(st) at ({x},{y})")));
            }
        }
    }
    Ok(CrossedProduct {
        action: a.clone(),
        ideals,
        offsets,
        l_basis,
        l_algebra,
        n_generators,
        n_space,
        algebra,
        embed_a,
        gamma,
    })
}

/// The σ-class sum test for membership in `𝒩`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ClassSumReport {
    /// Every element of `𝒩` has zero coefficient sum over each σ-class.
    pub n_in_kernel: bool,
    /// Dimension of the kernel of the class-sum map on `L`.
    pub kernel_dim: usize,
    pub n_dim: usize,
    pub e_unitary: bool,
}

impl ClassSumReport {
    /// Zero class sums characterize `𝒩`.
    pub fn converse_holds(&self) -> bool {
        self.n_in_kernel && self.kernel_dim == self.n_dim
    }
    pub fn passed(&self) -> bool {
        self.n_in_kernel && (!self.e_unitary || self.converse_holds())
    }
}

/// Compares `𝒩` with the kernel of the σ-class sum map.
pub fn class_sum_criterion<F: Field>(c: &CrossedProduct<F>) -> Result<ClassSumReport> {
    let s = c.action().monoid();
    let gi = s.max_group_image()?;
    let sigma = c.class_sum_matrix(&gi.proj, gi.group.size());
    Ok(ClassSumReport {
        n_in_kernel: sigma.mul(c.n_generators()).is_zero(),
        kernel_dim: c.l_dim() - sigma.rank(),
        n_dim: c.n_dim(),
        e_unitary: s.is_e_unitary(),
    })
}

/// Coordinates of `c ∈ ideal` shifted by `offset`, or `None` if `c` is outside.
fn coords_in<F: Field>(
    ideal: &Summand<F>,
    c: &[F::Elem],
    offset: usize,
) -> Option<Vec<(usize, F::Elem)>> {
    if ideal.projector.mul_vec(c) != c {
        return None;
    }
    let f = ideal.projector.field();
    Some(
        ideal
            .coords
            .mul_vec(c)
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(k, x)| (offset + k, x))
            .collect(),
    )
}

fn l_vector<F: Field>(
    ideals: &[Summand<F>],
    offsets: &[usize],
    l_dim: usize,
    f: &F,
    s: usize,
    a: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let mut v = vec![f.zero(); l_dim];
    for (k, c) in coords_in(&ideals[s], a, offsets[s])? {
        v[k] = c;
    }
    Some(v)
}

fn sparse<F: Field>(f: &F, v: Vec<F::Elem>) -> Vec<(usize, F::Elem)> {
    v.into_iter()
        .enumerate()
        .filter(|(_, x)| !f.is_zero(x))
        .collect()
}

impl<F: Field> CrossedProduct<F> {
    pub fn action(&self) -> &UnitalAction<F> {
        &self.action
    }
    /// The quotient algebra `A ⋊_θ S`.
    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    /// `L(A, θ, S)` before the quotient.
    pub fn l_algebra(&self) -> &Algebra<F> {
        &self.l_algebra
    }
    pub fn l_basis(&self) -> &[(usize, usize)] {
        &self.l_basis
    }
    pub fn l_dim(&self) -> usize {
        self.l_basis.len()
    }
    pub fn n_space(&self) -> &QuotientSpace<F> {
        &self.n_space
    }
    /// The spanning set of `𝒩`, one column per generator.
    pub fn n_generators(&self) -> &Matrix<F> {
        &self.n_generators
    }
    pub fn n_dim(&self) -> usize {
        self.n_space.subspace_basis.cols()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    /// `a ↦ aδ_1 + 𝒩`.
    pub fn embed_a(&self) -> &Matrix<F> {
        &self.embed_a
    }
    /// `Γ(s) = 1_sδ_s + 𝒩`.
    pub fn gamma(&self, s: usize) -> &[F::Elem] {
        &self.gamma[s]
    }
    /// Basis of the ideal `1_sA` (columns, as vectors of `A`).
    pub fn ideal_basis(&self, s: usize) -> &Matrix<F> {
        &self.ideals[s].basis
    }
    pub fn block_offset(&self, s: usize) -> usize {
        self.offsets[s]
    }

    /// `aδ_s` in `L`, or `None` if `a ∉ 1_sA`.
    pub fn l_element(&self, s: usize, a: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.algebra.field();
        l_vector(&self.ideals, &self.offsets, self.l_dim(), f, s, a)
    }

    /// Class of an element of `L` in the quotient.
    pub fn project(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.n_space.project(x)
    }

    /// `Σ : L → A^{𝒢(S)}`, summing the coefficients of each σ-class; rows are
    /// grouped by class, `dim A` rows per class.
    pub fn class_sum_matrix(&self, proj: &[usize], classes: usize) -> Matrix<F> {
        let alg = self.action.algebra();
        let d = alg.dim();
        let f = alg.field();
        let mut m = Matrix::zeros(f.clone(), classes * d, self.l_dim());
        for (col, &(s, j)) in self.l_basis.iter().enumerate() {
            let g = proj[s];
            for r in 0..d {
                m.set(g * d + r, col, self.ideals[s].basis.get(r, j).clone());
            }
        }
        m
    }
}
