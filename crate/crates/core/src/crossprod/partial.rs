use std::collections::BTreeMap;

use rayon::prelude::*;

use super::action::{is_compatible, UnitalAction};
use super::algebra::{idempotent_algebra, semigroup_algebra, Algebra};
use super::crossed::CrossedProduct;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::invmon::InverseMonoid;
use crate::monhom::Summand;

/// Above this many distinct idempotents the unit of their ideal sum is
/// accumulated pairwise instead of by inclusion–exclusion.
const INCLUSION_EXCLUSION_LIMIT: usize = 16;

/// A partial action of a finite group on an algebra: domains `D_g = e_gA`
/// and total matrices for `θ_g`, zero off `D_{g⁻¹}`.
#[derive(Clone, Debug)]
pub struct PartialGroupAction<F: Field> {
    group: InverseMonoid,
    algebra: Algebra<F>,
    domains: Vec<Vec<F::Elem>>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> PartialGroupAction<F> {
    pub fn new(
        group: &InverseMonoid,
        algebra: &Algebra<F>,
        domains: Vec<Vec<F::Elem>>,
        maps: Vec<Matrix<F>>,
    ) -> Result<Self> {
        if !group.is_group() {
            return Err(Error::NotAGroup("partial actions need a group".into()));
        }
        let d = algebra.dim();
        if domains.len() != group.size()
            || maps.len() != group.size()
            || domains.iter().any(|e| e.len() != d)
            || maps.iter().any(|m| m.rows() != d || m.cols() != d)
        {
            return Err(Error::Shape(
                "partial action data does not match group and algebra".into(),
            ));
        }
        let p = PartialGroupAction {
            group: group.clone(),
            algebra: algebra.clone(),
            domains,
            maps,
        };
        match p.failures().into_iter().next() {
            Some(msg) => Err(Error::PartialActionInvalid(msg)),
            None => Ok(p),
        }
    }

    /// Every violated axiom, with witnesses.
    pub fn failures(&self) -> Vec<String> {
        let g = &self.group;
        let alg = &self.algebra;
        let mut out = Vec::new();
        let unit = g.unit();
        let proj: Vec<Matrix<F>> = self.domains.iter().map(|e| alg.left_mult(e)).collect();
        for x in 0..g.size() {
            if !alg.is_idempotent(&self.domains[x]) || !alg.is_central(&self.domains[x]) {
                out.push(format!("e_{x} is not a central idempotent"));
            }
        }
        if self.domains[unit] != alg.unit() || !self.maps[unit].is_identity() {
            out.push("D_1 ≠ A or θ_1 ≠ id".into());
        }
        for x in 0..g.size() {
            let (m, xi) = (&self.maps[x], g.inv(x));
            if proj[x].mul(m) != *m || m.mul(&proj[xi]) != *m || self.maps[xi].mul(m) != proj[xi] {
                out.push(format!(
                    "θ_{x} is not a bijection D_{{{xi}}} → D_{x} inverse to θ_{{{xi}}}"
                ));
            }
            let images = m.columns();
            'pairs: for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    if m.mul_vec(&alg.mul(&alg.basis(i), &alg.basis(j)))
                        != alg.mul(&images[i], &images[j])
                    {
                        out.push(format!("θ_{x} is not multiplicative at ({i},{j})"));
                        break 'pairs;
                    }
                }
            }
            for y in 0..g.size() {
                let xy = g.mul(x, y);
                let lhs = m.mul_vec(&alg.mul(&self.domains[xi], &self.domains[y]));
                if lhs != alg.mul(&self.domains[x], &self.domains[xy]) {
                    out.push(format!("θ_{x}(D_{{{xi}}} ∩ D_{y}) ≠ D_{x} ∩ D_{{{xy}}}"));
                }
                let e = proj[g.inv(y)].mul(&proj[g.inv(xy)]);
                if m.mul(&self.maps[y]).mul(&e) != self.maps[xy].mul(&e) {
                    out.push(format!(
                        "θ_{x}θ_{y} ≠ θ_{{{xy}}} on D_{{{}}} ∩ D_{{{}}}",
                        g.inv(y),
                        g.inv(xy)
                    ));
                }
            }
        }
        out
    }

    pub fn group(&self) -> &InverseMonoid {
        &self.group
    }
    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn domain(&self, g: usize) -> &[F::Elem] {
        &self.domains[g]
    }
    pub fn map(&self, g: usize) -> &Matrix<F> {
        &self.maps[g]
    }
}

/// Unit of the ideal `Σ e_iA` generated by commuting central idempotents.
pub fn ideal_sum_unit<F: Field>(alg: &Algebra<F>, gens: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let f = alg.field();
    let mut distinct: Vec<&Vec<F::Elem>> = Vec::new();
    for e in gens {
        if !distinct.contains(&e) {
            distinct.push(e);
        }
    }
    let zero = vec![f.zero(); alg.dim()];
    if distinct.len() > INCLUSION_EXCLUSION_LIMIT {
        return distinct.iter().fold(zero, |u, e| {
            let ue = alg.mul(&u, e);
            u.iter()
                .zip(e.iter())
                .zip(&ue)
                .map(|((a, b), c)| f.sub(&f.add(a, b), c))
                .collect()
        });
    }
    // Σ_{J ≠ ∅} (−1)^{|J|+1} Π_{j ∈ J} e_j, products built up along the subset lattice
    let k = distinct.len();
    let mut prods: Vec<Vec<F::Elem>> = Vec::with_capacity(1 << k);
    prods.push(alg.unit().to_vec());
    let mut total = zero;
    for mask in 1usize..(1 << k) {
        let low = mask.trailing_zeros() as usize;
        let p = alg.mul(&prods[mask & (mask - 1)], distinct[low]);
        let odd = mask.count_ones() % 2 == 1;
        for (t, x) in total.iter_mut().zip(&p) {
            *t = if odd { f.add(t, x) } else { f.sub(t, x) };
        }
        prods.push(p);
    }
    total
}

/// `θ̃` of the maximum group image on `A`, for a compatible action.
pub fn induced_partial_action<F: Field>(a: &UnitalAction<F>) -> Result<PartialGroupAction<F>> {
    if !is_compatible(a) {
        return Err(Error::NotCompatible);
    }
    let s = a.monoid();
    let alg = a.algebra();
    let f = alg.field();
    let image = s.max_group_image()?;
    let classes = image.group.size();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for x in 0..s.size() {
        members[image.proj[x]].push(x);
    }
    let domains: Vec<Vec<F::Elem>> = members
        .iter()
        .map(|m| {
            ideal_sum_unit(
                alg,
                &m.iter().map(|&x| a.one(x).to_vec()).collect::<Vec<_>>(),
            )
        })
        .collect();
    // θ̃_g(a) = Σ_k θ_{s_k}(a c_k) with c_k = Π_{i<k}(1 − f_i) f_k, f_k = 1_{s_k⁻¹}
    let maps: Vec<Matrix<F>> = members
        .par_iter()
        .map(|m| {
            let mut acc = Matrix::zeros(f.clone(), alg.dim(), alg.dim());
            let mut rest = alg.unit().to_vec();
            for &x in m {
                let fk = a.one(s.inv(x));
                let ck = alg.mul(&rest, fk);
                acc = acc.add(&a.theta(x).mul(&alg.left_mult(&ck)));
                rest = rest.iter().zip(&ck).map(|(p, q)| f.sub(p, q)).collect();
            }
            acc
        })
        .collect();
    PartialGroupAction::new(&image.group, alg, domains, maps)
}

/// `A ⋊ G = ⊕_g D_gδ_g` with `aδ_x · bδ_y = θ_x(θ_{x⁻¹}(a)b)δ_{xy}`.
#[derive(Clone, Debug)]
pub struct SkewGroupAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    domains: Vec<Summand<F>>,
    offsets: Vec<usize>,
}

impl<F: Field> SkewGroupAlgebra<F> {
    /// `aδ_g`, or `None` if `a ∉ D_g`.
    pub fn element(&self, g: usize, a: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let d = &self.domains[g];
        if d.projector.mul_vec(a) != a {
            return None;
        }
        let f = self.algebra.field();
        let mut v = vec![f.zero(); self.algebra.dim()];
        for (k, c) in d.coords.mul_vec(a).into_iter().enumerate() {
            v[self.offsets[g] + k] = c;
        }
        Some(v)
    }

    pub fn domain_dims(&self) -> Vec<usize> {
        self.domains.iter().map(Summand::dim).collect()
    }
}

pub fn skew_group_algebra<F: Field>(p: &PartialGroupAction<F>) -> Result<SkewGroupAlgebra<F>> {
    let g = &p.group;
    let alg = &p.algebra;
    let f = alg.field().clone();
    let domains: Vec<Summand<F>> = p
        .domains
        .iter()
        .map(|e| Summand::new(alg.left_mult(e)))
        .collect();
    let mut offsets = Vec::new();
    let mut basis = Vec::new();
    for (x, d) in domains.iter().enumerate() {
        offsets.push(basis.len());
        basis.extend((0..d.dim()).map(|j| (x, j)));
    }
    let dim = basis.len();
    let products: Vec<Vec<(usize, F::Elem)>> = (0..dim * dim)
        .into_par_iter()
        .map(|q| {
            let ((x, i), (y, j)) = (basis[q / dim], basis[q % dim]);
            let av = domains[x].basis.column(i);
            let bv = domains[y].basis.column(j);
            let inner = alg.mul(&p.maps[g.inv(x)].mul_vec(&av), &bv);
            let c = p.maps[x].mul_vec(&inner);
            let xy = g.mul(x, y);
            let d = &domains[xy];
            if d.projector.mul_vec(&c) != c {
                return Err(Error::PartialActionInvalid(format!(
                    "product of ({x},{i}) and ({y},{j}) leaves D_{xy}"
                )));
            }
            Ok(d.coords
                .mul_vec(&c)
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !f.is_zero(v))
                .map(|(k, v)| (offsets[xy] + k, v))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut sk = SkewGroupAlgebra {
        algebra: Algebra::trusted(f.clone(), dim, Vec::new(), Vec::new()),
        domains,
        offsets,
    };
    let unit = sk.element(g.unit(), alg.unit()).expect("D_1 = A");
    sk.algebra = Algebra::from_products(f, dim, products, unit)?;
    Ok(sk)
}

/// Verdicts for `Φ : A ⋊_θ S → A ⋊_θ̃ 𝒢(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub kills_n: bool,
    pub homomorphism: bool,
    pub surjective: bool,
    pub bimodule_map: bool,
    pub bijective: bool,
    pub e_unitary: bool,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.kills_n
            && self.homomorphism
            && self.surjective
            && self.bimodule_map
            && (!self.e_unitary || self.bijective)
    }
}

/// The matrix of `Φ(aδ_s + 𝒩) = aδ_{[s]}` with its report.
pub fn phi_map<F: Field>(c: &CrossedProduct<F>) -> Result<(Matrix<F>, PhiReport)> {
    let a = c.action();
    let s = a.monoid();
    let alg = a.algebra();
    let f = alg.field();
    let p = induced_partial_action(a)?;
    let image = s.max_group_image()?;
    let sk = skew_group_algebra(&p)?;
    let cols: Vec<Vec<F::Elem>> = c
        .l_basis()
        .iter()
        .map(|&(x, j)| {
            sk.element(image.proj[x], &c.ideal_basis(x).column(j))
                .ok_or_else(|| Error::PartialActionInvalid(format!("1_{x}A is not inside D_[{x}]")))
        })
        .collect::<Result<_>>()?;
    let phi_l = Matrix::from_columns(f.clone(), sk.algebra.dim(), &cols);
    let kills_n = phi_l.mul(c.n_generators()).is_zero();
    let phi = phi_l.mul(&c.n_space().section);
    let q = c.algebra();
    let homomorphism = q.is_homomorphism(&sk.algebra, &phi);
    let rank = phi.rank();
    let surjective = rank == sk.algebra.dim();
    let bijective = surjective && rank == q.dim();
    let embed = c.embed_a();
    let bimodule_map = (0..alg.dim()).all(|i| {
        let ea = embed.column(i);
        let sa = sk
            .element(image.group.unit(), &alg.basis(i))
            .expect("D_1 = A");
        (0..q.dim()).all(|k| {
            let x = q.basis(k);
            let px = phi.mul_vec(&x);
            phi.mul_vec(&q.mul(&ea, &x)) == sk.algebra.mul(&sa, &px)
                && phi.mul_vec(&q.mul(&x, &ea)) == sk.algebra.mul(&px, &sa)
        })
    });
    let report = PhiReport {
        kills_n,
        homomorphism,
        surjective,
        bimodule_map,
        bijective,
        e_unitary: s.is_e_unitary(),
        source_dim: q.dim(),
        target_dim: sk.algebra.dim(),
    };
    Ok((phi, report))
}

/// Verdicts for `φ : KS → KE(S) ⋊_τ̃ 𝒢(S)`, `φ(s) = ss⁻¹δ_{[s]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsReport {
    pub ks_dim: usize,
    pub domain_dims: Vec<usize>,
    pub bijective: bool,
    pub homomorphism: bool,
    pub bimodule_map: bool,
}

impl KsReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.homomorphism && self.bimodule_map
    }
}

/// Builds `τ̃` on `KE(S)`, the skew group algebra and `φ`, and checks that
/// `φ` is a bijective algebra map and a `KE(S)`-bimodule map.
pub fn ks_as_crossed_product<F: Field>(s: &InverseMonoid, field: F) -> Result<KsReport> {
    if !s.is_e_unitary() {
        return Err(Error::NotEUnitary);
    }
    let ke = idempotent_algebra(field.clone(), s);
    let ks = semigroup_algebra(field.clone(), s);
    let idem = s.idempotents();
    let pos: BTreeMap<usize, usize> = idem.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let unit_vec = |e: usize| ke.basis(pos[&e]);
    let image = s.max_group_image()?;
    let g = &image.group;
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); g.size()];
    for x in 0..s.size() {
        members[image.proj[x]].push(x);
    }
    let domains: Vec<Vec<F::Elem>> = members
        .iter()
        .map(|m| {
            ideal_sum_unit(
                &ke,
                &m.iter().map(|&x| unit_vec(s.r(x))).collect::<Vec<_>>(),
            )
        })
        .collect();
    let mut maps = Vec::with_capacity(g.size());
    for (cls, m) in members.iter().enumerate() {
        let mut t = Matrix::zeros(field.clone(), ke.dim(), ke.dim());
        let mut seen = BTreeMap::new();
        for &x in m {
            let (d, r) = (pos[&s.d(x)], pos[&s.r(x)]);
            if *seen.entry(d).or_insert(r) != r {
                return Err(Error::PartialActionInvalid(format!(
                    "class {cls} sends the domain {} to two ranges",
                    s.d(x)
                )));
            }
            t.set(r, d, field.one());
        }
        maps.push(t.mul(&ke.left_mult(&domains[g.inv(cls)])));
    }
    let p = PartialGroupAction::new(g, &ke, domains, maps)?;
    let sk = skew_group_algebra(&p)?;
    let cols: Vec<Vec<F::Elem>> = (0..s.size())
        .map(|x| {
            sk.element(image.proj[x], &unit_vec(s.r(x)))
                .ok_or_else(|| Error::PartialActionInvalid(format!("r({x}) is not in D_[{x}]")))
        })
        .collect::<Result<_>>()?;
    let phi = Matrix::from_columns(field.clone(), sk.algebra.dim(), &cols);
    let rank = phi.rank();
    let bijective = rank == ks.dim() && rank == sk.algebra.dim();
    let homomorphism = ks.is_homomorphism(&sk.algebra, &phi);
    let bimodule_map = idem.iter().all(|&e| {
        let se = sk.element(g.unit(), &unit_vec(e)).expect("D_1 = KE(S)");
        (0..s.size()).all(|x| {
            let px = phi.column(x);
            phi.column(s.mul(e, x)) == sk.algebra.mul(&se, &px)
                && phi.column(s.mul(x, e)) == sk.algebra.mul(&px, &se)
        })
    });
    Ok(KsReport {
        ks_dim: ks.dim(),
        domain_dims: sk.domain_dims(),
        bijective,
        homomorphism,
        bimodule_map,
    })
}
