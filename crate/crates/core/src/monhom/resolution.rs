use super::complex::DEFAULT_CAP_COLUMNS;
use crate::error::{Error, Result};
use crate::exactla::SparseMatrix;
use crate::field::Field;
use crate::invmon::InverseMonoid;

/// The free resolution `P_n → KE(S)` with its contracting homotopy, in
/// degrees `0..=max_degree + 1`.
///
/// `P_n` has basis `t(s_1,…,s_n)` with `d(t) ≤ r(s_1⋯s_n)`; an arbitrary
/// `x(s_1,…,s_n)` stands for `x·r(s_1⋯s_n)(s_1,…,s_n)`.
#[derive(Clone, Debug)]
pub struct ResolutionComplex<F: Field> {
    pub max_degree: usize,
    /// Idempotents of `S`, the basis of `KE(S)`.
    pub ke_basis: Vec<usize>,
    /// `bases[n]` lists `(t, tuple)` for `P_n`.
    pub bases: Vec<Vec<(usize, Vec<usize>)>>,
    /// `boundary[n] = ∂_n : P_n → P_{n-1}`, with `P_{-1} = KE(S)`.
    pub boundary: Vec<SparseMatrix<F>>,
    /// `homotopy[n] = σ_{n-1} : P_{n-1} → P_n`.
    pub homotopy: Vec<SparseMatrix<F>>,
}

struct Level {
    tuples: usize,
    pos: Vec<usize>,
    basis: Vec<(usize, usize)>,
}

pub fn build_resolution<F: Field>(
    s: &InverseMonoid,
    field: F,
    max_deg: usize,
) -> Result<ResolutionComplex<F>> {
    build_resolution_capped(s, field, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn build_resolution_capped<F: Field>(
    s: &InverseMonoid,
    field: F,
    max_deg: usize,
    cap: usize,
) -> Result<ResolutionComplex<F>> {
    let size = s.size();
    let top = max_deg + 1;
    let need = (size as u128)
        .checked_pow(top as u32 + 1)
        .unwrap_or(u128::MAX);
    if need > cap as u128 {
        return Err(Error::SizeCap {
            what: "resolution size |S|^(n+2)".into(),
            size: need,
            cap: cap as u128,
        });
    }
    let mut prods: Vec<Vec<usize>> = vec![vec![s.unit()]];
    let mut levels = Vec::new();
    for n in 0..=top {
        let tuples = size.pow(n as u32);
        if n > 0 {
            let prev = &prods[n - 1];
            prods.push(
                (0..tuples)
                    .map(|i| s.mul(prev[i / size], i % size))
                    .collect(),
            );
        }
        let mut pos = vec![usize::MAX; tuples * size];
        let mut basis = Vec::new();
        for (tau, &p) in prods[n].iter().enumerate() {
            let rp = s.r(p);
            for t in 0..size {
                if s.mul(s.d(t), rp) == s.d(t) {
                    pos[tau * size + t] = basis.len();
                    basis.push((t, tau));
                }
            }
        }
        levels.push(Level { tuples, pos, basis });
    }
    // the basis element x(τ) of P_n
    let norm = |n: usize, x: usize, tau: usize| {
        let p = levels[n].pos[tau * size + s.mul(x, s.r(prods[n][tau]))];
        debug_assert!(p != usize::MAX);
        p
    };
    let ke_basis = s.idempotents().to_vec();
    let mut ke_pos = vec![usize::MAX; size];
    for (i, &e) in ke_basis.iter().enumerate() {
        ke_pos[e] = i;
    }
    let one = field.one();
    let minus = field.neg(&one);
    let sign = |neg: bool| if neg { minus.clone() } else { one.clone() };

    let mut boundary = Vec::with_capacity(top + 1);
    let d0 = levels[0]
        .basis
        .iter()
        .enumerate()
        .map(|(j, &(t, _))| (ke_pos[s.r(t)], j, one.clone()));
    boundary.push(SparseMatrix::from_triplets(
        field.clone(),
        ke_basis.len(),
        levels[0].basis.len(),
        d0,
    )?);
    for n in 1..=top {
        let mut trip = Vec::new();
        for (j, &(t, tau)) in levels[n].basis.iter().enumerate() {
            let u = digits(tau, size, n);
            trip.push((
                norm(n - 1, s.mul(t, u[0]), index_of(&u[1..], size)),
                j,
                one.clone(),
            ));
            for i in 1..n {
                let mut w = u.clone();
                w[i - 1] = s.mul(u[i - 1], u[i]);
                w.remove(i);
                trip.push((norm(n - 1, t, index_of(&w, size)), j, sign(i % 2 == 1)));
            }
            trip.push((norm(n - 1, t, tau / size), j, sign(n % 2 == 1)));
        }
        boundary.push(SparseMatrix::from_triplets(
            field.clone(),
            levels[n - 1].basis.len(),
            levels[n].basis.len(),
            trip,
        )?);
    }

    let mut homotopy = Vec::with_capacity(top + 1);
    let h0 = ke_basis
        .iter()
        .enumerate()
        .map(|(j, &e)| (norm(0, e, 0), j, one.clone()));
    homotopy.push(SparseMatrix::from_triplets(
        field.clone(),
        levels[0].basis.len(),
        ke_basis.len(),
        h0,
    )?);
    for n in 1..=top {
        let shift = levels[n - 1].tuples;
        let trip = levels[n - 1]
            .basis
            .iter()
            .enumerate()
            .map(|(j, &(t, tau))| (norm(n, s.unit(), t * shift + tau), j, one.clone()));
        homotopy.push(SparseMatrix::from_triplets(
            field.clone(),
            levels[n].basis.len(),
            levels[n - 1].basis.len(),
            trip,
        )?);
    }

    let bases = levels
        .iter()
        .enumerate()
        .map(|(n, l)| {
            l.basis
                .iter()
                .map(|&(t, tau)| (t, digits(tau, size, n)))
                .collect()
        })
        .collect();
    Ok(ResolutionComplex {
        max_degree: max_deg,
        ke_basis,
        bases,
        boundary,
        homotopy,
    })
}

fn digits(mut idx: usize, size: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % size;
        idx /= size;
    }
    out
}

fn index_of(tuple: &[usize], size: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * size + x)
}

impl<F: Field> ResolutionComplex<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// `∂_n ∂_{n+1} = 0` for `n = 0..=max_degree`.
    pub fn is_complex(&self) -> bool {
        (0..=self.max_degree).all(|n| self.boundary[n].mul(&self.boundary[n + 1]).is_zero())
    }

    /// `∂_0σ_{-1} = id` and `∂_{n+1}σ_n + σ_{n-1}∂_n = id` on `P_n` for
    /// `n = 0..=max_degree`; one verdict per identity, starting with `∂_0σ_{-1}`.
    pub fn homotopy_identities(&self) -> Vec<bool> {
        let f = self.boundary[0].field().clone();
        let mut out = Vec::with_capacity(self.max_degree + 2);
        let id = SparseMatrix::identity(f.clone(), self.ke_basis.len());
        out.push(self.boundary[0].mul(&self.homotopy[0]) == id);
        for n in 0..=self.max_degree {
            let lhs = self.boundary[n + 1]
                .mul(&self.homotopy[n + 1])
                .add(&self.homotopy[n].mul(&self.boundary[n]));
            out.push(lhs == SparseMatrix::identity(f.clone(), self.bases[n].len()));
        }
        out
    }
}
