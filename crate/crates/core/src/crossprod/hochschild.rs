use rayon::prelude::*;

use super::algebra::Algebra;
use super::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, SparseMatrix};
use crate::field::Field;
use crate::monhom::{ChainComplexData, Direction, DEFAULT_CAP_COLUMNS};

fn degree_dim(dim_m: usize, dim_a: usize, n: usize, cap: usize) -> Result<usize> {
    let size = (dim_a as u128)
        .checked_pow(n as u32)
        .and_then(|p| p.checked_mul(dim_m as u128))
        .unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::SizeCap {
            what: format!("Hochschild degree {n}"),
            size,
            cap: cap as u128,
        });
    }
    Ok(size as usize)
}

fn digits(mut idx: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % base;
        idx /= base;
    }
    out
}

fn index_of(tuple: &[usize], base: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * base + x)
}

fn check_over<F: Field>(a: &Algebra<F>, m: &Bimodule<F>) -> Result<()> {
    if *m.algebra() != *a {
        return Err(Error::BimoduleAxioms(
            "bimodule is over a different algebra".into(),
        ));
    }
    Ok(())
}

/// The complex `C_n = M ⊗ A^{⊗n}` with
/// `b(m⊗a_1⊗…⊗a_n) = ma_1⊗a_2⊗… + Σ(−1)^i m⊗…⊗a_ia_{i+1}⊗… + (−1)^n a_nm⊗a_1⊗…⊗a_{n−1}`,
/// in degrees `0..=top`. Basis `(x, a_1, …, a_n)` at `x·dim(A)^n + index(a)`.
pub fn hochschild_chain_complex<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    top: usize,
    cap: usize,
) -> Result<ChainComplexData<F>> {
    check_over(a, m)?;
    let f = a.field().clone();
    let (da, dm) = (a.dim(), m.dim());
    let dims: Vec<usize> = (0..=top)
        .map(|n| degree_dim(dm, da, n, cap))
        .collect::<Result<_>>()?;
    let mut maps = Vec::with_capacity(top);
    for n in 1..=top {
        let width = da.pow(n as u32);
        let low = da.pow(n as u32 - 1);
        let columns: Vec<Vec<(usize, F::Elem)>> = (0..dims[n])
            .into_par_iter()
            .map(|col| {
                let (x, t) = (col / width, digits(col % width, da, n));
                let mut out = Vec::new();
                let rest = index_of(&t[1..], da);
                for (y, c) in m.right(t[0]).column(x).into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        out.push((y * low + rest, c));
                    }
                }
                for i in 1..n {
                    for (k, c) in a.basis_product(t[i - 1], t[i]) {
                        let mut u = t.clone();
                        u[i - 1] = *k;
                        u.remove(i);
                        out.push((
                            x * low + index_of(&u, da),
                            if i % 2 == 1 { f.neg(c) } else { c.clone() },
                        ));
                    }
                }
                let head = index_of(&t[..n - 1], da);
                for (y, c) in m.left(t[n - 1]).column(x).into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        out.push((y * low + head, if n % 2 == 1 { f.neg(&c) } else { c }));
                    }
                }
                out
            })
            .collect();
        maps.push(SparseMatrix::from_column_entries(
            f.clone(),
            dims[n - 1],
            columns,
        )?);
    }
    Ok(ChainComplexData {
        max_degree: top,
        direction: Direction::Chain,
        space_dims: dims,
        maps,
        block_index: vec![Vec::new(); top + 1],
    })
}

/// The complex `Cⁿ = Hom(A^{⊗n}, M)` with
/// `(δf)(a_1,…,a_{n+1}) = a_1f(a_2,…) + Σ(−1)^i f(…,a_ia_{i+1},…) + (−1)^{n+1}f(a_1,…,a_n)a_{n+1}`,
/// in degrees `0..=top`. Coordinate `(a_1, …, a_n; x)` at `index(a)·dim(M) + x`.
pub fn hochschild_cochain_complex<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    top: usize,
    cap: usize,
) -> Result<ChainComplexData<F>> {
    check_over(a, m)?;
    let f = a.field().clone();
    let (da, dm) = (a.dim(), m.dim());
    let dims: Vec<usize> = (0..=top)
        .map(|n| degree_dim(dm, da, n, cap))
        .collect::<Result<_>>()?;
    let mut maps = Vec::with_capacity(top);
    for n in 0..top {
        let triplets: Vec<(usize, usize, F::Elem)> = (0..da.pow(n as u32 + 1))
            .into_par_iter()
            .flat_map_iter(|tu| {
                let u = digits(tu, da, n + 1);
                let mut out = Vec::new();
                let tail = index_of(&u[1..], da);
                let l = m.left(u[0]);
                let r = m.right(u[n]);
                let head = tu / da;
                for y in 0..dm {
                    for x in 0..dm {
                        let c = l.get(y, x);
                        if !f.is_zero(c) {
                            out.push((tu * dm + y, tail * dm + x, c.clone()));
                        }
                        let c = r.get(y, x);
                        if !f.is_zero(c) {
                            out.push((
                                tu * dm + y,
                                head * dm + x,
                                if n % 2 == 0 { f.neg(c) } else { c.clone() },
                            ));
                        }
                    }
                }
                for i in 1..=n {
                    for (k, c) in a.basis_product(u[i - 1], u[i]) {
                        let mut w = u.clone();
                        w[i - 1] = *k;
                        w.remove(i);
                        let src = index_of(&w, da);
                        let c = if i % 2 == 1 { f.neg(c) } else { c.clone() };
                        for y in 0..dm {
                            out.push((tu * dm + y, src * dm + y, c.clone()));
                        }
                    }
                }
                out
            })
            .collect();
        maps.push(SparseMatrix::from_triplets(
            f.clone(),
            dims[n + 1],
            dims[n],
            triplets,
        )?);
    }
    Ok(ChainComplexData {
        max_degree: top,
        direction: Direction::Cochain,
        space_dims: dims,
        maps,
        block_index: vec![Vec::new(); top + 1],
    })
}

/// `dim HH_n(A, M)` for `n = 0..=max_deg`.
pub fn hochschild_homology<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    max_deg: usize,
) -> Result<Vec<usize>> {
    hochschild_homology_capped(a, m, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn hochschild_homology_capped<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    Ok(hochschild_chain_complex(a, m, max_deg + 1, cap)?.betti())
}

/// `dim HHⁿ(A, M)` for `n = 0..=max_deg`.
pub fn hochschild_cohomology<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    max_deg: usize,
) -> Result<Vec<usize>> {
    hochschild_cohomology_capped(a, m, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn hochschild_cohomology_capped<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    Ok(hochschild_cochain_complex(a, m, max_deg + 1, cap)?.betti())
}

/// Whether some `e = Σ e_{ij} b_i⊗b_j` has `Σ e_{ij}b_ib_j = 1` and `b_k e = e b_k`
/// for every basis element (`a(x⊗y) = ax⊗y`, `(x⊗y)a = x⊗ya`).
pub fn is_separable<F: Field>(a: &Algebra<F>) -> bool {
    separability_idempotent(a).is_some()
}

/// A separability idempotent, as the `dim × dim` coefficient matrix `e_{ij}`.
pub fn separability_idempotent<F: Field>(a: &Algebra<F>) -> Option<Matrix<F>> {
    let f = a.field().clone();
    let n = a.dim();
    let unknowns = n * n;
    let mut rows: Vec<Vec<(usize, F::Elem)>> = Vec::new();
    // μ(e) = 1: one equation per output coordinate
    let mut mu = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.basis_product(i, j) {
                mu[*k].push((i * n + j, c.clone()));
            }
        }
    }
    let mut rhs = Vec::new();
    for (k, r) in mu.into_iter().enumerate() {
        rows.push(r);
        rhs.push(a.unit()[k].clone());
    }
    // (b_k ⊗ 1)e − e(1 ⊗ b_k) = 0, coordinate (p, q) of A⊗A
    for k in 0..n {
        let mut eqs = vec![Vec::new(); unknowns];
        for i in 0..n {
            for j in 0..n {
                let var = i * n + j;
                for (p, c) in a.basis_product(k, i) {
                    eqs[p * n + j].push((var, c.clone()));
                }
                for (q, c) in a.basis_product(j, k) {
                    eqs[i * n + q].push((var, f.neg(c)));
                }
            }
        }
        for e in eqs {
            if !e.is_empty() {
                rows.push(e);
                rhs.push(f.zero());
            }
        }
    }
    let mut m = Matrix::zeros(f.clone(), rows.len(), unknowns);
    for (r, entries) in rows.iter().enumerate() {
        for (c, v) in entries {
            let cur = f.add(m.get(r, *c), v);
            m.set(r, *c, cur);
        }
    }
    let b = Matrix::from_columns(f.clone(), rows.len(), &[rhs]);
    let x = m.solve(&b)?;
    Some(Matrix::from_fn(f, n, n, |i, j| x.get(i * n + j, 0).clone()))
}
