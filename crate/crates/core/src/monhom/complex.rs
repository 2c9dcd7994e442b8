use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::module::KSModule;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, SparseMatrix};
use crate::field::Field;
use crate::invmon::InverseMonoid;

/// Default bound on the dimension of any single degree.
pub const DEFAULT_CAP_COLUMNS: usize = 50_000;

/// Hard bound on the number of tuples enumerated in one degree.
const MAX_TUPLES: u128 = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Chain,
    Cochain,
}

/// One summand of a degree: a tuple of monoid elements and the range of
/// basis columns carrying its coefficient subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub tuple: Vec<usize>,
    pub start: usize,
    pub len: usize,
}

/// A finite stretch of a (co)chain complex with explicit bases.
#[derive(Clone, Debug)]
pub struct ChainComplexData<F: Field> {
    pub max_degree: usize,
    pub direction: Direction,
    pub space_dims: Vec<usize>,
    /// Chain: `maps[n-1] = ∂_n : C_n → C_{n-1}`. Cochain: `maps[n] = δ^n : C^n → C^{n+1}`.
    pub maps: Vec<SparseMatrix<F>>,
    pub block_index: Vec<Vec<Block>>,
}

impl<F: Field> ChainComplexData<F> {
    /// Whether every composite of consecutive maps vanishes.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| match self.direction {
            Direction::Chain => w[0].mul(&w[1]).is_zero(),
            Direction::Cochain => w[1].mul(&w[0]).is_zero(),
        })
    }

    /// Betti numbers in degrees `0..max_degree` (the top degree only feeds
    /// the rank of the map into the degree below it).
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.par_iter().map(sparse_rank).collect();
        (0..self.max_degree)
            .map(|n| {
                let (out, inc) = match self.direction {
                    Direction::Chain => (if n == 0 { 0 } else { ranks[n - 1] }, ranks[n]),
                    Direction::Cochain => (ranks[n], if n == 0 { 0 } else { ranks[n - 1] }),
                };
                self.space_dims[n] - out - inc
            })
            .collect()
    }
}

/// Rank, reducing along the shorter side.
pub(crate) fn sparse_rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    if m.rows() < m.cols() {
        m.transpose().rank()
    } else {
        m.rank()
    }
}

/// The image of an idempotent projector `act(e)`: pivot-column basis and a
/// left inverse giving coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Summand<F: Field> {
    pub projector: Matrix<F>,
    pub basis: Matrix<F>,
    pub coords: Matrix<F>,
}

impl<F: Field> Summand<F> {
    pub fn new(projector: Matrix<F>) -> Self {
        let basis = projector.column_basis();
        let rows = basis.transpose().pivot_columns();
        let square = basis.select_rows(&rows);
        let inv = square
            .inverse()
            .expect("pivot rows of a full-rank basis are independent");
        let dim = projector.rows();
        let mut select = Matrix::zeros(projector.field().clone(), rows.len(), dim);
        for (i, &r) in rows.iter().enumerate() {
            select.set(i, r, projector.field().one());
        }
        Summand {
            coords: inv.mul(&select),
            basis,
            projector,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Summands `act(e)V` for every idempotent `e`.
pub(crate) fn summands<F: Field>(s: &InverseMonoid, v: &KSModule<F>) -> HashMap<usize, Summand<F>> {
    s.idempotents()
        .par_iter()
        .map(|&e| (e, Summand::new(v.act(e).clone())))
        .collect()
}

/// A block `coords_t · act(x) · basis_s`, after checking that the image lands
/// in the target summand.
fn block<F: Field>(
    v: &KSModule<F>,
    sum: &HashMap<usize, Summand<F>>,
    target: usize,
    x: Option<usize>,
    source: usize,
) -> Result<Matrix<F>> {
    let (t, s) = (&sum[&target], &sum[&source]);
    let image = match x {
        Some(x) => v.act(x).mul(&s.basis),
        None => s.basis.clone(),
    };
    if t.projector.mul(&image) != image {
        return Err(Error::NotLeftModule(format!(
            "image of summand {source} under {x:?} leaves summand {target}"
        )));
    }
    Ok(t.coords.mul(&image))
}

/// One nonzero term of a differential: a `(row tuple, column tuple)` pair,
/// the acting element and a sign.
struct Term {
    row: usize,
    col: usize,
    key: (usize, Option<usize>, usize),
    negative: bool,
}

struct Degree {
    tuples: usize,
    starts: Vec<usize>,
    dims: Vec<usize>,
    total: usize,
}

fn tuple_count(size: usize, n: usize, cap: usize) -> Result<usize> {
    let count = (size as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if count > MAX_TUPLES || count > (cap as u128).saturating_mul(64).max(1) {
        return Err(Error::SizeCap {
            what: format!("tuples in degree {n}"),
            size: count,
            cap: MAX_TUPLES.min(cap as u128 * 64),
        });
    }
    Ok(count as usize)
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

/// Shared scaffolding for the two complexes: products of tuples, summand
/// idempotents per tuple, and block offsets.
struct Layout<'a, F: Field> {
    s: &'a InverseMonoid,
    v: &'a KSModule<F>,
    sum: HashMap<usize, Summand<F>>,
    /// `prods[n][idx]` = product of the tuple `idx` of length `n`, left to right.
    prods: Vec<Vec<usize>>,
    degrees: Vec<Degree>,
}

impl<'a, F: Field> Layout<'a, F> {
    fn new(
        s: &'a InverseMonoid,
        v: &'a KSModule<F>,
        top: usize,
        cap: usize,
        idem: impl Fn(&InverseMonoid, usize) -> usize,
    ) -> Result<Self> {
        v.check_left_over(s)?;
        let sum = summands(s, v);
        let size = s.size();
        let mut prods = vec![vec![s.unit()]];
        let mut degrees = Vec::new();
        for n in 0..=top {
            let count = tuple_count(size, n, cap)?;
            if n > 0 {
                let prev = &prods[n - 1];
                prods.push(
                    (0..count)
                        .map(|i| s.mul(prev[i / size], i % size))
                        .collect(),
                );
            }
            let dims: Vec<usize> = prods[n].iter().map(|&p| sum[&idem(s, p)].dim()).collect();
            let mut starts = Vec::with_capacity(count);
            let mut total = 0usize;
            for &d in &dims {
                starts.push(total);
                total += d;
            }
            if total > cap {
                return Err(Error::SizeCap {
                    what: format!("dimension of degree {n}"),
                    size: total as u128,
                    cap: cap as u128,
                });
            }
            degrees.push(Degree {
                tuples: count,
                starts,
                dims,
                total,
            });
        }
        Ok(Layout {
            s,
            v,
            sum,
            prods,
            degrees,
        })
    }

    fn blocks(&self, n: usize) -> Vec<Block> {
        let d = &self.degrees[n];
        (0..d.tuples)
            .map(|i| Block {
                tuple: digits(i, self.s.size(), n),
                start: d.starts[i],
                len: d.dims[i],
            })
            .collect()
    }

    /// Assembles a sparse matrix from per-tuple term lists.
    fn assemble(
        &self,
        terms: Vec<Term>,
        row_deg: usize,
        col_deg: usize,
    ) -> Result<SparseMatrix<F>> {
        let keys: BTreeSet<(usize, Option<usize>, usize)> = terms.iter().map(|t| t.key).collect();
        let keys: Vec<_> = keys.into_iter().collect();
        let blocks: Vec<Matrix<F>> = keys
            .par_iter()
            .map(|&(t, x, s)| block(self.v, &self.sum, t, x, s))
            .collect::<Result<_>>()?;
        let table: HashMap<_, _> = keys.into_iter().zip(blocks).collect();
        let f = self.v.field();
        let (rd, cd) = (&self.degrees[row_deg], &self.degrees[col_deg]);
        let triplets: Vec<(usize, usize, F::Elem)> = terms
            .par_iter()
            .flat_map_iter(|t| {
                let m = &table[&t.key];
                let (r0, c0) = (rd.starts[t.row], cd.starts[t.col]);
                let mut out = Vec::new();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        let x = m.get(i, j);
                        if !f.is_zero(x) {
                            out.push((
                                r0 + i,
                                c0 + j,
                                if t.negative { f.neg(x) } else { x.clone() },
                            ));
                        }
                    }
                }
                out
            })
            .collect();
        SparseMatrix::from_triplets(f.clone(), rd.total, cd.total, triplets)
    }
}

/// The chain complex `C'_n = ⊕_{(s_n,…,s_1)} d(s_n⋯s_1)V` in degrees `0..=max_deg`.
pub fn homology_complex<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
) -> Result<ChainComplexData<F>> {
    homology_complex_capped(s, v, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn homology_complex_capped<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<ChainComplexData<F>> {
    let lay = Layout::new(s, v, max_deg, cap, |s, p| s.d(p))?;
    let size = s.size();
    let mut maps = Vec::with_capacity(max_deg);
    for n in 1..=max_deg {
        let low = &lay.prods[n - 1];
        let terms: Vec<Term> = (0..lay.degrees[n].tuples)
            .into_par_iter()
            .flat_map_iter(|idx| {
                let t = digits(idx, size, n);
                let src = s.d(lay.prods[n][idx]);
                let mut out = Vec::with_capacity(n + 1);
                // (s_n,…,s_2) s_1v
                let row = idx / size;
                out.push(Term {
                    row,
                    col: idx,
                    key: (s.d(low[row]), Some(t[n - 1]), src),
                    negative: false,
                });
                // (…, s_{i+1}s_i, …)v
                for i in 1..n {
                    let p = n - 1 - i;
                    let mut u = t.clone();
                    u[p] = s.mul(t[p], t[p + 1]);
                    u.remove(p + 1);
                    let row = index_of(&u, size);
                    out.push(Term {
                        row,
                        col: idx,
                        key: (s.d(low[row]), None, src),
                        negative: i % 2 == 1,
                    });
                }
                // (s_{n-1},…,s_1)v
                let row = index_of(&t[1..], size);
                out.push(Term {
                    row,
                    col: idx,
                    key: (s.d(low[row]), None, src),
                    negative: n % 2 == 1,
                });
                out
            })
            .collect();
        maps.push(lay.assemble(terms, n - 1, n)?);
    }
    let space_dims = lay.degrees.iter().map(|d| d.total).collect();
    let block_index = (0..=max_deg).map(|n| lay.blocks(n)).collect();
    Ok(ChainComplexData {
        max_degree: max_deg,
        direction: Direction::Chain,
        space_dims,
        maps,
        block_index,
    })
}

/// The cochain complex `Cⁿ = ⊕_{(s_1,…,s_n)} r(s_1⋯s_n)V` in degrees `0..=max_deg`.
pub fn cohomology_complex<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
) -> Result<ChainComplexData<F>> {
    cohomology_complex_capped(s, v, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn cohomology_complex_capped<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<ChainComplexData<F>> {
    let lay = Layout::new(s, v, max_deg, cap, |s, p| s.r(p))?;
    let size = s.size();
    let mut maps = Vec::with_capacity(max_deg);
    for n in 0..max_deg {
        let low = &lay.prods[n];
        let terms: Vec<Term> = (0..lay.degrees[n + 1].tuples)
            .into_par_iter()
            .flat_map_iter(|idx| {
                let u = digits(idx, size, n + 1);
                let tgt = s.r(lay.prods[n + 1][idx]);
                let mut out = Vec::with_capacity(n + 2);
                // s_1 σ(s_2,…,s_{n+1})
                let col = index_of(&u[1..], size);
                out.push(Term {
                    row: idx,
                    col,
                    key: (tgt, Some(u[0]), s.r(low[col])),
                    negative: false,
                });
                // σ(…, s_i s_{i+1}, …)
                for i in 1..=n {
                    let mut w = u.clone();
                    w[i - 1] = s.mul(u[i - 1], u[i]);
                    w.remove(i);
                    let col = index_of(&w, size);
                    out.push(Term {
                        row: idx,
                        col,
                        key: (tgt, None, s.r(low[col])),
                        negative: i % 2 == 1,
                    });
                }
                // r(s_1⋯s_{n+1}) σ(s_1,…,s_n)
                let col = idx / size;
                out.push(Term {
                    row: idx,
                    col,
                    key: (tgt, Some(tgt), s.r(low[col])),
                    negative: n % 2 == 0,
                });
                out
            })
            .collect();
        maps.push(lay.assemble(terms, n + 1, n)?);
    }
    let space_dims = lay.degrees.iter().map(|d| d.total).collect();
    let block_index = (0..=max_deg).map(|n| lay.blocks(n)).collect();
    Ok(ChainComplexData {
        max_degree: max_deg,
        direction: Direction::Cochain,
        space_dims,
        maps,
        block_index,
    })
}

/// `dim H_n(S, V)` for `n = 0..=max_deg`.
pub fn homology<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
) -> Result<Vec<usize>> {
    homology_capped(s, v, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn homology_capped<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    Ok(homology_complex_capped(s, v, max_deg + 1, cap)?.betti())
}

/// `dim Hⁿ(S, V)` for `n = 0..=max_deg`.
pub fn cohomology<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
) -> Result<Vec<usize>> {
    cohomology_capped(s, v, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn cohomology_capped<F: Field>(
    s: &InverseMonoid,
    v: &KSModule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    Ok(cohomology_complex_capped(s, v, max_deg + 1, cap)?.betti())
}
