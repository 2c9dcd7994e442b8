//! A textbook bar complex for finite groups with trivial coefficients, with
//! its own elimination, used as an oracle.

use num_rational::BigRational;
use num_traits::Zero;

/// Dense rank over `ℚ` or `𝔽_p`, Gaussian elimination on rows.
pub enum Coeffs {
    Q,
    P(i64),
}

impl Coeffs {
    pub fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match self {
            Coeffs::Q => {
                let m = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|&x| BigRational::from_integer(x.into()))
                            .collect()
                    })
                    .collect();
                rank_q(m)
            }
            Coeffs::P(p) => rank_p(
                rows.iter()
                    .map(|r| r.iter().map(|&x| x.rem_euclid(*p)).collect())
                    .collect(),
                *p,
            ),
        }
    }
}

fn rank_q(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &piv;
                for k in c..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let inv = |a: i64| (1..p).find(|&b| a * b % p == 1).expect("prime modulus");
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let i = inv(m[rank][c]);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * i % p;
                for k in c..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `∂_n : K[Gⁿ] → K[Gⁿ⁻¹]` as rows indexed by `Gⁿ⁻¹`.
pub fn bar_boundary(mul: &dyn Fn(usize, usize) -> usize, g: usize, n: usize) -> Vec<Vec<i64>> {
    let dom = g.pow(n as u32);
    let cod = g.pow(n as u32 - 1);
    let mut m = vec![vec![0i64; dom]; cod];
    let index = |t: &[usize]| t.iter().fold(0, |a, &x| a * g + x);
    for col in 0..dom {
        let mut t = vec![0; n];
        let mut c = col;
        for k in (0..n).rev() {
            t[k] = c % g;
            c /= g;
        }
        m[index(&t[1..])][col] += 1;
        for i in 0..n - 1 {
            let mut f = t[..i].to_vec();
            f.push(mul(t[i], t[i + 1]));
            f.extend_from_slice(&t[i + 2..]);
            m[index(&f)][col] += if i % 2 == 0 { -1 } else { 1 };
        }
        m[index(&t[..n - 1])][col] += if n.is_multiple_of(2) { 1 } else { -1 };
    }
    m
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| m.iter().map(|r| r[c]).collect())
        .collect()
}

/// `(H_0..H_top, H^0..H^top)` of `G` with trivial coefficients.
pub fn group_betti(
    mul: &dyn Fn(usize, usize) -> usize,
    g: usize,
    top: usize,
    k: &Coeffs,
) -> (Vec<usize>, Vec<usize>) {
    let d: Vec<Vec<Vec<i64>>> = (1..=top + 1).map(|n| bar_boundary(mul, g, n)).collect();
    let ranks: Vec<usize> = d.iter().map(|m| k.rank(m)).collect();
    let coranks: Vec<usize> = d.iter().map(|m| k.rank(&transpose(m))).collect();
    let dim = |n: usize| g.pow(n as u32);
    let h = (0..=top)
        .map(|n| dim(n) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect();
    let co = (0..=top)
        .map(|n| dim(n) - coranks[n] - if n > 0 { coranks[n - 1] } else { 0 })
        .collect();
    (h, co)
}
