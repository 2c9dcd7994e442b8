use super::InverseMonoid;
use crate::error::{Error, Result};

/// Largest `n` for which `I(n)` is generated (|I(5)| = 1546).
pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// Largest chain or cyclic group generated.
pub const MAX_GENERATED_SIZE: usize = super::MAX_MONOID_SIZE;

pub fn trivial_monoid() -> InverseMonoid {
    InverseMonoid::from_trusted(1, vec![0], 0, Some(vec!["1".into()]))
}

/// Partial bijections of `{1..n}`, stored as `map[i] = j + 1` or 0 when undefined.
fn partial_bijections(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let dom: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let mut images = Vec::new();
        injections(n, dom.len(), &mut Vec::new(), &mut images);
        for img in images {
            let mut map = vec![0; n];
            for (&i, &j) in dom.iter().zip(&img) {
                map[i] = j + 1;
            }
            out.push(map);
        }
    }
    out
}

/// All injective tuples of length `k` into `0..n`, lexicographically.
fn injections(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    for j in 0..n {
        if !prefix.contains(&j) {
            prefix.push(j);
            injections(n, k, prefix, out);
            prefix.pop();
        }
    }
}

/// The symmetric inverse monoid `I(n)`.
///
/// Elements are ordered by domain (as a bitmask), then by the tuple of
/// images. The product `st` applies `t` first.
pub fn symmetric_inverse_monoid(n: usize) -> Result<InverseMonoid> {
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::SizeCap {
            what: "symmetric inverse monoid degree".into(),
            size: n as u128,
            cap: MAX_SYMMETRIC_DEGREE as u128,
        });
    }
    let maps = partial_bijections(n);
    let size = maps.len();
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut table = Vec::with_capacity(size * size);
    for s in &maps {
        for t in &maps {
            let st: Vec<usize> = t
                .iter()
                .map(|&x| if x == 0 { 0 } else { s[x - 1] })
                .collect();
            table.push(index[&st]);
        }
    }
    let names = maps
        .iter()
        .map(|m| {
            let parts: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &j)| j != 0)
                .map(|(i, &j)| format!("{}->{}", i + 1, j))
                .collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let unit = index[&(1..=n).collect::<Vec<_>>()];
    Ok(InverseMonoid::from_trusted(size, table, unit, Some(names)))
}

/// The chain `e0 > e1 > … > e(n-1)`, product the minimum, unit `e0`.
pub fn chain_semilattice(n: usize) -> Result<InverseMonoid> {
    check_generated(n, "chain length")?;
    let table = (0..n).flat_map(|i| (0..n).map(move |j| i.max(j))).collect();
    let names = (0..n).map(|i| format!("e{i}")).collect();
    Ok(InverseMonoid::from_trusted(n, table, 0, Some(names)))
}

/// The cyclic group of order `n`, element `k` standing for `g^k`.
pub fn cyclic_group(n: usize) -> Result<InverseMonoid> {
    check_generated(n, "cyclic group order")?;
    let table = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i + j) % n))
        .collect();
    let names = (0..n).map(|k| format!("g{k}")).collect();
    Ok(InverseMonoid::from_trusted(n, table, 0, Some(names)))
}

fn check_generated(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Shape(format!("{what} must be positive")));
    }
    if n > MAX_GENERATED_SIZE {
        return Err(Error::SizeCap {
            what: what.into(),
            size: n as u128,
            cap: MAX_GENERATED_SIZE as u128,
        });
    }
    Ok(())
}

/// `S × T` with `(s, t)` at index `s·|T| + t`.
pub fn direct_product(s: &InverseMonoid, t: &InverseMonoid) -> InverseMonoid {
    let (a, b) = (s.size(), t.size());
    let n = a * b;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(s.mul(x / b, y / b) * b + t.mul(x % b, y % b));
        }
    }
    let names = (s.names().is_some() || t.names().is_some()).then(|| {
        (0..n)
            .map(|x| format!("({},{})", s.name(x / b), t.name(x % b)))
            .collect()
    });
    InverseMonoid::from_trusted(n, table, s.unit() * b + t.unit(), names)
}
