//! Finite inverse monoids given by Cayley tables.

mod generators;

pub use generators::{
    chain_semilattice, cyclic_group, direct_product, symmetric_inverse_monoid, trivial_monoid,
};

use crate::error::{Error, Result};

/// Largest monoid accepted by [`InverseMonoid::from_table`]; validation is cubic.
pub const MAX_MONOID_SIZE: usize = 2048;

/// A validated finite inverse monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseMonoid {
    size: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    unit: usize,
    names: Option<Vec<String>>,
    idempotents: Vec<usize>,
}

/// The maximum group image `S / σ` with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupImage {
    pub group: InverseMonoid,
    pub proj: Vec<usize>,
}

impl InverseMonoid {
    /// Validates a square Cayley table (rows are left factors).
    pub fn from_table(table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let size = table.len();
        let mut flat = Vec::with_capacity(size * size);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::Shape(format!(
                    "table row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            flat.extend(row);
        }
        Self::from_flat(size, flat, unit, None)
    }

    /// Validates a row-major table of `size * size` entries.
    pub fn from_flat(
        size: usize,
        table: Vec<usize>,
        unit: usize,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::Shape("a monoid needs at least one element".into()));
        }
        if size > MAX_MONOID_SIZE {
            return Err(Error::SizeCap {
                what: "monoid size".into(),
                size: size as u128,
                cap: MAX_MONOID_SIZE as u128,
            });
        }
        if table.len() != size * size {
            return Err(Error::Shape(format!(
                "table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if let Some(p) = table.iter().position(|&v| v >= size) {
            return Err(Error::TableOutOfRange {
                row: p / size,
                col: p % size,
                value: table[p],
                size,
            });
        }
        if let Some(n) = &names {
            if n.len() != size {
                return Err(Error::Shape(format!(
                    "{} names for {size} elements",
                    n.len()
                )));
            }
        }
        if unit >= size {
            return Err(Error::NoIdentity { unit, witness: 0 });
        }
        let m = |a: usize, b: usize| table[a * size + b];
        for a in 0..size {
            if m(unit, a) != a || m(a, unit) != a {
                return Err(Error::NoIdentity { unit, witness: a });
            }
        }
        for a in 0..size {
            for b in 0..size {
                let ab = m(a, b);
                for c in 0..size {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let inv = compute_inverses(size, &table)?;
        let monoid = Self::assemble(size, table, inv, unit, names);
        let e = &monoid.idempotents;
        for (i, &x) in e.iter().enumerate() {
            for &y in &e[i + 1..] {
                if monoid.mul(x, y) != monoid.mul(y, x) {
                    return Err(Error::IdempotentsDoNotCommute(x, y));
                }
            }
        }
        Ok(monoid)
    }

    /// Builds without the cubic checks; used by generators whose output is
    /// an inverse monoid by construction.
    pub(crate) fn from_trusted(
        size: usize,
        table: Vec<usize>,
        unit: usize,
        names: Option<Vec<String>>,
    ) -> Self {
        let inv = compute_inverses(size, &table).expect("generated monoid is inverse");
        Self::assemble(size, table, inv, unit, names)
    }

    fn assemble(
        size: usize,
        table: Vec<usize>,
        inv: Vec<usize>,
        unit: usize,
        names: Option<Vec<String>>,
    ) -> Self {
        let idempotents = (0..size).filter(|&a| table[a * size + a] == a).collect();
        InverseMonoid {
            size,
            table,
            inv,
            unit,
            names,
            idempotents,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }
    pub fn unit(&self) -> usize {
        self.unit
    }
    pub fn table(&self) -> &[usize] {
        &self.table
    }
    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, s: usize) -> String {
        match &self.names {
            Some(n) => n[s].clone(),
            None => s.to_string(),
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// Product of a word, left to right; the unit for the empty word.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.unit, |acc, &s| self.mul(acc, s))
    }

    pub fn inv(&self, s: usize) -> usize {
        self.inv[s]
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    /// `E(S)` in increasing index order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// `(d(s), r(s)) = (s⁻¹s, ss⁻¹)`.
    pub fn dom_range(&self, s: usize) -> (usize, usize) {
        (self.d(s), self.r(s))
    }

    pub fn d(&self, s: usize) -> usize {
        self.mul(self.inv[s], s)
    }

    pub fn r(&self, s: usize) -> usize {
        self.mul(s, self.inv[s])
    }

    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }

    /// `s ≤ t` iff `s = e·t` for some idempotent `e`.
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        self.idempotents.iter().any(|&e| self.mul(e, t) == s)
    }

    /// σ-class index of every element: the equivalence closure of `≤`,
    /// classes numbered in order of their least member.
    pub fn sigma_classes(&self) -> Vec<usize> {
        let n = self.size;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for s in 0..n {
            // s ≤ t iff s = r(s)·t
            let rs = self.r(s);
            for t in 0..n {
                if self.mul(rs, t) == s {
                    let (a, b) = (find(&mut parent, s), find(&mut parent, t));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut class_of_root = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for s in 0..n {
            let root = find(&mut parent, s);
            if class_of_root[root] == usize::MAX {
                class_of_root[root] = next;
                next += 1;
            }
            out[s] = class_of_root[root];
        }
        out
    }

    /// The group `S/σ` on σ-classes, together with the class map.
    pub fn max_group_image(&self) -> Result<GroupImage> {
        let proj = self.sigma_classes();
        let k = proj.iter().max().map_or(0, |m| m + 1);
        let mut rep = vec![usize::MAX; k];
        for (s, &c) in proj.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = s;
            }
        }
        let mut table = vec![usize::MAX; k * k];
        for a in 0..self.size {
            for b in 0..self.size {
                let (ca, cb) = (proj[a], proj[b]);
                let c = proj[self.mul(a, b)];
                let slot = &mut table[ca * k + cb];
                if *slot == usize::MAX {
                    *slot = c;
                } else if *slot != c {
                    return Err(Error::InducedTableIllDefined(ca, cb));
                }
            }
        }
        let names = self
            .names
            .as_ref()
            .map(|_| rep.iter().map(|&s| format!("[{}]", self.name(s))).collect());
        let group = InverseMonoid::from_flat(k, table, proj[self.unit], names)?;
        if !group.is_group() {
            return Err(Error::NotAGroup(
                "maximum group image has several idempotents".into(),
            ));
        }
        Ok(GroupImage { group, proj })
    }

    /// For every idempotent `e ≤ s`, `s` is itself idempotent.
    pub fn is_e_unitary(&self) -> bool {
        (0..self.size).all(|s| {
            self.is_idempotent(s) || !self.idempotents.iter().any(|&e| self.natural_leq(e, s))
        })
    }
}

/// Unique generalized inverse of every element, by exhaustive search.
fn compute_inverses(size: usize, table: &[usize]) -> Result<Vec<usize>> {
    let m = |a: usize, b: usize| table[a * size + b];
    let mut inv = Vec::with_capacity(size);
    for s in 0..size {
        let mut found: Option<usize> = None;
        for x in 0..size {
            if m(m(s, x), s) == s && m(m(x, s), x) == x {
                if let Some(first) = found {
                    return Err(Error::InverseNotUnique {
                        element: s,
                        first,
                        second: x,
                    });
                }
                found = Some(x);
            }
        }
        inv.push(found.ok_or(Error::InverseMissing(s))?);
    }
    Ok(inv)
}
