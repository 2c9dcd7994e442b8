use crate::error::{Error, Result};
use crate::invmon::InverseMonoid;

/// Largest groupoid accepted; the composition table is quadratic in arrows.
pub const MAX_ARROWS: usize = 4096;

/// A finite groupoid with the discrete topology. `comp(α, β) = αβ` is
/// defined iff `src(α) = rng(β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: usize,
    src: Vec<usize>,
    rng: Vec<usize>,
    comp: Vec<Option<usize>>,
    inv: Vec<usize>,
    unit_of: Vec<usize>,
}

impl FiniteGroupoid {
    /// Validates arrows `(src, rng)`, composition triples `(α, β, αβ)` and inverses.
    pub fn new(
        objects: usize,
        arrows: &[(usize, usize)],
        comp: &[(usize, usize, usize)],
        inv: &[usize],
    ) -> Result<Self> {
        let n = arrows.len();
        let bad = |m: String| Error::InvalidGroupoid(m);
        if n > MAX_ARROWS {
            return Err(Error::SizeCap {
                what: "groupoid arrows".into(),
                size: n as u128,
                cap: MAX_ARROWS as u128,
            });
        }
        if let Some((i, _)) = arrows
            .iter()
            .enumerate()
            .find(|(_, &(s, r))| s >= objects || r >= objects)
        {
            return Err(bad(format!(
                "arrow {i} has an endpoint outside {objects} objects"
            )));
        }
        if inv.len() != n {
            return Err(bad(format!("{} inverses for {n} arrows", inv.len())));
        }
        let src: Vec<usize> = arrows.iter().map(|a| a.0).collect();
        let rng: Vec<usize> = arrows.iter().map(|a| a.1).collect();
        let mut table = vec![None; n * n];
        for &(a, b, c) in comp {
            if a >= n || b >= n || c >= n {
                return Err(bad(format!(
                    "composition ({a},{b},{c}) refers to a missing arrow"
                )));
            }
            if src[a] != rng[b] {
                return Err(bad(format!("{a}∘{b} given although src({a}) ≠ rng({b})")));
            }
            if src[c] != src[b] || rng[c] != rng[a] {
                return Err(bad(format!("{a}∘{b} = {c} has the wrong endpoints")));
            }
            match table[a * n + b] {
                Some(old) if old != c => return Err(bad(format!("{a}∘{b} given twice"))),
                _ => table[a * n + b] = Some(c),
            }
        }
        for a in 0..n {
            for b in 0..n {
                if src[a] == rng[b] && table[a * n + b].is_none() {
                    return Err(bad(format!("{a}∘{b} is missing")));
                }
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = at(a, b) else { continue };
                for c in 0..n {
                    if let (Some(bc), true) = (at(b, c), src[b] == rng[c]) {
                        if at(ab, c) != at(a, bc) {
                            return Err(bad(format!(
                                "composition is not associative at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        let mut unit_of = vec![usize::MAX; objects];
        for x in 0..objects {
            unit_of[x] = (0..n)
                .find(|&u| {
                    src[u] == x
                        && rng[u] == x
                        && (0..n).all(|a| {
                            (rng[a] != x || at(u, a) == Some(a))
                                && (src[a] != x || at(a, u) == Some(a))
                        })
                })
                .ok_or_else(|| bad(format!("object {x} has no unit arrow")))?;
        }
        for a in 0..n {
            let b = inv[a];
            if b >= n
                || src[b] != rng[a]
                || rng[b] != src[a]
                || at(a, b) != Some(unit_of[rng[a]])
                || at(b, a) != Some(unit_of[src[a]])
            {
                return Err(bad(format!("inverse of arrow {a} is wrong")));
            }
        }
        Ok(FiniteGroupoid {
            objects,
            src,
            rng,
            comp: table,
            inv: inv.to_vec(),
            unit_of,
        })
    }

    pub fn objects(&self) -> usize {
        self.objects
    }
    pub fn arrows(&self) -> usize {
        self.src.len()
    }
    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }
    pub fn rng(&self, a: usize) -> usize {
        self.rng[a]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
    pub fn unit_of(&self, x: usize) -> usize {
        self.unit_of[x]
    }
    pub fn is_unit(&self, a: usize) -> bool {
        self.unit_of[self.src[a]] == a
    }

    /// `αβ` when `src(α) = rng(β)`.
    pub fn comp(&self, a: usize, b: usize) -> Option<usize> {
        self.comp[a * self.arrows() + b]
    }

    /// All defined composition triples, in order.
    pub fn comp_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.arrows();
        (0..n * n)
            .filter_map(|p| self.comp[p].map(|c| (p / n, p % n, c)))
            .collect()
    }

    pub fn arrow_list(&self) -> Vec<(usize, usize)> {
        self.src
            .iter()
            .copied()
            .zip(self.rng.iter().copied())
            .collect()
    }
}

/// Arrow `src·n + rng` goes from `src` to `rng`.
pub fn pair_groupoid(n: usize) -> Result<FiniteGroupoid> {
    if n == 0 || n * n > MAX_ARROWS {
        return Err(Error::InvalidGroupoid(format!(
            "pair groupoid on {n} objects"
        )));
    }
    let arrows: Vec<(usize, usize)> = (0..n * n).map(|a| (a / n, a % n)).collect();
    let mut comp = Vec::new();
    for a in 0..n * n {
        for b in 0..n * n {
            // a: y → z, b: x → y
            if arrows[a].0 == arrows[b].1 {
                comp.push((a, b, arrows[b].0 * n + arrows[a].1));
            }
        }
    }
    let inv: Vec<usize> = arrows.iter().map(|&(s, r)| r * n + s).collect();
    FiniteGroupoid::new(n, &arrows, &comp, &inv)
}

/// One object, arrows the group elements.
pub fn group_as_groupoid(g: &InverseMonoid) -> Result<FiniteGroupoid> {
    if !g.is_group() {
        return Err(Error::NotAGroup(
            "the table has more than one idempotent".into(),
        ));
    }
    let n = g.size();
    let arrows = vec![(0, 0); n];
    let comp: Vec<_> = (0..n * n)
        .map(|p| (p / n, p % n, g.mul(p / n, p % n)))
        .collect();
    let inv: Vec<usize> = (0..n).map(|a| g.inv(a)).collect();
    FiniteGroupoid::new(1, &arrows, &comp, &inv)
}

/// `n` objects and only unit arrows.
pub fn discrete_groupoid(n: usize) -> Result<FiniteGroupoid> {
    if n == 0 || n > MAX_ARROWS {
        return Err(Error::InvalidGroupoid(format!(
            "discrete groupoid on {n} objects"
        )));
    }
    let arrows: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
    let comp: Vec<_> = (0..n).map(|x| (x, x, x)).collect();
    FiniteGroupoid::new(n, &arrows, &comp, &(0..n).collect::<Vec<_>>())
}

/// `g ⊔ h`, with the objects and arrows of `h` shifted after those of `g`.
pub fn disjoint_union(g: &FiniteGroupoid, h: &FiniteGroupoid) -> Result<FiniteGroupoid> {
    let (no, na) = (g.objects(), g.arrows());
    let mut arrows = g.arrow_list();
    arrows.extend(h.arrow_list().into_iter().map(|(s, r)| (s + no, r + no)));
    let mut comp = g.comp_triples();
    comp.extend(
        h.comp_triples()
            .into_iter()
            .map(|(a, b, c)| (a + na, b + na, c + na)),
    );
    let mut inv = g.inv.clone();
    inv.extend(h.inv.iter().map(|&a| a + na));
    FiniteGroupoid::new(no + h.objects(), &arrows, &comp, &inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invmon::cyclic_group;

    #[test]
    fn generators() {
        let p = pair_groupoid(2).unwrap();
        assert_eq!((p.objects(), p.arrows()), (2, 4));
        assert_eq!(p.unit_of(1), 3);
        // (0→1)∘(1→0) = unit at 1
        assert_eq!(p.comp(1, 2), Some(3));
        assert_eq!(p.comp(1, 1), None);
        let z = group_as_groupoid(&cyclic_group(2).unwrap()).unwrap();
        assert_eq!((z.objects(), z.arrows()), (1, 2));
        let u = disjoint_union(
            &discrete_groupoid(1).unwrap(),
            &discrete_groupoid(1).unwrap(),
        )
        .unwrap();
        assert_eq!((u.objects(), u.arrows()), (2, 2));
        assert_eq!(u, discrete_groupoid(2).unwrap());
    }

    #[test]
    fn rejects_broken_data() {
        let arrows = [(0, 0), (0, 0)];
        // missing composites
        assert!(FiniteGroupoid::new(1, &arrows, &[(0, 0, 0)], &[0, 1]).is_err());
        // no inverse for arrow 1 (it composes like a zero)
        let comp = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)];
        assert!(matches!(
            FiniteGroupoid::new(1, &arrows, &comp, &[0, 1]),
            Err(Error::InvalidGroupoid(_))
        ));
        assert!(FiniteGroupoid::new(1, &[(0, 1)], &[], &[0]).is_err());
    }
}
