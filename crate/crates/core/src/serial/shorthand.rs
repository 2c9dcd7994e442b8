use crate::crossprod::{
    conjugation_action, diagonal_algebra, dual_numbers, idempotent_algebra, matrix_algebra,
    semigroup_algebra, trivial_action, Algebra, Bimodule, UnitalAction,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::invmon::{
    chain_semilattice, cyclic_group, direct_product, symmetric_inverse_monoid, trivial_monoid,
    InverseMonoid, MAX_MONOID_SIZE,
};
use crate::monhom::{
    constant_module, direct_sum, filter_character, regular_module, trivial_module_ke, KSModule,
    Side,
};
use crate::steinberg::{
    discrete_groupoid, disjoint_union, group_as_groupoid, pair_groupoid, FiniteGroupoid,
};

/// Largest algebra dimension built from a shorthand.
const MAX_SHORTHAND_DIM: usize = 256;

fn bad(s: &str, what: &str) -> Error {
    Error::Parse(format!("unknown {what} `{s}`"))
}

fn number(s: &str, what: &str) -> Result<usize> {
    if s.is_empty() || s.len() > 6 || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad {what} size `{s}`")));
    }
    Ok(s.parse().expect("short digit string"))
}

/// `trivial`, `i:n`, `chain:n`, `z:n`, joined by `*` for direct products.
pub fn monoid_from_shorthand(s: &str) -> Result<InverseMonoid> {
    let mut acc: Option<InverseMonoid> = None;
    for part in s.split('*') {
        let part = part.trim();
        let m = match part.split_once(':') {
            None if part == "trivial" => trivial_monoid(),
            Some(("i", n)) => symmetric_inverse_monoid(number(n, "monoid")?)?,
            Some(("chain", n)) => chain_semilattice(number(n, "monoid")?)?,
            Some(("z", n)) => cyclic_group(number(n, "monoid")?)?,
            _ => return Err(bad(part, "monoid")),
        };
        acc = Some(match acc {
            None => m,
            Some(a) => {
                let size = a.size() as u128 * m.size() as u128;
                if size > MAX_MONOID_SIZE as u128 {
                    return Err(Error::SizeCap {
                        what: "direct product size".into(),
                        size,
                        cap: MAX_MONOID_SIZE as u128,
                    });
                }
                direct_product(&a, &m)
            }
        });
    }
    acc.ok_or_else(|| bad(s, "monoid"))
}

/// `trivial-ke`, `constant`, `regular`, `filter:<element>`, joined by `+`.
/// Elements are given by index or by name.
pub fn module_from_shorthand<F: Field>(
    s: &str,
    monoid: &InverseMonoid,
    field: F,
    side: Side,
) -> Result<KSModule<F>> {
    let mut acc: Option<KSModule<F>> = None;
    for part in s.split('+') {
        let part = part.trim();
        let m = match part.split_once(':') {
            None if part == "trivial-ke" => trivial_module_ke(monoid, field.clone(), side),
            None if part == "constant" => constant_module(monoid, field.clone(), side),
            None if part == "regular" => {
                if monoid.size() > MAX_SHORTHAND_DIM {
                    return Err(Error::SizeCap {
                        what: "regular module dimension".into(),
                        size: monoid.size() as u128,
                        cap: MAX_SHORTHAND_DIM as u128,
                    });
                }
                regular_module(monoid, field.clone(), side)
            }
            Some(("filter", e)) => {
                filter_character(monoid, field.clone(), element(monoid, e)?, side)?
            }
            _ => return Err(bad(part, "module")),
        };
        acc = Some(match acc {
            None => m,
            Some(a) => direct_sum(&a, &m)?,
        });
    }
    acc.ok_or_else(|| bad(s, "module"))
}

fn element(monoid: &InverseMonoid, e: &str) -> Result<usize> {
    if let Some(i) = monoid
        .names()
        .and_then(|names| names.iter().position(|n| n == e))
    {
        return Ok(i);
    }
    match number(e, "element") {
        Ok(i) if i < monoid.size() => Ok(i),
        _ => Err(bad(e, "monoid element")),
    }
}

/// `k`, `diag:n`, `matrix:n`, `dual`, `ks`, `ke` (the last two over `monoid`).
pub fn algebra_from_shorthand<F: Field>(
    s: &str,
    field: F,
    monoid: Option<&InverseMonoid>,
) -> Result<Algebra<F>> {
    let need = || monoid.ok_or_else(|| Error::Parse(format!("algebra `{s}` needs a monoid")));
    let cap = |d: usize| {
        if d > MAX_SHORTHAND_DIM {
            Err(Error::SizeCap {
                what: "algebra dimension".into(),
                size: d as u128,
                cap: MAX_SHORTHAND_DIM as u128,
            })
        } else {
            Ok(d)
        }
    };
    let s = s.trim();
    Ok(match s.split_once(':') {
        None if s == "k" => diagonal_algebra(field, 1),
        None if s == "dual" => dual_numbers(field),
        None if s == "ks" => {
            semigroup_algebra(field, need().and_then(|m| cap(m.size()).map(|_| m))?)
        }
        None if s == "ke" => idempotent_algebra(
            field,
            need().and_then(|m| cap(m.idempotents().len()).map(|_| m))?,
        ),
        Some(("diag", n)) => diagonal_algebra(field, cap(positive(n)?)?),
        Some(("matrix", n)) => {
            let n = positive(n)?;
            cap(n.saturating_mul(n))?;
            matrix_algebra(field, n)
        }
        _ => return Err(bad(s, "algebra")),
    })
}

fn positive(n: &str) -> Result<usize> {
    match number(n, "algebra")? {
        0 => Err(Error::Parse("algebra size must be positive".into())),
        k => Ok(k),
    }
}

/// `trivial` (every `T_s = id`) or `conj` (`e ↦ ses⁻¹` on `KE(S)`, which
/// must be the algebra).
pub fn action_from_shorthand<F: Field>(
    s: &str,
    monoid: &InverseMonoid,
    algebra: &Algebra<F>,
) -> Result<UnitalAction<F>> {
    match s.trim() {
        "trivial" => Ok(trivial_action(monoid, algebra)),
        "conj" => {
            let a = conjugation_action(monoid, algebra.field().clone());
            if a.algebra() != algebra {
                return Err(Error::Parse("action `conj` needs the algebra `ke`".into()));
            }
            Ok(a)
        }
        other => Err(bad(other, "action")),
    }
}

/// `regular`: the algebra over itself.
pub fn bimodule_from_shorthand<F: Field>(s: &str, algebra: &Algebra<F>) -> Result<Bimodule<F>> {
    match s.trim() {
        "regular" => Ok(Bimodule::regular(algebra)),
        other => Err(bad(other, "bimodule")),
    }
}

/// `pair:n`, `discrete:n`, `group:zN` or `group:<monoid>`, joined by `+` for
/// disjoint unions.
pub fn groupoid_from_shorthand(s: &str) -> Result<FiniteGroupoid> {
    let mut acc: Option<FiniteGroupoid> = None;
    for part in s.split('+') {
        let part = part.trim();
        let g = match part.split_once(':') {
            Some(("pair", n)) => pair_groupoid(number(n, "groupoid")?)?,
            Some(("discrete", n)) => discrete_groupoid(number(n, "groupoid")?)?,
            Some(("group", m)) => {
                let group = match m.strip_prefix('z') {
                    Some(n) if !n.starts_with(':') => cyclic_group(number(n, "group")?)?,
                    _ => monoid_from_shorthand(m)?,
                };
                group_as_groupoid(&group)?
            }
            _ => return Err(bad(part, "groupoid")),
        };
        acc = Some(match acc {
            None => g,
            Some(a) => disjoint_union(&a, &g)?,
        });
    }
    acc.ok_or_else(|| bad(s, "groupoid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn monoids() {
        assert_eq!(monoid_from_shorthand("i:2").unwrap().size(), 7);
        assert_eq!(monoid_from_shorthand("chain:2*z:2").unwrap().size(), 4);
        assert_eq!(monoid_from_shorthand("trivial").unwrap().size(), 1);
        for bad in [
            "",
            "i:",
            "i:x",
            "q:2",
            "i:9",
            "z:0",
            "z:2048*z:2",
            "i:99999999999999",
        ] {
            assert!(monoid_from_shorthand(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn modules() {
        let s = monoid_from_shorthand("i:2").unwrap();
        assert_eq!(
            module_from_shorthand("trivial-ke", &s, Rationals, Side::Left)
                .unwrap()
                .dim(),
            4
        );
        assert_eq!(
            module_from_shorthand("regular+constant", &s, Rationals, Side::Right)
                .unwrap()
                .dim(),
            8
        );
        let c = monoid_from_shorthand("chain:3").unwrap();
        assert!(module_from_shorthand("filter:e1", &c, Rationals, Side::Left).is_ok());
        assert!(module_from_shorthand("filter:7", &c, Rationals, Side::Left).is_err());
        assert!(module_from_shorthand("nope", &c, Rationals, Side::Left).is_err());
    }

    #[test]
    fn algebras_actions_groupoids() {
        let s = monoid_from_shorthand("i:2").unwrap();
        assert_eq!(
            algebra_from_shorthand("matrix:2", Rationals, None)
                .unwrap()
                .dim(),
            4
        );
        assert_eq!(
            algebra_from_shorthand("ke", Rationals, Some(&s))
                .unwrap()
                .dim(),
            4
        );
        assert!(algebra_from_shorthand("ks", Rationals, None).is_err());
        assert!(algebra_from_shorthand("matrix:100", Rationals, None).is_err());
        let ke = algebra_from_shorthand("ke", Rationals, Some(&s)).unwrap();
        assert!(action_from_shorthand("conj", &s, &ke).is_ok());
        assert!(action_from_shorthand("conj", &s, &diagonal_algebra(Rationals, 2)).is_err());
        assert_eq!(groupoid_from_shorthand("group:z2").unwrap().arrows(), 2);
        assert_eq!(
            groupoid_from_shorthand("group:z:2*z:2").unwrap().arrows(),
            4
        );
        assert_eq!(
            groupoid_from_shorthand("pair:2+discrete:1")
                .unwrap()
                .objects(),
            3
        );
        assert!(groupoid_from_shorthand("group:i:2").is_err());
        assert!(groupoid_from_shorthand("pair:0").is_err());
    }
}
