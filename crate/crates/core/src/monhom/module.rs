use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::Field;
use crate::invmon::InverseMonoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A finite-dimensional module over the semigroup algebra `KS`, one matrix
/// per monoid element.
#[derive(Clone, Debug, PartialEq)]
pub struct KSModule<F: Field> {
    monoid: InverseMonoid,
    field: F,
    dim: usize,
    act: Vec<Matrix<F>>,
    side: Side,
}

impl<F: Field> KSModule<F> {
    /// Validates `act(1) = I` and multiplicativity on every pair.
    pub fn new(
        monoid: &InverseMonoid,
        field: F,
        dim: usize,
        act: Vec<Matrix<F>>,
        side: Side,
    ) -> Result<Self> {
        let bad = |msg: String| match side {
            Side::Left => Error::NotLeftModule(msg),
            Side::Right => Error::NotRightModule(msg),
        };
        if act.len() != monoid.size() {
            return Err(Error::ModuleMismatch(format!(
                "{} action matrices for a monoid of size {}",
                act.len(),
                monoid.size()
            )));
        }
        for (s, m) in act.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape(format!(
                    "action of {s} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if !act[monoid.unit()].is_identity() {
            return Err(bad("the unit does not act as the identity".into()));
        }
        for s in 0..monoid.size() {
            for t in 0..monoid.size() {
                let prod = match side {
                    Side::Left => act[s].mul(&act[t]),
                    Side::Right => act[t].mul(&act[s]),
                };
                if prod != act[monoid.mul(s, t)] {
                    return Err(bad(format!("action fails on the pair ({s},{t})")));
                }
            }
        }
        Ok(KSModule {
            monoid: monoid.clone(),
            field,
            dim,
            act,
            side,
        })
    }

    pub fn monoid(&self) -> &InverseMonoid {
        &self.monoid
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn act(&self, s: usize) -> &Matrix<F> {
        &self.act[s]
    }
    pub fn actions(&self) -> &[Matrix<F>] {
        &self.act
    }

    /// Errors unless this is a left module over `monoid`.
    pub fn check_left_over(&self, monoid: &InverseMonoid) -> Result<()> {
        if self.side != Side::Left {
            return Err(Error::NotLeftModule("a right module was supplied".into()));
        }
        if self.monoid != *monoid {
            return Err(Error::ModuleMismatch(
                "module is over a different monoid".into(),
            ));
        }
        Ok(())
    }
}

/// `KE(S)` with basis the idempotents in increasing order: `s·e = ses⁻¹`
/// on the left, `e·s = s⁻¹es` on the right.
pub fn trivial_module_ke<F: Field>(s: &InverseMonoid, field: F, side: Side) -> KSModule<F> {
    let idem = s.idempotents();
    let mut pos = vec![usize::MAX; s.size()];
    for (i, &e) in idem.iter().enumerate() {
        pos[e] = i;
    }
    let k = idem.len();
    let act = (0..s.size())
        .map(|x| {
            let mut m = Matrix::zeros(field.clone(), k, k);
            for (j, &e) in idem.iter().enumerate() {
                let image = match side {
                    Side::Left => s.mul(s.mul(x, e), s.inv(x)),
                    Side::Right => s.mul(s.mul(s.inv(x), e), x),
                };
                m.set(pos[image], j, field.one());
            }
            m
        })
        .collect();
    KSModule {
        monoid: s.clone(),
        field,
        dim: k,
        act,
        side,
    }
}

/// The one-dimensional module on which every element acts as 1.
pub fn constant_module<F: Field>(s: &InverseMonoid, field: F, side: Side) -> KSModule<F> {
    let act = vec![Matrix::identity(field.clone(), 1); s.size()];
    KSModule {
        monoid: s.clone(),
        field,
        dim: 1,
        act,
        side,
    }
}

/// `KS` acting on itself: `s·t = st` (left) or `t·s = ts` (right).
pub fn regular_module<F: Field>(s: &InverseMonoid, field: F, side: Side) -> KSModule<F> {
    let n = s.size();
    let act = (0..n)
        .map(|x| {
            let mut m = Matrix::zeros(field.clone(), n, n);
            for t in 0..n {
                let image = match side {
                    Side::Left => s.mul(x, t),
                    Side::Right => s.mul(t, x),
                };
                m.set(image, t, field.one());
            }
            m
        })
        .collect();
    KSModule {
        monoid: s.clone(),
        field,
        dim: n,
        act,
        side,
    }
}

/// One-dimensional module `s ↦ [f ≤ s]` for an idempotent `f`. This is a
/// character whenever `f ≤ st` forces `f ≤ s` and `f ≤ t`, e.g. on any
/// semilattice; otherwise validation rejects it.
pub fn filter_character<F: Field>(
    s: &InverseMonoid,
    field: F,
    f: usize,
    side: Side,
) -> Result<KSModule<F>> {
    if f >= s.size() || !s.is_idempotent(f) {
        return Err(Error::ModuleMismatch(format!("{f} is not an idempotent")));
    }
    let act = (0..s.size())
        .map(|x| {
            let v = if s.mul(f, x) == f {
                field.one()
            } else {
                field.zero()
            };
            Matrix::new(field.clone(), 1, 1, vec![v]).expect("1x1")
        })
        .collect();
    KSModule::new(s, field, 1, act, side)
}

/// Block-diagonal sum of two modules on the same side.
pub fn direct_sum<F: Field>(a: &KSModule<F>, b: &KSModule<F>) -> Result<KSModule<F>> {
    if a.monoid != b.monoid || a.side != b.side {
        return Err(Error::ModuleMismatch(
            "summands differ in monoid or side".into(),
        ));
    }
    let (p, q) = (a.dim, b.dim);
    let act = a
        .act
        .iter()
        .zip(&b.act)
        .map(|(x, y)| {
            Matrix::from_fn(a.field.clone(), p + q, p + q, |i, j| match (i < p, j < p) {
                (true, true) => x.get(i, j).clone(),
                (false, false) => y.get(i - p, j - p).clone(),
                _ => a.field.zero(),
            })
        })
        .collect();
    Ok(KSModule {
        monoid: a.monoid.clone(),
        field: a.field.clone(),
        dim: p + q,
        act,
        side: a.side,
    })
}
