//! JSON documents for the library objects and shorthand generator names.

mod shorthand;

pub use shorthand::{
    action_from_shorthand, algebra_from_shorthand, bimodule_from_shorthand,
    groupoid_from_shorthand, module_from_shorthand, monoid_from_shorthand,
};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::crossprod::{Algebra, Bimodule, UnitalAction};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::{Field, FieldSpec, PrimeField};
use crate::invmon::{InverseMonoid, MAX_MONOID_SIZE};
use crate::monhom::{KSModule, Side};
use crate::steinberg::{FiniteGroupoid, MAX_ARROWS};

/// Largest vector-space dimension accepted from a document.
pub const MAX_DOC_DIM: usize = 1024;
/// Largest document accepted, in bytes.
pub const MAX_DOC_BYTES: usize = 64 << 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDoc {
    pub size: usize,
    /// Row-major, `table[s·size + t] = st`.
    pub table: Vec<usize>,
    pub unit: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid_ref: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub dim: usize,
    /// One row-major `dim × dim` matrix per monoid element.
    pub act: Vec<Vec<Value>>,
    #[serde(default = "left")]
    pub side: Side,
}

fn left() -> Side {
    Side::Left
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub dim: usize,
    /// `sc[(i·dim + j)·dim + k]` is the coefficient of `b_k` in `b_i b_j`.
    pub sc: Vec<Value>,
    pub unit: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid_ref: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra_ref: Option<String>,
    pub one: Vec<Vec<Value>>,
    pub theta: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra_ref: Option<String>,
    pub dim: usize,
    /// Left and right actions of each basis element, row-major.
    pub left: Vec<Vec<Value>>,
    pub right: Vec<Vec<Value>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub src: usize,
    pub rng: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDoc {
    pub objects: usize,
    pub arrows: Vec<ArrowDoc>,
    /// `[α, β, αβ]` for each composable pair.
    pub comp: Vec<[usize; 3]>,
    pub inv: Vec<usize>,
}

/// Parses a JSON document, reporting line and column on failure.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    if text.len() > MAX_DOC_BYTES {
        return Err(Error::Parse(format!(
            "document of {} bytes exceeds {MAX_DOC_BYTES}",
            text.len()
        )));
    }
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
}

/// A scalar as it appears in a report: rationals as strings, `𝔽_p` as integers.
pub fn scalar_to_json<F: Field>(f: &F, x: &F::Elem) -> Value {
    match f.spec() {
        FieldSpec::Rationals => Value::String(f.format(x)),
        FieldSpec::Prime(_) => {
            Value::Number(f.format(x).parse::<u64>().expect("element of F_p").into())
        }
    }
}

pub fn vector_to_json<F: Field>(f: &F, v: &[F::Elem]) -> Value {
    Value::Array(v.iter().map(|x| scalar_to_json(f, x)).collect())
}

/// Accepts a JSON integer or a string; rationals as `n` or `p/q`, `𝔽_p` in `0..p`.
pub fn scalar_from_json<F: Field>(f: &F, v: &Value) -> Result<F::Elem> {
    match v {
        Value::String(s) => f.parse(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => f.parse(&n.to_string()),
        other => Err(Error::Parse(format!(
            "expected an exact scalar, found {other}"
        ))),
    }
}

fn vector_from_json<F: Field>(f: &F, v: &[Value], len: usize, what: &str) -> Result<Vec<F::Elem>> {
    if v.len() != len {
        return Err(Error::Parse(format!(
            "{what}: expected {len} entries, found {}",
            v.len()
        )));
    }
    v.iter().map(|x| scalar_from_json(f, x)).collect()
}

fn matrix_from_json<F: Field>(f: &F, v: &[Value], dim: usize, what: &str) -> Result<Matrix<F>> {
    Matrix::new(
        f.clone(),
        dim,
        dim,
        vector_from_json(f, v, dim * dim, what)?,
    )
}

fn check_dim(dim: usize, what: &str) -> Result<()> {
    if dim > MAX_DOC_DIM {
        return Err(Error::SizeCap {
            what: what.into(),
            size: dim as u128,
            cap: MAX_DOC_DIM as u128,
        });
    }
    Ok(())
}

fn check_field<F: Field>(f: &F, spec: &Option<FieldSpec>) -> Result<()> {
    match spec {
        Some(s) if *s != f.spec() => Err(Error::Parse(format!(
            "document is over {s}, job is over {}",
            f.spec()
        ))),
        _ => Ok(()),
    }
}

/// A reference must be absent or name the expected input.
pub fn check_ref(r: &Option<String>, expected: &str) -> Result<()> {
    match r {
        Some(name) if name != expected => Err(Error::Parse(format!(
            "reference `{name}` does not name the `{expected}` input"
        ))),
        _ => Ok(()),
    }
}

impl MonoidDoc {
    pub fn build(&self) -> Result<InverseMonoid> {
        if self.size > MAX_MONOID_SIZE {
            return Err(Error::SizeCap {
                what: "monoid size".into(),
                size: self.size as u128,
                cap: MAX_MONOID_SIZE as u128,
            });
        }
        InverseMonoid::from_flat(self.size, self.table.clone(), self.unit, self.names.clone())
    }

    pub fn from_monoid(s: &InverseMonoid) -> Self {
        MonoidDoc {
            size: s.size(),
            table: s.table().to_vec(),
            unit: s.unit(),
            names: s.names().map(<[String]>::to_vec),
        }
    }
}

impl ModuleDoc {
    pub fn build<F: Field>(&self, monoid: &InverseMonoid, field: F) -> Result<KSModule<F>> {
        check_field(&field, &self.field)?;
        check_ref(&self.monoid_ref, "monoid")?;
        check_dim(self.dim, "module dimension")?;
        if self.act.len() != monoid.size() {
            return Err(Error::Parse(format!(
                "{} action matrices for a monoid of size {}",
                self.act.len(),
                monoid.size()
            )));
        }
        let act = self
            .act
            .iter()
            .enumerate()
            .map(|(s, m)| matrix_from_json(&field, m, self.dim, &format!("act[{s}]")))
            .collect::<Result<_>>()?;
        KSModule::new(monoid, field, self.dim, act, self.side)
    }

    pub fn from_module<F: Field>(m: &KSModule<F>) -> Self {
        let f = m.field();
        ModuleDoc {
            monoid_ref: Some("monoid".into()),
            field: Some(f.spec()),
            dim: m.dim(),
            act: m.actions().iter().map(|a| flat(f, a)).collect(),
            side: m.side(),
        }
    }
}

fn flat<F: Field>(f: &F, m: &Matrix<F>) -> Vec<Value> {
    (0..m.rows())
        .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
        .map(|(r, c)| scalar_to_json(f, m.get(r, c)))
        .collect()
}

impl AlgebraDoc {
    pub fn build<F: Field>(&self, field: F) -> Result<Algebra<F>> {
        check_field(&field, &self.field)?;
        check_dim(self.dim, "algebra dimension")?;
        let cube = self.dim.pow(3);
        let sc = vector_from_json(&field, &self.sc, cube, "sc")?;
        let unit = vector_from_json(&field, &self.unit, self.dim, "unit")?;
        Algebra::new(field, self.dim, sc, unit)
    }

    pub fn from_algebra<F: Field>(a: &Algebra<F>) -> Self {
        let f = a.field();
        AlgebraDoc {
            field: Some(f.spec()),
            dim: a.dim(),
            sc: a
                .structure_constants()
                .iter()
                .map(|x| scalar_to_json(f, x))
                .collect(),
            unit: a.unit().iter().map(|x| scalar_to_json(f, x)).collect(),
        }
    }
}

impl ActionDoc {
    /// Builds and checks every action axiom.
    pub fn build<F: Field>(
        &self,
        monoid: &InverseMonoid,
        algebra: &Algebra<F>,
    ) -> Result<UnitalAction<F>> {
        check_ref(&self.monoid_ref, "monoid")?;
        check_ref(&self.algebra_ref, "algebra")?;
        let (n, d) = (monoid.size(), algebra.dim());
        let f = algebra.field();
        if self.one.len() != n || self.theta.len() != n {
            return Err(Error::Parse(format!(
                "action lists have {} / {} entries, monoid has {n}",
                self.one.len(),
                self.theta.len()
            )));
        }
        let one = self
            .one
            .iter()
            .enumerate()
            .map(|(s, v)| vector_from_json(f, v, d, &format!("one[{s}]")))
            .collect::<Result<_>>()?;
        let theta = self
            .theta
            .iter()
            .enumerate()
            .map(|(s, m)| matrix_from_json(f, m, d, &format!("theta[{s}]")))
            .collect::<Result<_>>()?;
        UnitalAction::new(monoid, algebra, one, theta)
    }

    pub fn from_action<F: Field>(a: &UnitalAction<F>) -> Self {
        let f = a.algebra().field();
        let n = a.monoid().size();
        ActionDoc {
            monoid_ref: Some("monoid".into()),
            algebra_ref: Some("algebra".into()),
            one: (0..n)
                .map(|s| a.one(s).iter().map(|x| scalar_to_json(f, x)).collect())
                .collect(),
            theta: (0..n).map(|s| flat(f, a.theta(s))).collect(),
        }
    }
}

impl BimoduleDoc {
    pub fn build<F: Field>(&self, algebra: &Algebra<F>) -> Result<Bimodule<F>> {
        check_ref(&self.algebra_ref, "algebra")?;
        check_dim(self.dim, "bimodule dimension")?;
        let f = algebra.field();
        let d = algebra.dim();
        if self.left.len() != d || self.right.len() != d {
            return Err(Error::Parse(format!(
                "bimodule lists have {} / {} entries, algebra has dimension {d}",
                self.left.len(),
                self.right.len()
            )));
        }
        let mats = |v: &[Vec<Value>], what: &str| -> Result<Vec<Matrix<F>>> {
            v.iter()
                .enumerate()
                .map(|(i, m)| matrix_from_json(f, m, self.dim, &format!("{what}[{i}]")))
                .collect()
        };
        Bimodule::new(
            algebra,
            self.dim,
            mats(&self.left, "left")?,
            mats(&self.right, "right")?,
        )
    }

    pub fn from_bimodule<F: Field>(m: &Bimodule<F>) -> Self {
        let f = m.algebra().field();
        BimoduleDoc {
            algebra_ref: Some("algebra".into()),
            dim: m.dim(),
            left: m.lefts().iter().map(|a| flat(f, a)).collect(),
            right: m.rights().iter().map(|a| flat(f, a)).collect(),
        }
    }
}

impl GroupoidDoc {
    pub fn build(&self) -> Result<FiniteGroupoid> {
        if self.arrows.len() > MAX_ARROWS || self.objects > MAX_ARROWS {
            return Err(Error::SizeCap {
                what: "groupoid arrows".into(),
                size: self.arrows.len() as u128,
                cap: MAX_ARROWS as u128,
            });
        }
        let arrows: Vec<(usize, usize)> = self.arrows.iter().map(|a| (a.src, a.rng)).collect();
        let comp: Vec<(usize, usize, usize)> =
            self.comp.iter().map(|t| (t[0], t[1], t[2])).collect();
        FiniteGroupoid::new(self.objects, &arrows, &comp, &self.inv)
    }

    pub fn from_groupoid(g: &FiniteGroupoid) -> Self {
        GroupoidDoc {
            objects: g.objects(),
            arrows: g
                .arrow_list()
                .into_iter()
                .map(|(src, rng)| ArrowDoc { src, rng })
                .collect(),
            comp: g
                .comp_triples()
                .into_iter()
                .map(|(a, b, c)| [a, b, c])
                .collect(),
            inv: (0..g.arrows()).map(|a| g.inv(a)).collect(),
        }
    }
}

/// Parses a field name, `q` or `fp:<p>`, and builds the prime field.
pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let spec: FieldSpec = s.parse()?;
    if let FieldSpec::Prime(p) = spec {
        PrimeField::new(p)?;
    }
    Ok(spec)
}
