use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use inverse_hom::field::FieldSpec;
use inverse_hom::serial::{from_json, MAX_DOC_BYTES};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Highest degree a job may request.
pub const MAX_DEGREE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Homology,
    Cohomology,
    CrossedProduct,
    Steinberg,
    Verify,
    ResolutionCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    CollapseHomology,
    CollapseCohomology,
    SteinbergHomology,
    SteinbergCohomology,
    KsCrossedProduct,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Where an input comes from: a generator name, a file, or an inline document.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Shorthand(String),
    File(PathBuf),
    Inline(Value),
}

impl Source {
    /// `file:<path>` names a file, resolved against `base`; anything else is a shorthand.
    pub fn parse(s: &str, base: &Path) -> Source {
        match s.strip_prefix("file:") {
            Some(p) => Source::File(base.join(p)),
            None => Source::Shorthand(s.to_string()),
        }
    }

    fn from_value(v: Value, base: &Path) -> Source {
        match v {
            Value::String(s) => Source::parse(&s, base),
            other => Source::Inline(other),
        }
    }

    /// Runs `shorthand` or decodes the document and hands it to `build`.
    pub fn load<D: DeserializeOwned, T>(
        &self,
        shorthand: impl FnOnce(&str) -> inverse_hom::Result<T>,
        build: impl FnOnce(D) -> inverse_hom::Result<T>,
    ) -> Result<T> {
        match self {
            Source::Shorthand(s) => Ok(shorthand(s)?),
            Source::File(p) => {
                let text = read_bounded(p)?;
                let doc: D = from_json(&text).with_context(|| format!("in {}", p.display()))?;
                Ok(build(doc).with_context(|| format!("in {}", p.display()))?)
            }
            Source::Inline(v) => {
                let doc: D = serde_json::from_value(v.clone()).context("inline document")?;
                Ok(build(doc)?)
            }
        }
    }
}

pub fn read_bounded(p: &Path) -> Result<String> {
    let len = fs::metadata(p)
        .with_context(|| format!("cannot read {}", p.display()))?
        .len();
    if len > MAX_DOC_BYTES as u64 {
        bail!(
            "{} is {len} bytes, more than the {MAX_DOC_BYTES} allowed",
            p.display()
        );
    }
    fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
}

/// A batch job file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<Check>,
    #[serde(default)]
    pub field: Option<FieldSpec>,
    #[serde(default)]
    pub max_degree: Option<usize>,
    #[serde(default)]
    pub inputs: BTreeMap<String, Value>,
    #[serde(default)]
    pub output_format: Option<Format>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub cap_columns: Option<usize>,
}

/// A fully resolved request.
#[derive(Clone, Debug)]
pub struct Request {
    pub command: Command,
    pub check: Option<Check>,
    pub field: FieldSpec,
    pub max_degree: usize,
    pub inputs: BTreeMap<String, Source>,
    pub format: Format,
    pub seed: u64,
    pub cap_columns: usize,
    pub timing: bool,
}

impl Request {
    pub fn input(&self, role: &str) -> Result<&Source> {
        match self.inputs.get(role) {
            Some(s) => Ok(s),
            None => bail!("missing input `{role}`"),
        }
    }

    /// The first of `roles` that was supplied.
    pub fn input_any(&self, roles: &[&str]) -> Result<&Source> {
        match roles.iter().find_map(|r| self.inputs.get(*r)) {
            Some(s) => Ok(s),
            None => bail!("missing input `{}`", roles[0]),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_degree > MAX_DEGREE {
            bail!("max degree {} exceeds {MAX_DEGREE}", self.max_degree);
        }
        if let FieldSpec::Prime(p) = self.field {
            inverse_hom::field::PrimeField::new(p)?;
        }
        if (self.command == Command::Verify) != self.check.is_some() {
            bail!("`check` is required for verify and only for verify");
        }
        Ok(())
    }
}

impl JobSpec {
    pub fn into_inputs(self, base: &Path) -> BTreeMap<String, Source> {
        self.inputs
            .into_iter()
            .map(|(k, v)| (k, Source::from_value(v, base)))
            .collect()
    }
}
