//! Batch driver for the `inverse-hom` library.

pub mod job;
pub mod run;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use inverse_hom::field::FieldSpec;
use inverse_hom::monhom::DEFAULT_CAP_COLUMNS;
use inverse_hom::serial::{from_json, parse_field};
use serde_json::{json, Map, Value};

use job::{Check, Command, Format, JobSpec, Request, Source};
use run::{dispatch, Report};

#[derive(Debug, Parser)]
#[command(
    name = "invhom",
    version,
    about = "Homology of inverse monoids, crossed products and Steinberg algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// `q` or `fp:<p>`
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for the randomized checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest complex dimension built
    #[arg(long, global = true)]
    pub cap_columns: Option<usize>,
    /// Add wall-clock time to the report
    #[arg(long, global = true)]
    pub timing: bool,
}

/// Inputs by shorthand name or `file:<path>`.
#[derive(Debug, Args, Default)]
pub struct Inputs {
    #[arg(long)]
    pub monoid: Option<String>,
    #[arg(long)]
    pub module: Option<String>,
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long)]
    pub action: Option<String>,
    #[arg(long)]
    pub bimodule: Option<String>,
    #[arg(long)]
    pub groupoid: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Betti numbers of H_n(S, V)
    Homology(Inputs),
    /// Betti numbers of Hⁿ(S, V)
    Cohomology(Inputs),
    /// Builds A ⋊ S and checks the class-sum criteria
    CrossedProduct(Inputs),
    /// Builds the bisection monoid and checks Ψ
    Steinberg(Inputs),
    /// Compares the two sides of an isomorphism
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Checks the contracting homotopy of the resolution of KE(S)
    ResolutionCheck(Inputs),
    /// Runs a JSON job file
    Job { file: PathBuf },
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn execute(cli: Cli) -> Outcome {
    match build_request(cli).and_then(|req| {
        req.validate()?;
        let start = Instant::now();
        let report = dispatch(&req)?;
        Ok((req, report, start.elapsed()))
    }) {
        Ok((req, report, elapsed)) => {
            let code = exit_code(&report);
            let stdout = render(&req, report, elapsed.as_millis());
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

/// 1 for a failed verification, 0 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    match report.passed {
        Some(false) => 1,
        _ => 0,
    }
}

fn build_request(cli: Cli) -> Result<Request> {
    let o = cli.opts;
    let flag_field = o.field.as_deref().map(parse_field).transpose()?;
    let (command, check, inputs, job) = match cli.command {
        Sub::Homology(i) => (Command::Homology, None, flag_inputs(i), None),
        Sub::Cohomology(i) => (Command::Cohomology, None, flag_inputs(i), None),
        Sub::CrossedProduct(i) => (Command::CrossedProduct, None, flag_inputs(i), None),
        Sub::Steinberg(i) => (Command::Steinberg, None, flag_inputs(i), None),
        Sub::Verify { check, inputs } => (Command::Verify, Some(check), flag_inputs(inputs), None),
        Sub::ResolutionCheck(i) => (Command::ResolutionCheck, None, flag_inputs(i), None),
        Sub::Job { file } => {
            let text = job::read_bounded(&file)?;
            let spec: JobSpec =
                from_json(&text).with_context(|| format!("in {}", file.display()))?;
            let base = file.parent().map(Path::to_path_buf).unwrap_or_default();
            (
                spec.command,
                spec.check,
                BTreeMap::new(),
                Some((spec, base)),
            )
        }
    };
    let mut req = Request {
        command,
        check,
        field: flag_field.unwrap_or(FieldSpec::Rationals),
        max_degree: o.max_degree.unwrap_or(2),
        inputs,
        format: o.format.unwrap_or_default(),
        seed: o.seed.unwrap_or(0),
        cap_columns: o.cap_columns.unwrap_or(DEFAULT_CAP_COLUMNS),
        timing: o.timing,
    };
    if let Some((spec, base)) = job {
        req.field = flag_field.or(spec.field).unwrap_or(FieldSpec::Rationals);
        req.max_degree = o.max_degree.or(spec.max_degree).unwrap_or(2);
        req.format = o.format.or(spec.output_format).unwrap_or_default();
        req.seed = o.seed.or(spec.seed).unwrap_or(0);
        req.cap_columns = o
            .cap_columns
            .or(spec.cap_columns)
            .unwrap_or(DEFAULT_CAP_COLUMNS);
        req.inputs = spec.into_inputs(&base);
    }
    Ok(req)
}

fn flag_inputs(i: Inputs) -> BTreeMap<String, Source> {
    let cwd = Path::new("");
    [
        ("monoid", i.monoid),
        ("module", i.module),
        ("algebra", i.algebra),
        ("action", i.action),
        ("bimodule", i.bimodule),
        ("groupoid", i.groupoid),
    ]
    .into_iter()
    .filter_map(|(k, v)| v.map(|v| (k.to_string(), Source::parse(&v, cwd))))
    .collect()
}

fn render(req: &Request, report: Report, elapsed_ms: u128) -> String {
    let mut fields = report.fields;
    if let Some(p) = report.passed {
        fields.insert("result".into(), json!(if p { "PASS" } else { "FAIL" }));
    }
    if req.timing {
        fields.insert("elapsed_ms".into(), json!(elapsed_ms as u64));
    }
    match req.format {
        Format::Json => {
            serde_json::to_string_pretty(&Value::Object(fields)).expect("report serializes") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            text_lines(&mut out, "", &fields);
            out
        }
    }
}

fn text_lines(out: &mut String, prefix: &str, map: &Map<String, Value>) {
    for (k, v) in map {
        let key = format!("{prefix}{k}");
        match v {
            Value::Object(inner) => text_lines(out, &format!("{key}."), inner),
            Value::String(s) => out.push_str(&format!("{key}: {s}\n")),
            other => out.push_str(&format!(
                "{key}: {}\n",
                other.to_string().replace(',', ", ")
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_map_to_exit_codes() {
        let r = |passed| Report {
            fields: Map::new(),
            passed,
        };
        assert_eq!(exit_code(&r(Some(false))), 1);
        assert_eq!(exit_code(&r(Some(true))), 0);
        assert_eq!(exit_code(&r(None)), 0);
    }

    #[test]
    fn text_reports_flatten_objects() {
        let mut out = String::new();
        let v = json!({"a": [1, 2], "b": {"c": true}, "d": "1/2"});
        text_lines(&mut out, "", v.as_object().unwrap());
        assert_eq!(out, "a: [1, 2]\nb.c: true\nd: 1/2\n");
    }
}
