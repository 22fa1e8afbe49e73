//! Command-line front end. Every subcommand prints one JSON report with
//! sorted keys; exit codes only signal operational failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Number, Value};

use crate::error::Error;
use crate::exactlin::{Int, IntMat, IntVec, LatticeBasis};
use crate::rees::{
    bounded_normality_scan, check_rn, check_rn_minus_1, corollary_check_r, lambda_spec,
    probe_point, rees_semigroup, CorollaryReport, LambdaSpec, Target,
};
use crate::semigroup::{new_semigroup, AffineSemigroup};
use crate::serre::{check_r, FaceStatus, SerreReport, Verdict, DEFAULT_BOUND};

pub const REPORT_VERSION: u64 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "serre-check",
    version,
    about = "Decide Serre's condition R_l for affine semigroup rings"
)]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facet forms and generator incidence of the positive cone.
    Facets {
        #[arg(long)]
        input: PathBuf,
    },
    /// Face-by-face test of R_l.
    Serre {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "l")]
        l: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Arithmetic test of R_r for the Rees algebra of I(lambda).
    Rees {
        #[command(flatten)]
        source: LambdaSource,
        #[arg(long = "r")]
        r: usize,
        /// Also build the Rees semigroup and run the general checker.
        #[arg(long)]
        general: bool,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Lattice points of the cone missing from the semigroup.
    Normality {
        #[arg(long, conflicts_with = "lambda")]
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', value_parser = parse_int, allow_hyphen_values = true)]
        lambda: Option<Vec<Int>>,
        #[arg(long, default_value_t = 10)]
        budget: u64,
        /// Comma-separated point to test instead of scanning.
        #[arg(long, value_delimiter = ',', value_parser = parse_int, allow_hyphen_values = true)]
        probe: Option<Vec<Int>>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct LambdaSource {
    #[arg(long, value_delimiter = ',', value_parser = parse_int, allow_hyphen_values = true)]
    lambda: Option<Vec<Int>>,
    /// JSON file of the form {"lambda": [...]}.
    #[arg(long)]
    input: Option<PathBuf>,
}

fn parse_int(s: &str) -> Result<Int, String> {
    Int::from_str(s.trim()).map_err(|e| format!("{s:?} is not an integer: {e}"))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// Parsed contents of an input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Semigroup {
        ambient_dim: usize,
        generators: IntMat,
    },
    Lambda(Vec<Int>),
}

fn int_from_json(v: &Value) -> Result<Int, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => {
            return Err(CliError::Input(format!(
                "expected an integer, found {other}"
            )))
        }
    };
    Int::from_str(&text).map_err(|_| CliError::Input(format!("{text:?} is not an integer")))
}

fn int_list(v: &Value, what: &str) -> Result<Vec<Int>, CliError> {
    v.as_array()
        .ok_or_else(|| CliError::Input(format!("{what} must be an array")))?
        .iter()
        .map(int_from_json)
        .collect()
}

pub fn parse_input(text: &str) -> Result<Input, CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Input("input must be a JSON object".into()))?;
    if let Some(lambda) = obj.get("lambda") {
        return Ok(Input::Lambda(int_list(lambda, "lambda")?));
    }
    let dim = obj
        .get("ambient_dim")
        .ok_or_else(|| CliError::Input("missing \"ambient_dim\" or \"lambda\"".into()))?;
    let dim = int_from_json(dim)?;
    let ambient_dim = usize::try_from(&dim)
        .ok()
        .filter(|&d| d > 0)
        .ok_or_else(|| CliError::Input(format!("ambient_dim {dim} is not a positive integer")))?;
    let rows = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("\"generators\" must be an array of vectors".into()))?;
    let mut gens = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let entries = int_list(row, "a generator")?;
        if entries.len() != ambient_dim {
            return Err(CliError::Input(format!(
                "generator {i} has {} entries, expected {ambient_dim}",
                entries.len()
            )));
        }
        gens.push(IntVec::new(entries));
    }
    let generators = IntMat::new(ambient_dim, gens)?;
    Ok(Input::Semigroup {
        ambient_dim,
        generators,
    })
}

fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_input(&text)
}

fn read_semigroup_input(path: &Path) -> Result<IntMat, CliError> {
    match read_input(path)? {
        Input::Semigroup { generators, .. } => Ok(generators),
        Input::Lambda(_) => Err(CliError::Input(
            "expected {\"ambient_dim\", \"generators\"}, found a lambda input".into(),
        )),
    }
}

fn read_lambda_input(path: &Path) -> Result<Vec<Int>, CliError> {
    match read_input(path)? {
        Input::Lambda(l) => Ok(l),
        Input::Semigroup { .. } => Err(CliError::Input("expected {\"lambda\": [...]}".into())),
    }
}

pub fn int_json(x: &Int) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

pub fn vec_json(v: &IntVec) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

fn rows_json<'a>(rows: impl IntoIterator<Item = &'a IntVec>) -> Value {
    Value::Array(rows.into_iter().map(vec_json).collect())
}

fn lattice_json(b: &LatticeBasis) -> Value {
    rows_json(b.hnf_rows())
}

fn ints_json(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int_json).collect())
}

fn semigroup_echo(gens: &IntMat) -> Value {
    json!({
        "ambient_dim": gens.ncols(),
        "generators": rows_json(gens.rows()),
    })
}

fn envelope(command: &str, parameters: Value, input: Value) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("report_version".into(), json!(REPORT_VERSION));
    m.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    m.insert("parameters".into(), parameters);
    m.insert("input".into(), input);
    m
}

fn cone_json(s: &AffineSemigroup) -> Map<String, Value> {
    let cone = s.cone();
    let mut m = Map::new();
    m.insert(
        "facets".into(),
        rows_json(cone.facets().iter().map(|f| f.coeffs())),
    );
    m.insert("incidence".into(), json!(cone.incidence()));
    m.insert("theta".into(), vec_json(s.theta()));
    m.insert("pointed".into(), json!(s.is_pointed()));
    m
}

fn status_json(status: &FaceStatus) -> (Value, Value) {
    let reason = match status {
        FaceStatus::Fails(r) => json!(r.as_str()),
        _ => Value::Null,
    };
    (json!(status.verdict().as_str()), reason)
}

pub fn serre_report_json(report: &SerreReport) -> Value {
    let faces: Vec<Value> = report
        .verdicts
        .iter()
        .map(|v| {
            let (status, reason) = status_json(&v.status);
            json!({
                "facets": v.face.facet_set(),
                "codim": v.k,
                "facet_forms": rows_json(v.facet_forms.iter().map(|f| f.coeffs())),
                "facet_count_ok": v.facet_count_ok,
                "group_ok": v.group_ok,
                "face_group": lattice_json(&v.face_group),
                "kernel": lattice_json(&v.kernel),
                "witnesses": v.gamma_witnesses.as_ref().map(rows_json),
                "status": status,
                "reason": reason,
            })
        })
        .collect();
    json!({
        "l": report.ell,
        "bound": report.bound,
        "faces": faces,
        "overall": report.overall.as_str(),
    })
}

fn lambda_json(spec: &LambdaSpec) -> Value {
    json!({
        "lambda": ints_json(spec.lambda()),
        "L": int_json(spec.l()),
        "omega": ints_json(spec.omega()),
        "d": int_json(spec.d()),
    })
}

fn corollary_json(report: &CorollaryReport) -> Value {
    let subsets: Vec<Value> = report
        .subsets
        .iter()
        .map(|s| {
            let checks: Vec<Value> = s
                .checks
                .iter()
                .map(|c| {
                    let (target, index) = match c.target {
                        Target::LMinusOmega(i) => ("L-omega", json!(i)),
                        Target::LPlusOne => ("L+1", Value::Null),
                    };
                    json!({
                        "target": target,
                        "index": index,
                        "value": int_json(&c.value),
                        "member": c.member,
                    })
                })
                .collect();
            json!({
                "removed": s.removed,
                "kept": s.kept,
                "checks": checks,
                "witnesses": s.witnesses.as_ref().map(rows_json),
                "ok": s.ok(),
            })
        })
        .collect();
    let verdict = if report.holds {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    json!({
        "r": report.r,
        "subsets": subsets,
        "verdict": verdict.as_str(),
    })
}

fn cmd_facets(input: &Path) -> Result<Value, CliError> {
    let gens = read_semigroup_input(input)?;
    let s = new_semigroup(&gens)?;
    let mut m = envelope("facets", json!({}), semigroup_echo(&gens));
    m.extend(cone_json(&s));
    Ok(Value::Object(m))
}

fn cmd_serre(input: &Path, l: usize, bound: u64) -> Result<Value, CliError> {
    let gens = read_semigroup_input(input)?;
    let s = new_semigroup(&gens)?;
    let report = check_r(&s, l, bound)?;
    let mut m = envelope(
        "serre",
        json!({ "l": l, "bound": bound }),
        semigroup_echo(&gens),
    );
    m.extend(cone_json(&s));
    m.insert("serre".into(), serre_report_json(&report));
    m.insert("overall".into(), json!(report.overall.as_str()));
    Ok(Value::Object(m))
}

fn lambda_from(source: &LambdaSource) -> Result<Vec<Int>, CliError> {
    match (&source.lambda, &source.input) {
        (Some(l), _) => Ok(l.clone()),
        (None, Some(path)) => read_lambda_input(path),
        (None, None) => Err(CliError::Input(
            "one of --lambda or --input is required".into(),
        )),
    }
}

fn cmd_rees(lambda: &[Int], r: usize, general: bool, bound: u64) -> Result<Value, CliError> {
    let spec = lambda_spec(lambda)?;
    let fast = corollary_check_r(&spec, r)?;
    let fast_verdict = if fast.holds {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let n = spec.n();

    let mut m = envelope(
        "rees",
        json!({ "r": r, "general": general, "bound": bound }),
        json!({ "lambda": ints_json(lambda) }),
    );
    m.insert("spec".into(), lambda_json(&spec));
    m.insert("fast_path".into(), corollary_json(&fast));
    if r == n {
        m.insert("all_lambda_equal".into(), json!(check_rn(&spec)));
    }
    if n >= 3 && r == n - 1 {
        m.insert(
            "omega_pairwise_coprime".into(),
            json!(check_rn_minus_1(&spec)?),
        );
    }
    if general {
        let s = rees_semigroup(&spec)?;
        let report = check_r(&s, r, bound)?;
        let agreement = match report.overall {
            Verdict::Inconclusive => Value::Null,
            v => json!(v == fast_verdict),
        };
        m.insert("general".into(), serre_report_json(&report));
        m.insert("agreement".into(), agreement);
    }
    m.insert("overall".into(), json!(fast_verdict.as_str()));
    Ok(Value::Object(m))
}

fn cmd_normality(
    input: Option<&Path>,
    lambda: Option<&[Int]>,
    budget: u64,
    probe: Option<&[Int]>,
) -> Result<Value, CliError> {
    let (s, echo) = match (input, lambda) {
        (_, Some(l)) => {
            let spec = lambda_spec(l)?;
            (rees_semigroup(&spec)?, json!({ "lambda": ints_json(l) }))
        }
        (Some(path), None) => match read_input(path)? {
            Input::Semigroup { generators, .. } => {
                let echo = semigroup_echo(&generators);
                (new_semigroup(&generators)?, echo)
            }
            Input::Lambda(l) => {
                let spec = lambda_spec(&l)?;
                (rees_semigroup(&spec)?, json!({ "lambda": ints_json(&l) }))
            }
        },
        (None, None) => {
            return Err(CliError::Input(
                "one of --input or --lambda is required".into(),
            ));
        }
    };

    let mut m = match probe {
        Some(p) => {
            let z = IntVec::new(p.to_vec());
            let result = probe_point(&s, &z)?;
            let mut m = envelope("normality", json!({ "probe": vec_json(&z) }), echo);
            m.insert(
                "probe".into(),
                json!({
                    "point": vec_json(&z),
                    "in_cone": result.in_cone,
                    "in_semigroup": result.in_semigroup,
                    "gap": result.is_gap(),
                    "verdict": result.describe(),
                }),
            );
            m
        }
        None => {
            let gaps = bounded_normality_scan(&s, &Int::from(budget))?;
            let mut m = envelope("normality", json!({ "budget": budget }), echo);
            m.insert("gaps".into(), rows_json(&gaps));
            m.insert("gap_count".into(), json!(gaps.len()));
            m
        }
    };
    m.insert("theta".into(), vec_json(s.theta()));
    Ok(Value::Object(m))
}

/// Runs a parsed command and returns its report.
pub fn run(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Facets { input } => cmd_facets(input),
        Command::Serre { input, l, bound } => cmd_serre(input, *l, *bound),
        Command::Rees {
            source,
            r,
            general,
            bound,
        } => cmd_rees(&lambda_from(source)?, *r, *general, *bound),
        Command::Normality {
            input,
            lambda,
            budget,
            probe,
        } => cmd_normality(
            input.as_deref(),
            lambda.as_deref(),
            *budget,
            probe.as_deref(),
        ),
    }
}

pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { 0 };
        }
    };
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| {
        run(&cli).and_then(|report| emit(&cli, &render(&report)))
    }));
    match outcome {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
        Err(_) => EXIT_INTERNAL,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numbers_and_strings() {
        let input = parse_input(
            r#"{"ambient_dim": 2, "generators": [[1, 0], ["0", "123456789012345678901234567890"]]}"#,
        )
        .unwrap();
        let Input::Semigroup { generators, .. } = input else {
            panic!("wrong input kind");
        };
        assert_eq!(
            generators.row(1)[1],
            Int::from_str("123456789012345678901234567890").unwrap()
        );
    }

    #[test]
    fn rejects_ragged_and_fractional_input() {
        assert!(parse_input(r#"{"ambient_dim": 2, "generators": [[1, 0], [1]]}"#).is_err());
        assert!(parse_input(r#"{"ambient_dim": 2, "generators": [[1.5, 0]]}"#).is_err());
        assert!(parse_input(r#"{"ambient_dim": 0, "generators": []}"#).is_err());
        assert!(parse_input(r#"[1, 2]"#).is_err());
        assert!(parse_input(r#"{"generators": [[1]]}"#).is_err());
    }

    #[test]
    fn lambda_input() {
        assert_eq!(
            parse_input(r#"{"lambda": [2, "3"]}"#).unwrap(),
            Input::Lambda(vec![Int::from(2), Int::from(3)])
        );
    }

    #[test]
    fn big_numbers_serialize_exactly() {
        let x = Int::from_str("-98765432109876543210987654321").unwrap();
        assert_eq!(
            serde_json::to_string(&int_json(&x)).unwrap(),
            "-98765432109876543210987654321"
        );
    }

    #[test]
    fn echo_round_trips() {
        let text = r#"{"ambient_dim": 3, "generators": [[1, 0, 0], [1, 3, 0], [1, 0, 3]]}"#;
        let input = parse_input(text).unwrap();
        let Input::Semigroup { generators, .. } = &input else {
            panic!("wrong input kind");
        };
        let echoed = render(&semigroup_echo(generators));
        assert_eq!(parse_input(&echoed).unwrap(), input);
    }
}
