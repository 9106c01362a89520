//! Report types and their JSON and CSV renderings. Every float is written
//! with 17 significant digits so identical runs diff byte for byte.

use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::config::{GuardBits, ModelParams, RunConfig, ToleranceConfig};

/// One partition route's value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodRecord {
    pub method: String,
    pub z_re: f64,
    pub z_im: f64,
    pub terms: u64,
    /// Present only with `--timings`, so reports stay reproducible.
    pub wall_ms: Option<f64>,
}

/// A route that was requested as part of `all` but could not run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub method: String,
    pub reason: String,
}

/// Relative difference between two recorded values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    pub left: String,
    pub right: String,
    pub relative: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub seed: u64,
    pub guards: GuardBits,
    pub tolerances: ToleranceConfig,
}

impl Environment {
    pub fn from_config(cfg: &RunConfig) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: cfg.seed,
            guards: cfg.guards,
            tolerances: cfg.tolerances,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub model: ModelParams,
    pub method: String,
    pub results: Vec<MethodRecord>,
    pub skipped: Vec<Skipped>,
    pub deviations: Vec<Deviation>,
    /// Largest `|Im Z| / |Z|` over the results.
    pub max_imaginary_rel: f64,
    pub passed: bool,
    pub environment: Environment,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEvaluation {
    pub route: String,
    /// `0`, `w^k` or `xi^k`; `None` for the floating-point route.
    pub phase: Option<String>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub n: u32,
    pub p: usize,
    pub word: Vec<String>,
    pub evaluations: Vec<TraceEvaluation>,
    pub max_deviation: f64,
    pub agree: bool,
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub criterion: u32,
    pub name: String,
    pub checks: u64,
    /// Largest deviation as a fraction of its tolerance; below 1 passes.
    pub worst_ratio: f64,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
    pub passed: bool,
    pub environment: Environment,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
    pub what: Option<String>,
    pub required: Option<String>,
    pub limit: Option<String>,
}

/// Everything the tool can print.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum RunReport {
    Partition(PartitionReport),
    Trace(TraceReport),
    Verify(VerifyReport),
    Error(ErrorReport),
}

/// Pretty JSON with floats as `{:.16e}`; non-finite values become `null`.
struct FixedDigits<'a>(PrettyFormatter<'a>);

impl Formatter for FixedDigits<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(w, "{}", fmt_f64(value))
        } else {
            w.write_all(b"null")
        }
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// 17 significant digits in scientific notation.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn to_json(report: &RunReport) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedDigits(PrettyFormatter::new()));
    report.serialize(&mut ser).expect("reports serialize");
    let mut s = String::from_utf8(out).expect("serde_json writes UTF-8");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
    serde_json::from_str(text)
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

/// CSV rendering; each report kind has its own header.
pub fn to_csv(report: &RunReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut row = |fields: Vec<String>| w.write_record(&fields).expect("in-memory write");
    match report {
        RunReport::Partition(r) => {
            row(["method", "n", "p", "q", "a", "b", "Z_re", "Z_im", "wall_ms", "terms"]
                .map(String::from)
                .to_vec());
            let m = &r.model;
            for res in &r.results {
                row(vec![
                    res.method.clone(),
                    m.n.to_string(),
                    m.p.to_string(),
                    m.q.to_string(),
                    fmt_f64(m.a),
                    fmt_f64(m.b),
                    fmt_f64(res.z_re),
                    fmt_f64(res.z_im),
                    opt(res.wall_ms),
                    res.terms.to_string(),
                ]);
            }
        }
        RunReport::Trace(r) => {
            row(["route", "phase", "re", "im"].map(String::from).to_vec());
            for e in &r.evaluations {
                row(vec![e.route.clone(), e.phase.clone().unwrap_or_default(), fmt_f64(e.re), fmt_f64(e.im)]);
            }
        }
        RunReport::Verify(r) => {
            row(["criterion", "suite", "checks", "worst_ratio", "passed"].map(String::from).to_vec());
            for s in &r.suites {
                row(vec![
                    s.criterion.to_string(),
                    s.name.clone(),
                    s.checks.to_string(),
                    fmt_f64(s.worst_ratio),
                    s.passed.to_string(),
                ]);
            }
        }
        RunReport::Error(e) => {
            row(["kind", "message"].map(String::from).to_vec());
            row(vec![e.kind.clone(), e.message.clone()]);
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv writes UTF-8")
}
