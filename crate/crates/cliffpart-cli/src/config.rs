//! Run configuration: flags, an optional TOML file with the same keys, and
//! guard overrides from `CLIFFPART_GUARD_BITS`.

use std::path::Path;

use cliffpart::guards::Guards;
use cliffpart::potts::{LatticeModel, Method};
use cliffpart::tolerances;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const GUARD_ENV: &str = "CLIFFPART_GUARD_BITS";
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Guard limits as powers of two, plus the trace word length cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuardBits {
    pub dense: u32,
    pub brute: u32,
    pub multisum: u32,
    pub trace_len: usize,
}

impl Default for GuardBits {
    fn default() -> Self {
        Self {
            dense: 12,
            brute: 20,
            multisum: 24,
            trace_len: Guards::default().trace_word_len,
        }
    }
}

impl GuardBits {
    pub fn to_guards(self) -> Guards {
        let pow = |b: u32| 1u128.checked_shl(b).unwrap_or(u128::MAX);
        Guards {
            dense_dim: pow(self.dense),
            brute_states: pow(self.brute),
            multisum_terms: pow(self.multisum),
            trace_word_len: self.trace_len,
        }
    }

    /// Applies `dense=12,brute=20,multisum=24`; keys may be omitted.
    pub fn apply_env(&mut self, value: &str) -> Result<(), CliError> {
        for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || CliError::Usage(format!("{GUARD_ENV}: cannot read {item:?}; expected key=bits"));
            let (key, bits) = item.split_once('=').ok_or_else(bad)?;
            let bits: u32 = bits.trim().parse().map_err(|_| bad())?;
            if bits > 120 {
                return Err(bad());
            }
            match key.trim() {
                "dense" => self.dense = bits,
                "brute" => self.brute = bits,
                "multisum" => self.multisum = bits,
                _ => return Err(bad()),
            }
        }
        Ok(())
    }
}

/// Which partition routes to run; serialized as the flag value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum MethodSelector {
    All,
    One(Method),
}

impl MethodSelector {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if s == "all" {
            return Ok(Self::All);
        }
        Method::parse(s)
            .map(Self::One)
            .ok_or_else(|| CliError::Usage(format!("unknown method {s:?}")))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::One(m) => m.as_str(),
        }
    }

    pub fn methods(self) -> Vec<Method> {
        match self {
            Self::All => Method::ALL.to_vec(),
            Self::One(m) => vec![m],
        }
    }
}

impl From<MethodSelector> for String {
    fn from(m: MethodSelector) -> String {
        m.as_str().to_string()
    }
}

impl TryFrom<String> for MethodSelector {
    type Error = CliError;

    fn try_from(s: String) -> Result<Self, CliError> {
        Self::parse(&s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub pipeline_rel: f64,
    pub closed_form_rel: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            pipeline_rel: tolerances::PIPELINE_REL,
            closed_form_rel: tolerances::CLOSED_FORM_REL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub n: u32,
    pub p: usize,
    pub q: usize,
    pub a: f64,
    pub b: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self { n: 2, p: 2, q: 2, a: 0.3, b: 0.2 }
    }
}

impl ModelParams {
    pub fn model(&self) -> Result<LatticeModel, CliError> {
        LatticeModel::new(self.n, self.p, self.q, self.a, self.b).map_err(|e| CliError::Usage(e.to_string()))
    }
}

/// Keys accepted in a `--config` file; every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n: Option<u32>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub method: Option<String>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub timings: Option<bool>,
    pub dense_bits: Option<u32>,
    pub brute_bits: Option<u32>,
    pub multisum_bits: Option<u32>,
    pub trace_len: Option<usize>,
    pub pipeline_tol: Option<f64>,
    pub closed_form_tol: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }

    /// Overlays `other` on `self`, `other` winning.
    pub fn overlay(self, other: FileConfig) -> FileConfig {
        FileConfig {
            n: other.n.or(self.n),
            p: other.p.or(self.p),
            q: other.q.or(self.q),
            a: other.a.or(self.a),
            b: other.b.or(self.b),
            method: other.method.or(self.method),
            format: other.format.or(self.format),
            seed: other.seed.or(self.seed),
            timings: other.timings.or(self.timings),
            dense_bits: other.dense_bits.or(self.dense_bits),
            brute_bits: other.brute_bits.or(self.brute_bits),
            multisum_bits: other.multisum_bits.or(self.multisum_bits),
            trace_len: other.trace_len.or(self.trace_len),
            pipeline_tol: other.pipeline_tol.or(self.pipeline_tol),
            closed_form_tol: other.closed_form_tol.or(self.closed_form_tol),
        }
    }
}

/// Fully resolved settings shared by every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub model: ModelParams,
    pub method: MethodSelector,
    pub format: Format,
    pub seed: u64,
    pub timings: bool,
    pub guards: GuardBits,
    pub tolerances: ToleranceConfig,
}

impl RunConfig {
    /// Defaults, then the guard environment value, then the merged file and flag keys.
    pub fn resolve(keys: FileConfig, guard_env: Option<&str>) -> Result<Self, CliError> {
        let mut guards = GuardBits::default();
        if let Some(v) = guard_env {
            guards.apply_env(v)?;
        }
        guards.dense = keys.dense_bits.unwrap_or(guards.dense);
        guards.brute = keys.brute_bits.unwrap_or(guards.brute);
        guards.multisum = keys.multisum_bits.unwrap_or(guards.multisum);
        guards.trace_len = keys.trace_len.unwrap_or(guards.trace_len);
        let d = ModelParams::default();
        let model = ModelParams {
            n: keys.n.unwrap_or(d.n),
            p: keys.p.unwrap_or(d.p),
            q: keys.q.unwrap_or(d.q),
            a: keys.a.unwrap_or(d.a),
            b: keys.b.unwrap_or(d.b),
        };
        let method = match keys.method.as_deref() {
            Some(s) => MethodSelector::parse(s)?,
            None => MethodSelector::All,
        };
        let td = ToleranceConfig::default();
        let tolerances = ToleranceConfig {
            pipeline_rel: keys.pipeline_tol.unwrap_or(td.pipeline_rel),
            closed_form_rel: keys.closed_form_tol.unwrap_or(td.closed_form_rel),
        };
        for t in [tolerances.pipeline_rel, tolerances.closed_form_rel] {
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::Usage(format!("tolerance {t} must be positive")));
            }
        }
        Ok(Self {
            model,
            method,
            format: keys.format.unwrap_or(Format::Json),
            seed: keys.seed.unwrap_or(DEFAULT_SEED),
            timings: keys.timings.unwrap_or(false),
            guards,
            tolerances,
        })
    }
}
