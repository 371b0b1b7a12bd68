//! Catalog, runner and suite behind the `hlq` binary.

pub mod args;
pub mod catalog;

use std::time::Instant;

use clap::ValueEnum;
use hlq_core::identities::{Status, VerifyReport};
use rayon::prelude::*;
use serde::Serialize;

pub use args::{CliError, Params, RunArgs};
pub use catalog::{catalog, find, Entry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// An identity id plus user overrides; unset fields come from the catalog
/// defaults of `profile`.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub identity_id: String,
    pub overrides: RunArgs,
    pub profile: Profile,
}

impl Entry {
    pub fn defaults(&self, profile: Profile) -> &'static str {
        match profile {
            Profile::Quick => self.quick,
            Profile::Full => self.full,
        }
    }
}

/// Resolves the configuration completely, then runs the check.
pub fn run(config: &RunConfig) -> Result<VerifyReport, CliError> {
    let entry = find(&config.identity_id)
        .ok_or_else(|| CliError::Usage(format!("unknown identity {:?}; see `hlq list`", config.identity_id)))?;
    let base = RunArgs::parse_defaults(entry.defaults(config.profile))?;
    let params = config.overrides.clone().over(&base).resolve()?;
    (entry.run)(&params)
}

pub fn exit_code(report: &VerifyReport) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteMember {
    pub identity_id: String,
    pub status: Status,
    pub runtime_ms: u64,
    pub error: Option<String>,
    pub report: Option<VerifyReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub profile: Profile,
    pub seed: u64,
    /// `fail` iff some member failed.
    pub status: Status,
    pub members: Vec<SuiteMember>,
    pub runtime_ms: u64,
}

impl SuiteReport {
    pub fn exit_code(&self) -> i32 {
        if self.status == Status::Fail {
            1
        } else {
            0
        }
    }
}

/// `fail` if any member failed, `pass` if all passed, otherwise `inconclusive`.
pub fn aggregate(statuses: impl IntoIterator<Item = Status>) -> Status {
    let mut all_pass = true;
    for s in statuses {
        match s {
            Status::Fail => return Status::Fail,
            Status::Pass => {}
            Status::Inconclusive => all_pass = false,
        }
    }
    if all_pass {
        Status::Pass
    } else {
        Status::Inconclusive
    }
}

/// Runs every catalog entry once with the profile's defaults.
pub fn suite(profile: Profile, seed: Option<u64>) -> SuiteReport {
    let start = Instant::now();
    let overrides = RunArgs { seed, ..RunArgs::default() };
    let entries = catalog();
    let members: Vec<SuiteMember> = entries
        .par_iter()
        .map(|e| {
            let t = Instant::now();
            let config = RunConfig { identity_id: e.id.to_string(), overrides: overrides.clone(), profile };
            let (status, error, report) = match run(&config) {
                Ok(r) => (r.status, None, Some(r)),
                Err(err) => (Status::Fail, Some(err.to_string()), None),
            };
            SuiteMember {
                identity_id: e.id.to_string(),
                status,
                runtime_ms: t.elapsed().as_millis() as u64,
                error,
                report,
            }
        })
        .collect();
    let status = aggregate(members.iter().map(|m| m.status));
    SuiteReport {
        profile,
        seed: seed.unwrap_or(hlq_core::qalgebra::eval::DEFAULT_SEED),
        status,
        members,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

pub fn render_report(r: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => r.to_json(),
        Format::Text => {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut out =
                format!("{}  {}  [{}]  {} ms\n", r.identity_id, r.status.as_str(), params.join(" "), r.runtime_ms);
            for (k, v) in &r.checked_bounds {
                if k != "plan" {
                    out.push_str(&format!("  {k}: {v}\n"));
                }
            }
            if let Some(m) = &r.first_mismatch {
                out.push_str(&format!("  first mismatch: {}\n", serde_json::to_string(m).expect("serializes")));
            }
            out
        }
    }
}

pub fn render_suite(s: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(s).expect("serializes"),
        Format::Text => {
            let mut out = String::new();
            for m in &s.members {
                out.push_str(&format!("{:<16} {:<12} {:>8} ms", m.identity_id, m.status.as_str(), m.runtime_ms));
                if let Some(e) = &m.error {
                    out.push_str(&format!("  error: {e}"));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "suite {:?}: {} ({} identities, {} ms)\n",
                s.profile,
                s.status.as_str(),
                s.members.len(),
                s.runtime_ms
            ));
            out
        }
    }
}

pub fn render_catalog(format: Format) -> String {
    let entries = catalog();
    match format {
        Format::Json => {
            let rows: Vec<_> = entries
                .iter()
                .map(|e| serde_json::json!({"id": e.id, "anchor": e.anchor, "quick": e.quick, "full": e.full}))
                .collect();
            serde_json::to_string_pretty(&rows).expect("serializes")
        }
        Format::Text => {
            entries.iter().map(|e| format!("{:<16} {}\n{:<16} quick: {}\n", e.id, e.anchor, "", e.quick)).collect()
        }
    }
}
