use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use super::Tier;
use crate::error::{Error, Result};

/// Which side produced a check's answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckRoute {
    Graph,
    Group,
    Both,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub route: CheckRoute,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub millis: u64,
}

impl Check {
    pub fn new(name: &str, route: CheckRoute, pass: bool, started: Instant) -> Self {
        Check {
            name: name.to_string(),
            route,
            pass,
            witness: None,
            millis: started.elapsed().as_millis() as u64,
        }
    }

    pub fn with_witness<T: Serialize>(mut self, w: &T) -> Self {
        self.witness = serde_json::to_value(w).ok();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub spec: String,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub os: String,
    pub arch: String,
    pub threads: usize,
    pub tier: Tier,
}

impl Environment {
    pub fn current(tier: Tier) -> Self {
        Environment {
            version: env!("CARGO_PKG_VERSION").to_string(),
            os: std::env::consts::OS.to_string(),
            arch: std::env::consts::ARCH.to_string(),
            threads: rayon::current_num_threads(),
            tier,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub entries: Vec<EntryReport>,
    pub env: Environment,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed())
    }

    /// `(spec, check name)` of every failing check.
    pub fn failures(&self) -> Vec<(String, String)> {
        self.entries
            .iter()
            .flat_map(|e| {
                e.checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| (e.spec.clone(), c.name.clone()))
            })
            .collect()
    }

    pub fn check_count(&self) -> usize {
        self.entries.iter().map(|e| e.checks.len()).sum()
    }
}

/// Writes `<dir>/<suite>-<unix seconds>.json` and returns the path.
pub fn write_report(report: &SuiteReport, dir: &Path) -> Result<PathBuf> {
    let io = |e: std::io::Error| Error::DataFile(dir.display().to_string(), e.to_string());
    std::fs::create_dir_all(dir).map_err(io)?;
    let stamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let path = dir.join(format!("{}-{stamp}.json", report.suite));
    let mut text = serde_json::to_string_pretty(report)
        .map_err(|e| Error::DataFile(path.display().to_string(), e.to_string()))?;
    text.push('\n');
    std::fs::write(&path, text).map_err(io)?;
    Ok(path)
}
