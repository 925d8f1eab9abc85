use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::solvers::SolveStats;

/// Machine-readable summary of one CLI run, written by `--report`.
#[derive(Debug, Default, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub winner: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<SolveStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rounds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_size: Option<usize>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn write(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))
    }
}
