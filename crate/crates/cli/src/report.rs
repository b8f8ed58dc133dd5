//! Aggregated reports and their JSON and text renderings.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{lookup, run_check, CheckResult, Status, CATALOG};
use crate::config::CheckConfig;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub config: CheckConfig,
    pub checks: Vec<CheckResult>,
}

/// Selected check ids in catalog order; all of them when none are named.
pub fn selected_ids(cfg: &CheckConfig) -> Result<Vec<&'static str>, CliError> {
    if cfg.suites.is_empty() {
        return Ok(CATALOG.iter().map(|c| c.id).collect());
    }
    let chosen: BTreeSet<&str> = cfg
        .suites
        .iter()
        .map(|s| lookup(s).map(|c| c.id))
        .collect::<Result<_, _>>()?;
    Ok(CATALOG
        .iter()
        .map(|c| c.id)
        .filter(|id| chosen.contains(id))
        .collect())
}

/// Runs the selected checks concurrently; results keep catalog order.
pub fn run_suites(cfg: &CheckConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let ids = selected_ids(cfg)?;
    let checks = ids
        .par_iter()
        .map(|id| run_check(id, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report {
        version: SCHEMA_VERSION,
        config: cfg.clone(),
        checks,
    })
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let params = serde_json::to_string(&c.params).expect("params serialize");
            let _ = write!(out, "{status}  {:<22} {params}", c.id);
            if let Some(ms) = c.millis {
                let _ = write!(out, "  {ms} ms");
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      {w}");
            }
        }
        let passed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        let _ = writeln!(out, "{passed}/{} checks passed", self.checks.len());
        out
    }
}
