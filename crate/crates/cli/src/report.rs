// SPDX-License-Identifier: MIT OR Apache-2.0

//! Verification reports. Non-finite numbers (the sides of excluded checks)
//! are written as `null`.

use std::fs;
use std::path::Path;

use fvlocal::identities::{self, CheckVerdict, IdentityCheck};
use fvlocal::{FvPath, SuiteConfig, SuiteSummary};
use serde::Serialize;

use crate::error::{CliError, Result};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tolerances {
    pub base: f64,
    pub scale: f64,
    pub level: f64,
    pub continuity: f64,
    /// Used by the density and crossing checks.
    pub variation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSettings {
    pub levels: usize,
    pub intervals: usize,
    pub horizons: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub excluded: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub level: Option<f64>,
    pub horizon: f64,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub verdict: &'static str,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub path_hash: String,
    pub tolerances: Tolerances,
    pub settings: SuiteSettings,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

pub fn verdict_name(v: CheckVerdict) -> &'static str {
    match v {
        CheckVerdict::Pass => "pass",
        CheckVerdict::Fail => "fail",
        CheckVerdict::Excluded => "excluded",
    }
}

impl From<&IdentityCheck> for CheckRecord {
    fn from(c: &IdentityCheck) -> Self {
        Self {
            name: c.name,
            level: c.level,
            horizon: c.horizon,
            lhs: finite(c.lhs),
            rhs: finite(c.rhs),
            residual: finite(c.residual),
            tolerance: c.tolerance,
            verdict: verdict_name(c.verdict),
            notes: c.notes.clone(),
        }
    }
}

impl VerificationReport {
    pub fn build(path: &FvPath, path_hash: String, config: &SuiteConfig, checks: &[IdentityCheck]) -> Result<Self> {
        let tally = SuiteSummary::tally(checks);
        Ok(Self {
            schema_version: REPORT_SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            path_hash,
            tolerances: Tolerances {
                base: identities::BASE_TOLERANCE,
                scale: config.tolerance_scale,
                level: path.level_tolerance(),
                continuity: path.continuity_tolerance(),
                variation: identities::variation_tolerance(path, config.tolerance_scale)?,
            },
            settings: SuiteSettings {
                levels: config.levels,
                intervals: config.intervals,
                horizons: config.horizons,
                seed: config.seed,
            },
            summary: Summary {
                pass: tally.pass,
                fail: tally.fail,
                excluded: tally.excluded,
            },
            checks: checks.iter().map(CheckRecord::from).collect(),
        })
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(self.summary.fail > 0)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, file: &Path) -> Result<()> {
        fs::write(file, self.to_json()).map_err(|e| CliError::io(file, e))
    }
}
