// SPDX-License-Identifier: MIT OR Apache-2.0

//! File formats and subcommand logic for the `fvlocal` binary.

#![forbid(unsafe_code)]

pub mod document;
pub mod error;
pub mod report;
pub mod table;

use std::collections::BTreeMap;
use std::path::Path;

use fvlocal::{
    build_profile, make_fixture, occupation_mass, random_path, run_suite, Fixture, FvPath, OccupationMass,
    RandomPathParams, SuiteConfig,
};
use serde_json::Value;

pub use document::PathDocument;
pub use error::{CliError, Result};
pub use report::VerificationReport;

/// Parses `k=v,k=v` into numeric pairs.
pub fn parse_params(spec: &str) -> Result<Vec<(String, f64)>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("parameter `{kv}` is not of the form key=value")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("parameter `{}`: `{v}` is not a number", k.trim())))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn metadata(entries: &[(&str, Value)]) -> BTreeMap<String, Value> {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn params_value(params: &[(String, f64)]) -> Value {
    Value::Object(params.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect())
}

pub fn generate_fixture(name: &str, params: &[(String, f64)]) -> Result<PathDocument> {
    let borrowed: Vec<(&str, f64)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let fixture = Fixture::parse(name, &borrowed)?;
    let path = make_fixture(&fixture)?;
    Ok(PathDocument::from_path(
        &path,
        metadata(&[("fixture", Value::from(name)), ("params", params_value(params))]),
    ))
}

pub fn generate_random(seed: u64, params: &[(String, f64)]) -> Result<PathDocument> {
    let mut p = RandomPathParams::with_seed(seed);
    for (k, v) in params {
        let count = |v: f64| {
            if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
                Ok(v as usize)
            } else {
                Err(CliError::Usage(format!(
                    "parameter `{k}` must be a non-negative integer"
                )))
            }
        };
        match k.as_str() {
            "max_breakpoints" => p.max_breakpoints = count(*v)?,
            "max_degree" => p.max_degree = count(*v)?,
            "jump_probability" => p.jump_probability = *v,
            "value_scale" => p.value_scale = *v,
            other => return Err(CliError::Usage(format!("random paths have no parameter `{other}`"))),
        }
    }
    let path = random_path(&p)?;
    Ok(PathDocument::from_path(
        &path,
        metadata(&[
            ("generator", Value::from("random")),
            ("seed", Value::from(seed)),
            ("params", params_value(params)),
        ]),
    ))
}

pub fn load(file: &Path) -> Result<(PathDocument, FvPath)> {
    let doc = PathDocument::read(file)?;
    let path = doc.to_path()?;
    Ok((doc, path))
}

pub fn verify(doc: &PathDocument, path: &FvPath, config: &SuiteConfig) -> Result<VerificationReport> {
    let checks = run_suite(path, config)?;
    VerificationReport::build(path, doc.identity_hash(), config, &checks)
}

/// One line per failing check, then the counts.
pub fn summary_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in report.checks.iter().filter(|c| c.verdict == "fail") {
        let level = c.level.map_or(String::new(), |x| format!(" level={x}"));
        out.push_str(&format!(
            "FAIL {}{level} t={}: lhs={:?} rhs={:?} residual={:?} tolerance={:e}\n",
            c.name, c.horizon, c.lhs, c.rhs, c.residual, c.tolerance
        ));
    }
    let s = report.summary;
    out.push_str(&format!(
        "path {}: {} checks, pass={} fail={} excluded={}\n",
        &report.path_hash[..12],
        report.checks.len(),
        s.pass,
        s.fail,
        s.excluded
    ));
    out
}

pub fn profile_csv(path: &FvPath, t: f64, csv: &Path) -> Result<()> {
    let profile = build_profile(path, t)?;
    table::write_profile_file(&profile, csv)
}

pub fn occupation(path: &FvPath, t: f64, from: f64, to: f64) -> Result<OccupationMass> {
    Ok(occupation_mass(path, t, from, to)?)
}
