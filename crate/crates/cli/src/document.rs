// SPDX-License-Identifier: MIT OR Apache-2.0

//! JSON path documents.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "horizon": 3.0,
//!   "breakpoints": [0.0, 1.0, 2.0, 3.0],
//!   "segments": [[0.0, 2.0], [2.0, -1.0], [1.0, 2.0]],
//!   "jumps": [],
//!   "metadata": {"fixture": "zigzag"}
//! }
//! ```
//!
//! Segment coefficients are in the local coordinate `u = t - t_i`, lowest
//! degree first. Floats are written in shortest round-trip form, so a
//! document reloads to the bit-identical path.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use fvlocal::{validate_path, FvPath, RawPath};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JumpEntry {
    pub index: usize,
    pub size: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathDocument {
    pub schema_version: u32,
    pub horizon: f64,
    pub breakpoints: Vec<f64>,
    pub segments: Vec<Vec<f64>>,
    pub jumps: Vec<JumpEntry>,
    #[serde(default)]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

/// The fields that determine the path, in a fixed order; hashed for the
/// report's path identity.
#[derive(Serialize)]
struct Canonical<'a> {
    horizon: f64,
    breakpoints: &'a [f64],
    segments: &'a [Vec<f64>],
    jumps: &'a [JumpEntry],
}

impl PathDocument {
    pub fn from_path(path: &FvPath, metadata: BTreeMap<String, serde_json::Value>) -> Self {
        let raw = path.raw();
        Self {
            schema_version: SCHEMA_VERSION,
            horizon: path.horizon(),
            breakpoints: raw.breakpoints,
            segments: raw.segments,
            jumps: raw
                .jumps
                .into_iter()
                .map(|(index, size)| JumpEntry { index, size })
                .collect(),
            metadata,
        }
    }

    pub fn to_raw(&self) -> RawPath {
        RawPath {
            breakpoints: self.breakpoints.clone(),
            segments: self.segments.clone(),
            jumps: self.jumps.iter().map(|j| (j.index, j.size)).collect(),
        }
    }

    /// Checks the envelope, then validates the path itself.
    pub fn to_path(&self) -> Result<FvPath> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Document {
                field: "schema_version",
                message: format!("expected {SCHEMA_VERSION}, found {}", self.schema_version),
            });
        }
        if self.breakpoints.last() != Some(&self.horizon) {
            return Err(CliError::Document {
                field: "horizon",
                message: format!("{} differs from the last breakpoint", self.horizon),
            });
        }
        Ok(validate_path(&self.to_raw())?)
    }

    /// Lowercase hex SHA-256 of the compact JSON of horizon, breakpoints,
    /// segments and jumps. Metadata does not contribute.
    pub fn identity_hash(&self) -> String {
        let canonical = Canonical {
            horizon: self.horizon,
            breakpoints: &self.breakpoints,
            segments: &self.segments,
            jumps: &self.jumps,
        };
        let bytes = serde_json::to_vec(&canonical).expect("floats in a validated path are finite");
        hex::encode(Sha256::digest(&bytes))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str, origin: &Path) -> Result<Self> {
        serde_json::from_str(text).map_err(|source| CliError::Json {
            path: origin.to_path_buf(),
            source,
        })
    }

    pub fn read(file: &Path) -> Result<Self> {
        let text = fs::read_to_string(file).map_err(|e| CliError::io(file, e))?;
        Self::from_json(&text, file)
    }

    pub fn write(&self, file: &Path) -> Result<()> {
        fs::write(file, self.to_json()).map_err(|e| CliError::io(file, e))
    }
}
