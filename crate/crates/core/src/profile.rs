// SPDX-License-Identifier: MIT OR Apache-2.0

//! Signed and absolute local times as piecewise-constant functions of the
//! level.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::level::{self, EventKind};
use crate::path::FvPath;
use crate::poly::PolynomialFn;

/// `(ℓ^x(t), λ^x(t), N_x(t))` at one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LocalTimes {
    /// Continuous up-crossings minus continuous down-crossings.
    pub signed: i64,
    /// Continuous up-crossings plus continuous down-crossings.
    pub absolute: i64,
    /// Every passage: continuous and jump crossings and touches.
    pub crossings: i64,
}

pub fn local_times_at(path: &FvPath, x: f64, t: f64) -> Result<LocalTimes> {
    let events = level::level_events(path, x, t)?;
    let mut out = LocalTimes {
        crossings: events.len() as i64,
        ..LocalTimes::default()
    };
    for e in &events {
        match e.kind {
            EventKind::ContinuousUp => {
                out.signed += 1;
                out.absolute += 1;
            }
            EventKind::ContinuousDown => {
                out.signed -= 1;
                out.absolute += 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Exact local-time profile at a fixed horizon: one [`LocalTimes`] record for
/// each open interval between consecutive critical values.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalTimeProfile {
    boundaries: Vec<f64>,
    cells: Vec<LocalTimes>,
    horizon: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileCell {
    pub lower: f64,
    pub upper: f64,
    pub times: LocalTimes,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ProfileIntegral {
    /// `∫ w(x) ℓ^x(t) dx`
    pub signed: f64,
    /// `∫ w(x) λ^x(t) dx`
    pub absolute: f64,
    /// `∫ w(x) N_x(t) dx`
    pub count: f64,
}

pub fn build_profile(path: &FvPath, t: f64) -> Result<LocalTimeProfile> {
    if !(t > 0.0 && t <= path.horizon()) {
        return Err(Error::OutOfDomain {
            t,
            horizon: path.horizon(),
        });
    }
    let boundaries = level::critical_values(path, t)?;
    let cells = boundaries
        .windows(2)
        .map(|w| local_times_at(path, 0.5 * (w[0] + w[1]), t))
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalTimeProfile {
        boundaries,
        cells,
        horizon: t,
    })
}

impl LocalTimeProfile {
    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn cells(&self) -> impl Iterator<Item = ProfileCell> + '_ {
        self.boundaries
            .windows(2)
            .zip(&self.cells)
            .map(|(w, &times)| ProfileCell {
                lower: w[0],
                upper: w[1],
                times,
            })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Profile value at `x`: `None` on a boundary, zeros outside the range.
    pub fn at(&self, x: f64) -> Option<LocalTimes> {
        let k = self.boundaries.partition_point(|&b| b < x);
        if self.boundaries.get(k) == Some(&x) {
            return None;
        }
        if k == 0 || k == self.boundaries.len() {
            return Some(LocalTimes::default());
        }
        Some(self.cells[k - 1])
    }

    /// Integrates `weight` against the three densities over `[a, b]`;
    /// infinite endpoints are allowed.
    pub fn integrate(&self, weight: &PolynomialFn, a: f64, b: f64) -> Result<ProfileIntegral> {
        if !(a < b) {
            return Err(Error::EmptyInterval { a, b });
        }
        let anti = weight.antiderivative();
        let mut out = ProfileIntegral::default();
        for cell in self.cells() {
            let lo = cell.lower.max(a);
            let hi = cell.upper.min(b);
            if lo >= hi {
                continue;
            }
            let m = anti.eval(hi) - anti.eval(lo);
            out.signed += cell.times.signed as f64 * m;
            out.absolute += cell.times.absolute as f64 * m;
            out.count += cell.times.crossings as f64 * m;
        }
        Ok(out)
    }

    /// Integral over the whole real line.
    pub fn integrate_all(&self, weight: &PolynomialFn) -> ProfileIntegral {
        self.integrate(weight, f64::NEG_INFINITY, f64::INFINITY)
            .expect("unbounded interval is non-empty")
    }
}

pub fn integrate_against_profile(
    profile: &LocalTimeProfile,
    weight: &PolynomialFn,
    a: f64,
    b: f64,
) -> Result<ProfileIntegral> {
    profile.integrate(weight, a, b)
}
