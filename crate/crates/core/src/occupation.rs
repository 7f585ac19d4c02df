// SPDX-License-Identifier: MIT OR Apache-2.0

//! Signed and absolute occupation measures of value intervals.

use crate::error::{Error, Result};
use crate::level;
use crate::path::FvPath;
use crate::poly::PolynomialFn;
use crate::profile;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OccupationMass {
    /// `θ_t([a, b])`
    pub theta: f64,
    /// `ϑ_t([a, b])`
    pub vartheta: f64,
    pub lower: f64,
    pub upper: f64,
    pub horizon: f64,
}

fn check(path: &FvPath, t: f64, a: f64, b: f64) -> Result<()> {
    if !(a < b) {
        return Err(Error::EmptyInterval { a, b });
    }
    if !(t > 0.0 && t <= path.horizon()) {
        return Err(Error::OutOfDomain {
            t,
            horizon: path.horizon(),
        });
    }
    Ok(())
}

/// On a monotone piece the time spent in `[a, b]` is one sub-interval, and
/// the change of `V^c` across it is the change of the clamped value.
pub fn occupation_mass(path: &FvPath, t: f64, a: f64, b: f64) -> Result<OccupationMass> {
    check(path, t, a, b)?;
    let mut theta = 0.0;
    let mut vartheta = 0.0;
    for piece in path.pieces_until(t) {
        let d = piece.end_value.clamp(a, b) - piece.start_value.clamp(a, b);
        theta += d;
        vartheta += d.abs();
    }
    Ok(OccupationMass {
        theta,
        vartheta,
        lower: a,
        upper: b,
        horizon: t,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityResiduals {
    /// `|θ_t([a, b]) - ∫_a^b ℓ^x(t) dx|`
    pub signed: f64,
    /// `|ϑ_t([a, b]) - ∫_a^b λ^x(t) dx|`
    pub absolute: f64,
    pub mass: OccupationMass,
    /// `(∫ ℓ, ∫ λ)` over the interval.
    pub density_integrals: (f64, f64),
    /// The interval actually used, after nudging off critical values.
    pub lower: f64,
    pub upper: f64,
    pub nudged: bool,
}

/// Compares the occupation masses of `[a, b]` with the integrals of the
/// local-time profile over the same interval.
pub fn verify_density(path: &FvPath, t: f64, a: f64, b: f64) -> Result<DensityResiduals> {
    check(path, t, a, b)?;
    let critical = level::critical_values(path, t)?;
    let (lo, hi) = path.value_range();
    let step = 1e-9 * if hi > lo { hi - lo } else { 1.0 };
    let tau = path.level_tolerance();
    let on_critical = |x: f64| critical.iter().any(|&c| (c - x).abs() <= tau);
    let mut lower = a;
    let mut upper = b;
    if on_critical(lower) {
        lower -= step;
    }
    if on_critical(upper) {
        upper += step;
    }
    let nudged = lower != a || upper != b;

    let mass = occupation_mass(path, t, lower, upper)?;
    let prof = profile::build_profile(path, t)?;
    let dens = prof.integrate(&PolynomialFn::constant(1.0), lower, upper)?;
    Ok(DensityResiduals {
        signed: (mass.theta - dens.signed).abs(),
        absolute: (mass.vartheta - dens.absolute).abs(),
        mass,
        density_integrals: (dens.signed, dens.absolute),
        lower,
        upper,
        nudged,
    })
}
