// SPDX-License-Identifier: MIT OR Apache-2.0

//! The full battery of identity checks on one path.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::identities::{self, CheckVerdict, IdentityCheck};
use crate::level;
use crate::path::FvPath;
use crate::poly::PolynomialFn;
use crate::rng::Rng64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Multiplier on every floating-point tolerance.
    pub tolerance_scale: f64,
    /// Sampled levels for the Tanaka checks.
    pub levels: usize,
    /// Sampled intervals for the density checks.
    pub intervals: usize,
    /// Horizons `T k / horizons`, `k = 1..=horizons`.
    pub horizons: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            tolerance_scale: 1.0,
            levels: 50,
            intervals: 20,
            horizons: 10,
            seed: 0x5eed,
        }
    }
}

/// Minimum distance between a sampled level and any critical value,
/// relative to `1 + range`.
pub const LEVEL_CLEARANCE: f64 = 1e-6;

/// `x, x², x³, x⁴ - 2x²` and a degree-5 polynomial with coefficients
/// uniform in `[-1, 1)` drawn from `seed`.
pub fn test_functions(seed: u64) -> Vec<(&'static str, PolynomialFn)> {
    let mut r = Rng64::new(seed ^ 0xf00d);
    let random: Vec<f64> = (0..6).map(|_| r.range(-1.0, 1.0)).collect();
    vec![
        ("x", PolynomialFn::monomial(1)),
        ("x^2", PolynomialFn::monomial(2)),
        ("x^3", PolynomialFn::monomial(3)),
        ("x^4-2x^2", PolynomialFn::new(vec![0.0, 0.0, -2.0, 0.0, 1.0])),
        ("random5", PolynomialFn::new(random)),
    ]
}

pub fn horizons(path: &FvPath, count: usize) -> Vec<f64> {
    let t = path.horizon();
    (1..=count)
        .map(|k| if k == count { t } else { t * k as f64 / count as f64 })
        .collect()
}

/// Window from which levels and interval endpoints are drawn: the path's
/// range widened by a quarter of `1 + range` on each side.
pub fn sampling_window(path: &FvPath) -> (f64, f64) {
    let (lo, hi) = path.value_range();
    let pad = 0.25 * (1.0 + hi - lo);
    (lo - pad, hi + pad)
}

/// Draws a level at distance at least `LEVEL_CLEARANCE (1 + range)` from
/// every critical value at horizon `t`. Gives up after a bounded number of
/// attempts.
pub fn sample_clear_level(path: &FvPath, t: f64, r: &mut Rng64) -> Result<Option<f64>> {
    let critical = level::critical_values(path, t)?;
    let (lo, hi) = path.value_range();
    let clearance = LEVEL_CLEARANCE * (1.0 + hi - lo);
    let (a, b) = sampling_window(path);
    for _ in 0..1000 {
        let x = r.range(a, b);
        if critical.iter().all(|&c| (c - x).abs() >= clearance) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SuiteSummary {
    pub pass: usize,
    pub fail: usize,
    pub excluded: usize,
}

impl SuiteSummary {
    pub fn tally(checks: &[IdentityCheck]) -> Self {
        let mut s = Self::default();
        for c in checks {
            match c.verdict {
                CheckVerdict::Pass => s.pass += 1,
                CheckVerdict::Fail => s.fail += 1,
                CheckVerdict::Excluded => s.excluded += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }
}

/// Runs every check. The output is sorted by name, then level, then
/// horizon, and is a pure function of the path and the configuration.
pub fn run_suite(path: &FvPath, config: &SuiteConfig) -> Result<Vec<IdentityCheck>> {
    if config.horizons == 0 {
        return Err(Error::InvalidParameter("horizons must be at least 1".to_string()));
    }
    let scale = config.tolerance_scale;
    let hs = horizons(path, config.horizons);
    let mut checks = Vec::new();

    for (_, f) in test_functions(config.seed) {
        for &t in &hs {
            let (p1, p2) = identities::check_cov_pair_scaled(path, &f, t, scale)?;
            checks.push(p1);
            checks.push(p2);
        }
    }

    let mut r = Rng64::new(config.seed);
    for k in 0..config.levels {
        let t = hs[k % hs.len()];
        let Some(x) = sample_clear_level(path, t, &mut r)? else {
            continue;
        };
        match identities::check_tanaka_signed(path, x, t) {
            Ok((s, a)) => {
                checks.push(s);
                checks.push(a);
            }
            Err(e @ (Error::ComplexLevel { .. } | Error::ExcludedLevel { .. })) => {
                let note = e.to_string();
                checks.push(IdentityCheck::excluded(
                    identities::TANAKA_SIGNED,
                    Some(x),
                    t,
                    note.clone(),
                ));
                checks.push(IdentityCheck::excluded(
                    identities::TANAKA_ALTERNATIVE,
                    Some(x),
                    t,
                    note,
                ));
            }
            Err(e) => return Err(e),
        }
        match identities::check_tanaka_absolute(path, x, t) {
            Ok(c) => checks.push(c),
            Err(e @ (Error::ComplexLevel { .. } | Error::ExcludedLevel { .. })) => {
                checks.push(IdentityCheck::excluded(
                    identities::TANAKA_ABSOLUTE,
                    Some(x),
                    t,
                    e.to_string(),
                ));
            }
            Err(e) => return Err(e),
        }
    }

    let t_full = path.horizon();
    for _ in 0..config.intervals {
        let (Some(a), Some(b)) = (
            sample_clear_level(path, t_full, &mut r)?,
            sample_clear_level(path, t_full, &mut r)?,
        ) else {
            continue;
        };
        if a == b {
            continue;
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let (s, v) = identities::check_density(path, t_full, a, b, scale)?;
        checks.push(s);
        checks.push(v);
    }

    for &t in &hs {
        checks.push(identities::check_crossing_integral_scaled(path, t, scale)?);
    }

    checks.sort_by(|a, b| {
        a.name
            .cmp(b.name)
            .then(
                a.level
                    .unwrap_or(f64::NEG_INFINITY)
                    .total_cmp(&b.level.unwrap_or(f64::NEG_INFINITY)),
            )
            .then(a.horizon.total_cmp(&b.horizon))
    });
    Ok(checks)
}

/// Helper for reports: `name@level` or just `name`.
pub fn check_label(c: &IdentityCheck) -> alloc::string::String {
    match c.level {
        Some(x) => format!("{}@{x}", c.name),
        None => c.name.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{make_fixture, Fixture};

    #[test]
    fn suite_passes_on_fixtures() {
        for f in Fixture::catalog() {
            let p = make_fixture(&f).unwrap();
            let checks = run_suite(&p, &SuiteConfig::default()).unwrap();
            let summary = SuiteSummary::tally(&checks);
            assert!(
                summary.all_passed(),
                "{}: {:?}",
                f.name(),
                checks.iter().find(|c| c.verdict == CheckVerdict::Fail)
            );
            assert!(summary.pass > 0);
        }
    }

    #[test]
    fn suite_is_deterministic_and_sorted() {
        let p = make_fixture(&Fixture::JumpMid).unwrap();
        let a = run_suite(&p, &SuiteConfig::default()).unwrap();
        let b = run_suite(&p, &SuiteConfig::default()).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.lhs.to_bits(), y.lhs.to_bits());
        }
        assert!(a.windows(2).all(|w| w[0].name <= w[1].name));
    }

    #[test]
    fn horizon_grid_ends_at_t() {
        let p = make_fixture(&Fixture::Zigzag).unwrap();
        let hs = horizons(&p, 10);
        assert_eq!(hs.len(), 10);
        assert_eq!(hs[9], 3.0);
        assert!(hs.windows(2).all(|w| w[0] < w[1]));
    }
}
