// SPDX-License-Identifier: MIT OR Apache-2.0

//! Named test paths and a seeded random-path generator.
//!
//! | name       | path                                                        |
//! |------------|-------------------------------------------------------------|
//! | `const`    | `V ≡ value` on `[0, horizon]` (defaults 0 and 1)            |
//! | `drift`    | `V(t) = t` on `[0, 2]`                                      |
//! | `zigzag`   | linear `0 → 2 → 1 → 3` on unit intervals                    |
//! | `stair`    | `V = k` on `[k, k+1)`, unit up-jumps at `1..=steps` (3)     |
//! | `jumpmid`  | `2t` on `[0, 1)`, jump to 0.5 at 1, then `0.5 + (t-1)`      |
//! | `parab`    | `(t - 1)^2` on `[0, 2]`                                     |
//! | `negparab` | `-(t - 1)^2` on `[0, 2]`                                    |
//! | `cantor`   | `depth`-th piecewise-linear Cantor iterate on `[0, 1]` (3)  |

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::path::{validate_path, FvPath, RawPath, DEFAULT_MAX_DEGREE};
use crate::rng::Rng64;

pub const MAX_CANTOR_DEPTH: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Fixture {
    Const { value: f64, horizon: f64 },
    Drift,
    Zigzag,
    Stair { steps: usize },
    JumpMid,
    Parab,
    NegParab,
    Cantor { depth: u32 },
}

impl Fixture {
    pub const NAMES: [&'static str; 8] = [
        "const", "drift", "zigzag", "stair", "jumpmid", "parab", "negparab", "cantor",
    ];

    /// Resolves a fixture by its CLI name; parameters not listed for the
    /// fixture are rejected.
    pub fn parse(name: &str, params: &[(&str, f64)]) -> Result<Self> {
        let allowed: &[&str] = match name {
            "const" => &["value", "horizon"],
            "stair" => &["steps"],
            "cantor" => &["depth", "n"],
            "drift" | "zigzag" | "jumpmid" | "parab" | "negparab" => &[],
            other => return Err(Error::UnknownFixture(other.to_string())),
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(Error::InvalidParameter(format!(
                "fixture `{name}` has no parameter `{k}`"
            )));
        }
        let get = |keys: &[&str], default: f64| {
            params
                .iter()
                .rev()
                .find(|(k, _)| keys.contains(k))
                .map_or(default, |&(_, v)| v)
        };
        let count = |v: f64, what: &str| {
            if v >= 0.0 && v <= u32::MAX as f64 && (v as u32) as f64 == v {
                Ok(v as u32)
            } else {
                Err(Error::InvalidParameter(format!(
                    "{what} must be a non-negative integer"
                )))
            }
        };
        Ok(match name {
            "const" => Fixture::Const {
                value: get(&["value"], 0.0),
                horizon: get(&["horizon"], 1.0),
            },
            "drift" => Fixture::Drift,
            "zigzag" => Fixture::Zigzag,
            "stair" => Fixture::Stair {
                steps: count(get(&["steps"], 3.0), "steps")? as usize,
            },
            "jumpmid" => Fixture::JumpMid,
            "parab" => Fixture::Parab,
            "negparab" => Fixture::NegParab,
            _ => Fixture::Cantor {
                depth: count(get(&["depth", "n"], 3.0), "depth")?,
            },
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Fixture::Const { .. } => "const",
            Fixture::Drift => "drift",
            Fixture::Zigzag => "zigzag",
            Fixture::Stair { .. } => "stair",
            Fixture::JumpMid => "jumpmid",
            Fixture::Parab => "parab",
            Fixture::NegParab => "negparab",
            Fixture::Cantor { .. } => "cantor",
        }
    }

    /// One instance of every fixture with default parameters.
    pub fn catalog() -> [Fixture; 8] {
        [
            Fixture::Const {
                value: 0.0,
                horizon: 1.0,
            },
            Fixture::Drift,
            Fixture::Zigzag,
            Fixture::Stair { steps: 3 },
            Fixture::JumpMid,
            Fixture::Parab,
            Fixture::NegParab,
            Fixture::Cantor { depth: 3 },
        ]
    }
}

fn linear_path(breakpoints: Vec<f64>, values: &[f64]) -> RawPath {
    let segments = breakpoints
        .windows(2)
        .zip(values.windows(2))
        .map(|(t, v)| {
            let slope = (v[1] - v[0]) / (t[1] - t[0]);
            if slope == 0.0 {
                vec![v[0]]
            } else {
                vec![v[0], slope]
            }
        })
        .collect();
    RawPath {
        breakpoints,
        segments,
        jumps: Vec::new(),
    }
}

/// Cantor function at `k / 3^depth`, read off the ternary digits of `k`.
fn cantor_value(k: u64, depth: u32) -> f64 {
    let total = 3u64.pow(depth);
    if k == total {
        return 1.0;
    }
    let mut value = 0.0;
    let mut weight = 0.5;
    let mut place = total / 3;
    let mut rest = k;
    for _ in 0..depth {
        let digit = rest / place;
        rest %= place;
        match digit {
            0 => {}
            1 => return value + weight,
            _ => value += weight,
        }
        weight *= 0.5;
        place = (place / 3).max(1);
    }
    value
}

pub fn make_fixture(fixture: &Fixture) -> Result<FvPath> {
    let raw = match *fixture {
        Fixture::Const { value, horizon } => {
            if !value.is_finite() {
                return Err(Error::InvalidParameter("value must be finite".to_string()));
            }
            if !(horizon > 0.0 && horizon.is_finite()) {
                return Err(Error::InvalidParameter("horizon must be positive".to_string()));
            }
            RawPath {
                breakpoints: vec![0.0, horizon],
                segments: vec![vec![value]],
                jumps: Vec::new(),
            }
        }
        Fixture::Drift => RawPath {
            breakpoints: vec![0.0, 2.0],
            segments: vec![vec![0.0, 1.0]],
            jumps: Vec::new(),
        },
        Fixture::Zigzag => linear_path(vec![0.0, 1.0, 2.0, 3.0], &[0.0, 2.0, 1.0, 3.0]),
        Fixture::Stair { steps } => {
            if steps == 0 {
                return Err(Error::InvalidParameter("steps must be at least 1".to_string()));
            }
            RawPath {
                breakpoints: (0..=steps).map(|k| k as f64).collect(),
                segments: (0..steps).map(|k| vec![k as f64]).collect(),
                jumps: (1..=steps).map(|k| (k, 1.0)).collect(),
            }
        }
        Fixture::JumpMid => RawPath {
            breakpoints: vec![0.0, 1.0, 2.0],
            segments: vec![vec![0.0, 2.0], vec![0.5, 1.0]],
            jumps: vec![(1, -1.5)],
        },
        Fixture::Parab => RawPath {
            breakpoints: vec![0.0, 2.0],
            segments: vec![vec![1.0, -2.0, 1.0]],
            jumps: Vec::new(),
        },
        Fixture::NegParab => RawPath {
            breakpoints: vec![0.0, 2.0],
            segments: vec![vec![-1.0, 2.0, -1.0]],
            jumps: Vec::new(),
        },
        Fixture::Cantor { depth } => {
            if depth > MAX_CANTOR_DEPTH {
                return Err(Error::InvalidParameter(format!(
                    "cantor depth must be at most {MAX_CANTOR_DEPTH}"
                )));
            }
            let total = 3u64.pow(depth);
            let breakpoints: Vec<f64> = (0..=total).map(|k| k as f64 / total as f64).collect();
            let values: Vec<f64> = (0..=total).map(|k| cantor_value(k, depth)).collect();
            linear_path(breakpoints, &values)
        }
    };
    validate_path(&raw)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomPathParams {
    pub seed: u64,
    /// Upper bound on the number of segments.
    pub max_breakpoints: usize,
    pub max_degree: usize,
    pub jump_probability: f64,
    pub value_scale: f64,
}

impl Default for RandomPathParams {
    fn default() -> Self {
        Self {
            seed: 0,
            max_breakpoints: 20,
            max_degree: 3,
            jump_probability: 0.5,
            value_scale: 10.0,
        }
    }
}

impl RandomPathParams {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

/// Draws a random path. With `r` the [`Rng64`] stream for `params.seed`:
///
/// 1. segment count `n = 1 + r.below(max_breakpoints)`;
/// 2. horizon `T = 1 + 9 r.uniform()`;
/// 3. gap weights `w_k = 0.25 + r.uniform()` for `k < n`, breakpoints at
///    the normalised cumulative sums times `T` (the last one is `T`);
/// 4. start value `value_scale (2 r.uniform() - 1)`;
/// 5. per segment `i`: for `i > 0`, a jump with probability
///    `jump_probability` (`r.uniform() < p`), of size
///    `±value_scale (0.05 + 0.45 r.uniform())` with sign `+` when
///    `r.uniform() < 0.5`; degree `d = r.below(max_degree + 1)`; constant
///    term equal to the previous end value plus the jump; coefficient
///    `k >= 1` equal to `value_scale (2 r.uniform() - 1) / (2 len^k)`;
/// 6. finally one more jump draw at `T`.
pub fn random_path(params: &RandomPathParams) -> Result<FvPath> {
    if params.max_breakpoints == 0 {
        return Err(Error::InvalidParameter(
            "max_breakpoints must be at least 1".to_string(),
        ));
    }
    if params.max_degree > DEFAULT_MAX_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "max_degree must be at most {DEFAULT_MAX_DEGREE}"
        )));
    }
    if !(0.0..=1.0).contains(&params.jump_probability) {
        return Err(Error::InvalidParameter(
            "jump_probability must lie in [0, 1]".to_string(),
        ));
    }
    if !(params.value_scale > 0.0 && params.value_scale.is_finite()) {
        return Err(Error::InvalidParameter("value_scale must be positive".to_string()));
    }

    let mut r = Rng64::new(params.seed);
    let scale = params.value_scale;
    let n = 1 + r.below(params.max_breakpoints as u64) as usize;
    let horizon = 1.0 + 9.0 * r.uniform();
    let weights: Vec<f64> = (0..n).map(|_| 0.25 + r.uniform()).collect();
    let total: f64 = weights.iter().sum();
    let mut breakpoints = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    breakpoints.push(0.0);
    for w in &weights[..n - 1] {
        acc += w;
        breakpoints.push(horizon * acc / total);
    }
    breakpoints.push(horizon);

    let draw_jump = |r: &mut Rng64| {
        if r.uniform() < params.jump_probability {
            let size = scale * (0.05 + 0.45 * r.uniform());
            Some(if r.uniform() < 0.5 { size } else { -size })
        } else {
            None
        }
    };

    let mut value = scale * (2.0 * r.uniform() - 1.0);
    let mut segments = Vec::with_capacity(n);
    let mut jumps = Vec::new();
    for i in 0..n {
        if i > 0 {
            if let Some(size) = draw_jump(&mut r) {
                value += size;
                jumps.push((i, size));
            }
        }
        let len = breakpoints[i + 1] - breakpoints[i];
        let degree = r.below(params.max_degree as u64 + 1) as usize;
        let mut coeffs = Vec::with_capacity(degree + 1);
        coeffs.push(value);
        let mut len_pow = 1.0;
        for _ in 0..degree {
            len_pow *= len;
            coeffs.push(scale * (2.0 * r.uniform() - 1.0) / (2.0 * len_pow));
        }
        value = coeffs.iter().rev().fold(0.0, |a, &c| a * len + c);
        segments.push(coeffs);
    }
    if let Some(size) = draw_jump(&mut r) {
        jumps.push((n, size));
    }

    validate_path(&RawPath {
        breakpoints,
        segments,
        jumps,
    })
}
