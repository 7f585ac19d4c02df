// SPDX-License-Identifier: MIT OR Apache-2.0

//! Local times of càdlàg functions with finite variation.
//!
//! Paths are piecewise polynomial with finitely many jumps. For such a path
//! `V` this crate computes, exactly up to floating-point rounding:
//!
//! * the split `V = V^c + V^d` into continuous and pure-jump parts and the
//!   total variations `W(t)`, `W_c(t)`;
//! * integrals `∫ g(V(s)) V^c(ds)` and `∫ g(V(s)) |V^c(ds)|`;
//! * passages through a level, the signed local time `ℓ^x(t)` (continuous
//!   up-crossings minus down-crossings), the absolute local time `λ^x(t)`
//!   and the crossing count `N_x(t)`, both per level and as exact profiles
//!   in `x`;
//! * the signed and absolute occupation measures of value intervals;
//! * residual checks of the identities linking all of the above.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]
// `!(a < b)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod fixtures;
pub mod identities;
pub mod level;
pub mod occupation;
pub mod path;
pub mod poly;
pub mod profile;
pub mod rng;
pub mod roots;
pub mod stieltjes;
pub mod suite;

pub use error::{Error, Exclusion, Result};
pub use fixtures::{make_fixture, random_path, Fixture, RandomPathParams};
pub use identities::{CheckVerdict, IdentityCheck};
pub use level::{classify_level, critical_values, crossing_count, level_events, CrossingEvent, EventKind, LevelClass};
pub use occupation::{occupation_mass, verify_density, OccupationMass};
pub use path::{validate_path, Decomposition, FvPath, RawPath, TotalVariation, ValidationConfig};
pub use poly::PolynomialFn;
pub use profile::{build_profile, integrate_against_profile, local_times_at, LocalTimeProfile, LocalTimes};
pub use stieltjes::{integrate_along_continuous, partition_sum_oracle, IntegralResult};
pub use suite::{run_suite, SuiteConfig, SuiteSummary};
