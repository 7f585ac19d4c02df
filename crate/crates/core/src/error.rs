// SPDX-License-Identifier: MIT OR Apache-2.0

use alloc::string::String;

use crate::level::LevelClass;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("path has no segments")]
    EmptyPath,
    #[error("expected {expected} breakpoints for {segments} segments, got {found}")]
    BreakpointCount {
        segments: usize,
        expected: usize,
        found: usize,
    },
    #[error("first breakpoint must be 0, got {0}")]
    NonzeroOrigin(f64),
    #[error("breakpoints not strictly increasing at index {index}")]
    NonMonotoneBreakpoints { index: usize },
    #[error("non-finite value in {field}")]
    NonFinite { field: &'static str },
    #[error("segment {segment} has degree {degree}, maximum is {max}")]
    DegreeTooHigh { segment: usize, degree: usize, max: usize },
    #[error("jump at breakpoint {index} has size zero")]
    ZeroJump { index: usize },
    #[error("jumps at the origin are not allowed")]
    JumpAtOrigin,
    #[error("jump index {index} out of range (path has {breakpoints} breakpoints)")]
    JumpIndexOutOfRange { index: usize, breakpoints: usize },
    #[error("more than one jump declared at breakpoint {index}")]
    DuplicateJump { index: usize },
    #[error("gap of {gap:e} at breakpoint {index} without a declared jump")]
    ContinuityViolation { index: usize, gap: f64 },
    #[error("declared jump {declared} at breakpoint {index} disagrees with segment values ({actual})")]
    JumpMismatch { index: usize, declared: f64, actual: f64 },
    #[error("time {t} outside [0, {horizon}]")]
    OutOfDomain { t: f64, horizon: f64 },
    #[error("level {level} is complex ({class})")]
    ComplexLevel { level: f64, class: LevelClass },
    #[error("level {level} excluded: {reason}")]
    ExcludedLevel { level: f64, reason: Exclusion },
    #[error("empty interval [{a}, {b}]")]
    EmptyInterval { a: f64, b: f64 },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Why an identity check refused a level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exclusion {
    /// The level equals `V(0)` or `V(t)`.
    Endpoint,
    /// The path touches the level without crossing it. `lhs` and `rhs` are
    /// the two sides of the absolute identity at that level.
    Touch {
        time: f64,
        from_below: bool,
        lhs: f64,
        rhs: f64,
    },
}

impl core::fmt::Display for Exclusion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Exclusion::Endpoint => f.write_str("level equals V(0) or V(t)"),
            Exclusion::Touch {
                time,
                from_below,
                lhs,
                rhs,
            } => {
                let side = if *from_below { "below" } else { "above" };
                write!(f, "touch from {side} at t={time} (lhs {lhs}, rhs {rhs})")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
