// SPDX-License-Identifier: MIT OR Apache-2.0

//! Càdlàg finite-variation paths built from polynomial segments and jumps.
//!
//! Segment `i` covers `[t_i, t_{i+1})` and is written in the local coordinate
//! `u = t - t_i`. A jump declared at breakpoint `i` sits between
//! `V(t_i-) = p_{i-1}(t_i - t_{i-1})` and `V(t_i) = p_i(0)`; a jump at the
//! final breakpoint is added on top of the last segment's end value.
//!
//! At breakpoints without a jump the two adjacent segments agree only up to
//! the continuity tolerance, so the right-hand segment's value is taken as
//! the canonical `V(t_i) = V(t_i-)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::PolynomialFn;
use crate::roots;

pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Unvalidated path description, as read from a document or built by hand.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RawPath {
    pub breakpoints: Vec<f64>,
    /// Local-coordinate coefficients, lowest order first.
    pub segments: Vec<Vec<f64>>,
    /// `(breakpoint index, size)`.
    pub jumps: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationConfig {
    pub max_degree: usize,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        Self {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jump {
    /// Breakpoint index, in `1..=n`.
    pub index: usize,
    pub time: f64,
    pub size: f64,
    /// `V(time-)`.
    pub before: f64,
    /// `V(time)`.
    pub after: f64,
}

/// A maximal time interval on which `V` is continuous and monotone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotonePiece {
    pub segment: usize,
    pub start: f64,
    pub end: f64,
    pub start_value: f64,
    /// Left limit of `V` at `end`.
    pub end_value: f64,
    /// The piece begins right after a jump.
    pub after_jump: bool,
}

impl MonotonePiece {
    /// `+1` increasing, `-1` decreasing, `0` flat.
    pub fn direction(&self) -> f64 {
        roots::sign(self.end_value - self.start_value)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FvPath {
    breakpoints: Vec<f64>,
    segments: Vec<PolynomialFn>,
    jumps: Vec<Jump>,
    pieces: Vec<MonotonePiece>,
    value_min: f64,
    value_max: f64,
    continuity_tol: f64,
}

/// Validate with the default configuration.
pub fn validate_path(raw: &RawPath) -> Result<FvPath> {
    FvPath::new(raw, &ValidationConfig::default())
}

impl FvPath {
    pub fn new(raw: &RawPath, config: &ValidationConfig) -> Result<Self> {
        let n = raw.segments.len();
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        if raw.breakpoints.len() != n + 1 {
            return Err(Error::BreakpointCount {
                segments: n,
                expected: n + 1,
                found: raw.breakpoints.len(),
            });
        }
        if raw.breakpoints.iter().any(|t| !t.is_finite()) {
            return Err(Error::NonFinite { field: "breakpoints" });
        }
        if raw.breakpoints[0] != 0.0 {
            return Err(Error::NonzeroOrigin(raw.breakpoints[0]));
        }
        for i in 1..=n {
            if !(raw.breakpoints[i] > raw.breakpoints[i - 1]) {
                return Err(Error::NonMonotoneBreakpoints { index: i });
            }
        }
        let mut segments = Vec::with_capacity(n);
        for (i, c) in raw.segments.iter().enumerate() {
            if c.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite { field: "segments" });
            }
            let p = PolynomialFn::new(c.clone());
            if p.degree() > config.max_degree {
                return Err(Error::DegreeTooHigh {
                    segment: i,
                    degree: p.degree(),
                    max: config.max_degree,
                });
            }
            segments.push(p);
        }

        let mut declared: Vec<Option<f64>> = vec![None; n + 1];
        for &(index, size) in &raw.jumps {
            if !size.is_finite() {
                return Err(Error::NonFinite { field: "jumps" });
            }
            if size == 0.0 {
                return Err(Error::ZeroJump { index });
            }
            if index == 0 {
                return Err(Error::JumpAtOrigin);
            }
            if index > n {
                return Err(Error::JumpIndexOutOfRange {
                    index,
                    breakpoints: n + 1,
                });
            }
            if declared[index].is_some() {
                return Err(Error::DuplicateJump { index });
            }
            declared[index] = Some(size);
        }

        let max_coeff = segments.iter().fold(0.0_f64, |m, p| m.max(p.max_abs_coefficient()));
        let continuity_tol = 1e-9 * (1.0 + max_coeff);

        let len = |i: usize| raw.breakpoints[i + 1] - raw.breakpoints[i];
        for i in 1..n {
            let gap = segments[i].eval(0.0) - segments[i - 1].eval(len(i - 1));
            match declared[i] {
                None if gap.abs() > continuity_tol => {
                    return Err(Error::ContinuityViolation { index: i, gap });
                }
                Some(size) if (size - gap).abs() > continuity_tol => {
                    return Err(Error::JumpMismatch {
                        index: i,
                        declared: size,
                        actual: gap,
                    });
                }
                _ => {}
            }
        }
        Ok(Self::assemble(
            raw.breakpoints.clone(),
            segments,
            &declared,
            continuity_tol,
        ))
    }

    /// Builds the derived data of an already validated path.
    fn assemble(
        breakpoints: Vec<f64>,
        segments: Vec<PolynomialFn>,
        declared: &[Option<f64>],
        continuity_tol: f64,
    ) -> Self {
        let n = segments.len();
        let mut jumps = Vec::new();
        for i in 1..=n {
            if let Some(size) = declared[i] {
                let before = segments[i - 1].eval(breakpoints[i] - breakpoints[i - 1]);
                let after = if i == n { before + size } else { segments[i].eval(0.0) };
                jumps.push(Jump {
                    index: i,
                    time: breakpoints[i],
                    size,
                    before,
                    after,
                });
            }
        }

        let mut path = Self {
            breakpoints,
            segments,
            jumps,
            pieces: Vec::new(),
            value_min: 0.0,
            value_max: 0.0,
            continuity_tol,
        };
        path.pieces = path.build_pieces(declared);
        let first = path.pieces[0].start_value;
        let (mut lo, mut hi) = (first, first);
        for piece in &path.pieces {
            lo = lo.min(piece.start_value).min(piece.end_value);
            hi = hi.max(piece.start_value).max(piece.end_value);
        }
        for j in &path.jumps {
            lo = lo.min(j.after);
            hi = hi.max(j.after);
        }
        path.value_min = lo;
        path.value_max = hi;
        path
    }

    fn build_pieces(&self, declared: &[Option<f64>]) -> Vec<MonotonePiece> {
        let n = self.segments.len();
        let mut pieces = Vec::new();
        for (i, p) in self.segments.iter().enumerate() {
            let t0 = self.breakpoints[i];
            let len = self.breakpoints[i + 1] - t0;
            let knots = roots::monotone_knots(p, 0.0, len);
            let end_value = if i + 1 < n && declared[i + 1].is_none() {
                self.segments[i + 1].eval(0.0)
            } else {
                p.eval(len)
            };
            let last = knots.len() - 2;
            for k in 0..=last {
                pieces.push(MonotonePiece {
                    segment: i,
                    start: t0 + knots[k],
                    end: if k == last {
                        self.breakpoints[i + 1]
                    } else {
                        t0 + knots[k + 1]
                    },
                    start_value: p.eval(knots[k]),
                    end_value: if k == last { end_value } else { p.eval(knots[k + 1]) },
                    after_jump: k == 0 && i > 0 && declared[i].is_some(),
                });
            }
        }
        pieces
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn segments(&self) -> &[PolynomialFn] {
        &self.segments
    }

    /// Declared jumps in time order.
    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    /// Monotone pieces of the whole path in time order.
    pub fn pieces(&self) -> &[MonotonePiece] {
        &self.pieces
    }

    pub fn horizon(&self) -> f64 {
        *self.breakpoints.last().unwrap()
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// Smallest and largest value (including left limits) over `[0, T]`.
    pub fn value_range(&self) -> (f64, f64) {
        (self.value_min, self.value_max)
    }

    pub fn max_abs_value(&self) -> f64 {
        self.value_min.abs().max(self.value_max.abs())
    }

    pub fn continuity_tolerance(&self) -> f64 {
        self.continuity_tol
    }

    /// Tolerance for deciding that a path value equals a level.
    pub fn level_tolerance(&self) -> f64 {
        1e-10 * (1.0 + self.max_abs_value())
    }

    pub fn raw(&self) -> RawPath {
        RawPath {
            breakpoints: self.breakpoints.clone(),
            segments: self.segments.iter().map(|p| p.coefficients().to_vec()).collect(),
            jumps: self.jumps.iter().map(|j| (j.index, j.size)).collect(),
        }
    }

    pub(crate) fn check_time(&self, t: f64) -> Result<()> {
        if t >= 0.0 && t <= self.horizon() {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                t,
                horizon: self.horizon(),
            })
        }
    }

    fn jump_at(&self, index: usize) -> Option<&Jump> {
        self.jumps.iter().find(|j| j.index == index)
    }

    /// `(V(t), V(t-))`.
    pub fn eval(&self, t: f64) -> Result<(f64, f64)> {
        self.check_time(t)?;
        let n = self.segments.len();
        if t == self.horizon() {
            let last = &self.pieces[self.pieces.len() - 1];
            let left = last.end_value;
            let value = self.jump_at(n).map_or(left, |j| j.after);
            return Ok((value, left));
        }
        let i = self.breakpoints[1..n].partition_point(|&b| b <= t);
        let u = t - self.breakpoints[i];
        let value = self.segments[i].eval(u);
        if u == 0.0 && i > 0 {
            if let Some(j) = self.jump_at(i) {
                return Ok((value, j.before));
            }
        }
        Ok((value, value))
    }

    pub fn value(&self, t: f64) -> Result<f64> {
        self.eval(t).map(|(v, _)| v)
    }

    /// Jumps with time in `(0, t]`.
    pub fn jumps_up_to(&self, t: f64) -> Result<Vec<(f64, f64)>> {
        self.check_time(t)?;
        Ok(self
            .jumps
            .iter()
            .filter(|j| j.time <= t)
            .map(|j| (j.time, j.size))
            .collect())
    }

    pub(crate) fn jumps_until(&self, t: f64) -> impl Iterator<Item = &Jump> + '_ {
        self.jumps.iter().take_while(move |j| j.time <= t)
    }

    /// Monotone pieces restricted to `[0, t]`; the piece containing `t` is
    /// cut there.
    pub fn pieces_until(&self, t: f64) -> impl Iterator<Item = MonotonePiece> + '_ {
        self.pieces.iter().take_while(move |p| p.start < t).map(move |p| {
            if p.end <= t {
                *p
            } else {
                let u = t - self.breakpoints[p.segment];
                MonotonePiece {
                    end: t,
                    end_value: self.segments[p.segment].eval(u),
                    ..*p
                }
            }
        })
    }

    /// Total variation of `V` and of its continuous part on `[0, t]`.
    pub fn total_variation(&self, t: f64) -> Result<TotalVariation> {
        self.check_time(t)?;
        let continuous: f64 = self.pieces_until(t).map(|p| (p.end_value - p.start_value).abs()).sum();
        let jumps: f64 = self.jumps_until(t).map(|j| j.size.abs()).sum();
        Ok(TotalVariation {
            total: continuous + jumps,
            continuous,
        })
    }

    /// Canonical split `V = V^c + V^d`.
    pub fn decompose(&self) -> Decomposition {
        let mut cumulative = 0.0;
        let mut next_jump = self.jumps.iter().peekable();
        let mut segments = Vec::with_capacity(self.segments.len());
        for (i, p) in self.segments.iter().enumerate() {
            if let Some(j) = next_jump.peek() {
                if j.index == i {
                    cumulative += j.size;
                    next_jump.next();
                }
            }
            segments.push(p.shift(-cumulative));
        }
        let continuous = Self::assemble(
            self.breakpoints.clone(),
            segments,
            &vec![None; self.segments.len() + 1],
            self.continuity_tol,
        );

        let mut sum = 0.0;
        let (times, sums) = self
            .jumps
            .iter()
            .map(|j| {
                sum += j.size;
                (j.time, sum)
            })
            .unzip();
        Decomposition {
            continuous,
            discontinuous: JumpPart {
                times,
                cumulative: sums,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TotalVariation {
    /// `W(t)`.
    pub total: f64,
    /// `W_c(t)`.
    pub continuous: f64,
}

/// Pure-jump part `V^d`, a right-continuous step function.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct JumpPart {
    pub times: Vec<f64>,
    pub cumulative: Vec<f64>,
}

impl JumpPart {
    pub fn eval(&self, t: f64) -> f64 {
        match self.times.partition_point(|&s| s <= t) {
            0 => 0.0,
            k => self.cumulative[k - 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.times.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub continuous: FvPath,
    pub discontinuous: JumpPart,
}
