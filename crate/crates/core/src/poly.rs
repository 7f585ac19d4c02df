// SPDX-License-Identifier: MIT OR Apache-2.0

//! Dense univariate polynomials with `f64` coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::roots;

/// A univariate polynomial `c_0 + c_1 u + ... + c_d u^d`.
///
/// Trailing zero coefficients are stripped on construction, so the zero
/// polynomial has an empty coefficient vector and degree 0.
#[derive(Clone, PartialEq, Default)]
pub struct PolynomialFn {
    coeffs: Vec<f64>,
}

impl PolynomialFn {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn identity() -> Self {
        Self::new(vec![0.0, 1.0])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// The antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(0.0);
        c.extend(self.coeffs.iter().enumerate().map(|(k, &a)| a / (k + 1) as f64));
        Self::new(c)
    }

    /// `∫_a^b p(u) du`.
    pub fn integral(&self, a: f64, b: f64) -> f64 {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// `p + c`.
    pub fn shift(&self, c: f64) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        coeffs[0] += c;
        Self::new(coeffs)
    }

    /// `self ∘ inner`, i.e. `u ↦ self(inner(u))`.
    pub fn compose(&self, inner: &PolynomialFn) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(PolynomialFn::zero(), |acc, &c| (&acc * inner).shift(c))
    }

    /// Largest `|p|` over `[a, b]`, attained at an endpoint or at a sign
    /// change of the derivative.
    pub fn max_abs_on(&self, a: f64, b: f64) -> f64 {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let mut best = self.eval(lo).abs().max(self.eval(hi).abs());
        if hi > lo {
            for r in roots::sign_change_roots(&self.derivative(), lo, hi) {
                best = best.max(self.eval(r).abs());
            }
        }
        best
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl fmt::Debug for PolynomialFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PolynomialFn").field(&self.coeffs).finish()
    }
}

impl From<Vec<f64>> for PolynomialFn {
    fn from(c: Vec<f64>) -> Self {
        Self::new(c)
    }
}

impl From<&[f64]> for PolynomialFn {
    fn from(c: &[f64]) -> Self {
        Self::new(c.to_vec())
    }
}

impl Add for &PolynomialFn {
    type Output = PolynomialFn;

    fn add(self, rhs: &PolynomialFn) -> PolynomialFn {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialFn::new(
            (0..n)
                .map(|k| self.coeffs.get(k).copied().unwrap_or(0.0) + rhs.coeffs.get(k).copied().unwrap_or(0.0))
                .collect(),
        )
    }
}

impl Sub for &PolynomialFn {
    type Output = PolynomialFn;

    fn sub(self, rhs: &PolynomialFn) -> PolynomialFn {
        self + &(-rhs)
    }
}

impl Neg for &PolynomialFn {
    type Output = PolynomialFn;

    fn neg(self) -> PolynomialFn {
        self.scale(-1.0)
    }
}

impl Mul for &PolynomialFn {
    type Output = PolynomialFn;

    fn mul(self, rhs: &PolynomialFn) -> PolynomialFn {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialFn::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolynomialFn::new(out)
    }
}
