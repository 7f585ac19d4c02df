// SPDX-License-Identifier: MIT OR Apache-2.0

//! Integrals of `g(V(s))` against `V^c(ds)` and `|V^c(ds)|`.
//!
//! On a segment `g(V(s)) (V^c)'(s) = g(p(u)) p'(u)` is itself a polynomial
//! in the local coordinate, so both integrals are evaluated exactly through
//! its antiderivative; the absolute one flips the sign on decreasing
//! monotone pieces.

use alloc::vec::Vec;

use crate::error::Result;
use crate::path::FvPath;
use crate::poly::PolynomialFn;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IntegralResult {
    /// `∫_0^t g(V(s)) V^c(ds)`
    pub signed: f64,
    /// `∫_0^t g(V(s)) |V^c(ds)|`
    pub absolute: f64,
}

pub fn integrate_along_continuous(path: &FvPath, g: &PolynomialFn, t: f64) -> Result<IntegralResult> {
    path.check_time(t)?;
    let n = path.segment_count();
    let mut antis: Vec<Option<PolynomialFn>> = (0..n).map(|_| None).collect();
    let mut out = IntegralResult::default();
    for piece in path.pieces_until(t) {
        let dir = piece.direction();
        if dir == 0.0 {
            continue;
        }
        let seg = piece.segment;
        let anti = antis[seg].get_or_insert_with(|| {
            let p = &path.segments()[seg];
            (&g.compose(p) * &p.derivative()).antiderivative()
        });
        let t_seg = path.breakpoints()[seg];
        let part = anti.eval(piece.end - t_seg) - anti.eval(piece.start - t_seg);
        out.signed += part;
        out.absolute += dir * part;
    }
    Ok(out)
}

/// Left-point Riemann–Stieltjes sums over a uniform `n`-interval partition
/// of `[0, t]`, refined by every breakpoint inside it.
pub fn partition_sum_oracle(path: &FvPath, g: &PolynomialFn, t: f64, n: usize) -> Result<(f64, f64)> {
    path.check_time(t)?;
    let n = n.max(1);
    let continuous = path.decompose().continuous;

    let mut grid: Vec<f64> = (0..=n).map(|k| t * k as f64 / n as f64).collect();
    grid.extend(path.breakpoints().iter().copied().filter(|&b| b > 0.0 && b < t));
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let mut signed = 0.0;
    let mut absolute = 0.0;
    let mut prev_c = continuous.value(grid[0])?;
    for w in grid.windows(2) {
        let next_c = continuous.value(w[1])?;
        let weight = g.eval(path.value(w[0])?);
        let dv = next_c - prev_c;
        signed += weight * dv;
        absolute += weight * dv.abs();
        prev_c = next_c;
    }
    Ok((signed, absolute))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{make_fixture, Fixture};
    use alloc::vec;

    #[test]
    fn drift_and_stair() {
        let d = make_fixture(&Fixture::Drift).unwrap();
        let one = PolynomialFn::constant(1.0);
        let r = integrate_along_continuous(&d, &one, 2.0).unwrap();
        assert_eq!((r.signed, r.absolute), (2.0, 2.0));
        assert_eq!(partition_sum_oracle(&d, &one, 2.0, 10).unwrap(), (2.0, 2.0));

        let s = make_fixture(&Fixture::Stair { steps: 3 }).unwrap();
        let g = PolynomialFn::new(vec![1.0, -2.0, 3.0]);
        let r = integrate_along_continuous(&s, &g, 3.0).unwrap();
        assert_eq!((r.signed, r.absolute), (0.0, 0.0));
    }

    #[test]
    fn constant_oracle_is_zero() {
        let c = make_fixture(&Fixture::Const {
            value: 2.0,
            horizon: 1.5,
        })
        .unwrap();
        let g = PolynomialFn::new(vec![0.3, 1.0]);
        assert_eq!(partition_sum_oracle(&c, &g, 1.5, 17).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn truncation_inside_a_segment() {
        // ∫_0^{1.5} 2V dV on ZIGZAG: 4 from the first segment, then 2 -> 1.5
        let z = make_fixture(&Fixture::Zigzag).unwrap();
        let r = integrate_along_continuous(&z, &PolynomialFn::new(vec![0.0, 2.0]), 1.5).unwrap();
        assert!((r.signed - (4.0 + 2.25 - 4.0)).abs() < 1e-12);
        assert!((r.absolute - (4.0 + 4.0 - 2.25)).abs() < 1e-12);
    }
}
