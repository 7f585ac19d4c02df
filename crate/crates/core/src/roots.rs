// SPDX-License-Identifier: MIT OR Apache-2.0

//! Real root isolation by recursive sign-change bisection.
//!
//! The roots of `p'` split an interval into pieces on which `p` is monotone;
//! each monotone piece holds at most one sign change of `p`, which bisection
//! then pins down. The recursion bottoms out at degree one.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::PolynomialFn;

/// Relative bisection width, measured against the searched interval.
pub const BISECTION_REL_WIDTH: f64 = 1e-13;

const MAX_BISECTIONS: usize = 200;

/// Points of `(a, b)` at which `p` changes sign, in increasing order.
///
/// Roots of even multiplicity are not reported.
pub fn sign_change_roots(p: &PolynomialFn, a: f64, b: f64) -> Vec<f64> {
    if !(a < b) {
        return Vec::new();
    }
    let c = p.coefficients();
    match p.degree() {
        0 => Vec::new(),
        1 => {
            let r = -c[0] / c[1];
            if a < r && r < b {
                vec![r]
            } else {
                Vec::new()
            }
        }
        _ => {
            let knots = monotone_knots(p, a, b);
            let values: Vec<f64> = knots.iter().map(|&u| p.eval(u)).collect();
            let tol = BISECTION_REL_WIDTH * (b - a);
            let mut out = Vec::new();
            for j in 0..knots.len() - 1 {
                // exact zero on an interior knot with a sign change across it
                if j > 0 && values[j] == 0.0 && sign(values[j - 1]) * sign(values[j + 1]) < 0.0 {
                    out.push(knots[j]);
                }
                let (s0, s1) = (sign(values[j]), sign(values[j + 1]));
                if s0 * s1 < 0.0 {
                    out.push(bisect(|u| p.eval(u), knots[j], knots[j + 1], s0, tol));
                }
            }
            out.sort_by(f64::total_cmp);
            out
        }
    }
}

/// `[a, extrema of p in (a, b)..., b]`: consecutive entries bound intervals
/// on which `p` is monotone.
pub fn monotone_knots(p: &PolynomialFn, a: f64, b: f64) -> Vec<f64> {
    let mut knots = Vec::with_capacity(p.degree() + 1);
    knots.push(a);
    if a < b {
        knots.extend(
            sign_change_roots(&p.derivative(), a, b)
                .into_iter()
                .filter(|&r| r > a && r < b),
        );
        knots.dedup();
        knots.push(b);
    }
    knots
}

/// Bisection for a sign change of `f` on `[lo, hi]`, given the sign of `f`
/// at `lo`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, sign_lo: f64, tol: f64) -> f64 {
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f(mid);
        if v == 0.0 {
            return mid;
        }
        if sign(v) == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo + 0.5 * (hi - lo)
}

/// `-1`, `0` or `1`; unlike `f64::signum`, zero maps to zero.
pub(crate) fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_roots(rs: &[f64]) -> PolynomialFn {
        rs.iter().fold(PolynomialFn::constant(1.0), |acc, &r| {
            &acc * &PolynomialFn::new(vec![-r, 1.0])
        })
    }

    #[test]
    fn simple_roots_of_a_quintic() {
        let rs = [0.1, 0.35, 0.5, 0.77, 0.9];
        let found = sign_change_roots(&from_roots(&rs), 0.0, 1.0);
        assert_eq!(found.len(), rs.len());
        for (a, b) in found.iter().zip(rs.iter()) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn even_multiplicity_is_not_a_sign_change() {
        // (u - 1)^2 (u - 1.5)
        let p = from_roots(&[1.0, 1.0, 1.5]);
        let found = sign_change_roots(&p, 0.0, 2.0);
        assert_eq!(found.len(), 1);
        assert!((found[0] - 1.5).abs() < 1e-12);
    }

    #[test]
    fn triple_root_changes_sign() {
        let p = from_roots(&[0.25, 0.25, 0.25]);
        let found = sign_change_roots(&p, 0.0, 1.0);
        assert_eq!(found.len(), 1);
        assert!((found[0] - 0.25).abs() < 1e-4);
    }

    #[test]
    fn endpoints_are_excluded() {
        let p = PolynomialFn::new(vec![0.0, 1.0]);
        assert!(sign_change_roots(&p, 0.0, 1.0).is_empty());
        assert!(sign_change_roots(&PolynomialFn::constant(3.0), 0.0, 1.0).is_empty());
    }

    #[test]
    fn knots_bound_monotone_pieces() {
        // 2 - (u-1)^2 has its maximum at u = 1
        let p = PolynomialFn::new(vec![1.0, 2.0, -1.0]);
        let k = monotone_knots(&p, 0.0, 3.0);
        assert_eq!(k.len(), 3);
        assert!((k[1] - 1.0).abs() < 1e-12);
        // u^3 is monotone: the double root of its derivative does not split
        assert_eq!(monotone_knots(&PolynomialFn::monomial(3), -1.0, 1.0), vec![-1.0, 1.0]);
    }
}
