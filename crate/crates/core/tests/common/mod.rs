// SPDX-License-Identifier: MIT OR Apache-2.0

#![allow(dead_code)]

use fvlocal::{make_fixture, random_path, Fixture, FvPath, RandomPathParams};

pub const RANDOM_SEEDS: std::ops::RangeInclusive<u64> = 1..=200;

pub struct Named {
    pub name: String,
    pub path: FvPath,
}

pub fn fixtures() -> Vec<Named> {
    Fixture::catalog()
        .iter()
        .map(|f| Named {
            name: f.name().to_string(),
            path: make_fixture(f).unwrap(),
        })
        .collect()
}

pub fn randoms() -> Vec<Named> {
    RANDOM_SEEDS
        .map(|seed| Named {
            name: format!("random#{seed}"),
            path: random_path(&RandomPathParams::with_seed(seed)).unwrap(),
        })
        .collect()
}

pub fn corpus() -> Vec<Named> {
    let mut all = fixtures();
    all.extend(randoms());
    all
}

/// Time grid with `per_segment` uniform steps inside every segment of
/// `[0, t]`, every breakpoint included.
pub fn dense_grid(path: &FvPath, t: f64, per_segment: usize) -> Vec<f64> {
    let mut grid = vec![0.0];
    for w in path.breakpoints().windows(2) {
        if w[0] >= t {
            break;
        }
        let end = w[1].min(t);
        for k in 1..per_segment {
            grid.push(w[0] + (end - w[0]) * k as f64 / per_segment as f64);
        }
        grid.push(end);
    }
    grid
}

/// Brute-force `N_x(t)` at a level far from every critical value: sign
/// changes of `V - x` along a dense grid, using left and right values at
/// every sample so that each jump is seen once. Samples exactly at `x` are
/// skipped.
pub fn brute_force_crossings(path: &FvPath, x: f64, t: f64, per_segment: usize) -> usize {
    let (up, down, jumps) = brute_force_events(path, x, t, per_segment);
    (up + down + jumps) as usize
}

/// Brute-force `(#continuous up, #continuous down, #jump)` crossings.
pub fn brute_force_events(path: &FvPath, x: f64, t: f64, per_segment: usize) -> (i64, i64, i64) {
    let (mut up, mut down, mut jumps) = (0, 0, 0);
    let mut prev = (path.value(0.0).unwrap() - x).signum();
    let side = |v: f64, prev: &mut f64| -> Option<bool> {
        let s = (v - x).signum();
        if v == x || s == *prev {
            return None;
        }
        *prev = s;
        Some(s > 0.0)
    };
    for &s in &dense_grid(path, t, per_segment)[1..] {
        let (value, left) = path.eval(s).unwrap();
        match side(left, &mut prev) {
            Some(true) => up += 1,
            Some(false) => down += 1,
            None => {}
        }
        if side(value, &mut prev).is_some() {
            jumps += 1;
        }
    }
    (up, down, jumps)
}
