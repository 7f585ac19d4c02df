// SPDX-License-Identifier: MIT OR Apache-2.0

//! Passages of a path through a fixed level.
//!
//! Every event is located on the monotone pieces of the path: a strict sign
//! change of `V - x` between the ends of a piece is a continuous crossing, a
//! zero at the start of a piece is classified by the far ends of the two
//! adjacent pieces, and a jump whose open span contains `x` is a jump
//! crossing.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::path::FvPath;
use crate::roots::{self, sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TouchSide {
    /// `V <= x` near the touch.
    Below,
    /// `V >= x` near the touch.
    Above,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    ContinuousUp,
    ContinuousDown,
    JumpUp,
    JumpDown,
    Touch(TouchSide),
}

impl EventKind {
    pub fn is_up(self) -> bool {
        matches!(self, EventKind::ContinuousUp | EventKind::JumpUp)
    }

    pub fn is_down(self) -> bool {
        matches!(self, EventKind::ContinuousDown | EventKind::JumpDown)
    }

    pub fn is_continuous_crossing(self) -> bool {
        matches!(self, EventKind::ContinuousUp | EventKind::ContinuousDown)
    }

    pub fn is_jump(self) -> bool {
        matches!(self, EventKind::JumpUp | EventKind::JumpDown)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingEvent {
    pub time: f64,
    pub kind: EventKind,
    pub segment_index: usize,
    /// Classified from the left side only (the event sits at the end of the
    /// path, or the path is flat at the level right after it).
    pub one_sided: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexReason {
    /// A jump starts or ends at the level.
    JumpEndpoint,
    /// The path is constant at the level on a time interval.
    NonDiscreteLevelSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Simple,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LevelClass {
    pub jump_endpoint: bool,
    pub non_discrete: bool,
}

impl LevelClass {
    pub fn verdict(&self) -> Verdict {
        if self.is_simple() {
            Verdict::Simple
        } else {
            Verdict::Complex
        }
    }

    pub fn is_simple(&self) -> bool {
        !self.jump_endpoint && !self.non_discrete
    }

    pub fn reasons(&self) -> Vec<ComplexReason> {
        let mut out = Vec::new();
        if self.jump_endpoint {
            out.push(ComplexReason::JumpEndpoint);
        }
        if self.non_discrete {
            out.push(ComplexReason::NonDiscreteLevelSet);
        }
        out
    }
}

impl fmt::Display for LevelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.jump_endpoint, self.non_discrete) {
            (false, false) => f.write_str("simple"),
            (true, false) => f.write_str("jump endpoint"),
            (false, true) => f.write_str("non-discrete level set"),
            (true, true) => f.write_str("jump endpoint, non-discrete level set"),
        }
    }
}

fn check_horizon(path: &FvPath, t: f64) -> Result<()> {
    if t > 0.0 && t <= path.horizon() {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            t,
            horizon: path.horizon(),
        })
    }
}

pub fn classify_level(path: &FvPath, x: f64, t: f64) -> Result<LevelClass> {
    check_horizon(path, t)?;
    let tau = path.level_tolerance();
    let near = |v: f64| (v - x).abs() <= tau;
    Ok(LevelClass {
        jump_endpoint: path.jumps_until(t).any(|j| near(j.before) || near(j.after)),
        non_discrete: path
            .pieces()
            .iter()
            .take_while(|p| p.start < t)
            .any(|p| near(p.start_value) && near(p.end_value)),
    })
}

/// All passages through `x` with time in `(0, t]`, in time order.
pub fn level_events(path: &FvPath, x: f64, t: f64) -> Result<Vec<CrossingEvent>> {
    let class = classify_level(path, x, t)?;
    if !class.is_simple() {
        return Err(Error::ComplexLevel { level: x, class });
    }
    let tau = path.level_tolerance();
    let side = |v: f64| {
        let d = v - x;
        if d.abs() <= tau {
            0.0
        } else {
            sign(d)
        }
    };

    let pieces = path.pieces();
    let mut events = Vec::new();
    for (k, piece) in pieces.iter().enumerate() {
        if piece.start > t {
            break;
        }
        let s0 = side(piece.start_value);
        let s1 = side(piece.end_value);

        if s0 == 0.0 && k > 0 && !piece.after_jump {
            let left = side(pieces[k - 1].start_value);
            if left != 0.0 {
                let (kind, one_sided) = if s1 == 0.0 {
                    (directional(left), true)
                } else if left == s1 {
                    let touch = if left < 0.0 { TouchSide::Below } else { TouchSide::Above };
                    (EventKind::Touch(touch), false)
                } else {
                    (directional(left), false)
                };
                events.push(CrossingEvent {
                    time: piece.start,
                    kind,
                    segment_index: piece.segment,
                    one_sided,
                });
            }
        }

        if s0 * s1 < 0.0 {
            let seg = piece.segment;
            let t_seg = path.breakpoints()[seg];
            let p = &path.segments()[seg];
            let (u0, u1) = (piece.start - t_seg, piece.end - t_seg);
            let u = roots::bisect(
                |u| p.eval(u) - x,
                u0,
                u1,
                s0,
                roots::BISECTION_REL_WIDTH * (path.breakpoints()[seg + 1] - t_seg),
            );
            events.push(CrossingEvent {
                time: t_seg + u,
                kind: if s1 > 0.0 {
                    EventKind::ContinuousUp
                } else {
                    EventKind::ContinuousDown
                },
                segment_index: seg,
                one_sided: false,
            });
        }
    }

    // a zero at the very end of the path has no right-hand side
    let last = pieces[pieces.len() - 1];
    let n = path.segment_count();
    let ends_in_jump = path.jumps().last().is_some_and(|j| j.index == n);
    if !ends_in_jump && side(last.end_value) == 0.0 {
        let left = side(last.start_value);
        if left != 0.0 {
            events.push(CrossingEvent {
                time: path.horizon(),
                kind: directional(left),
                segment_index: last.segment,
                one_sided: true,
            });
        }
    }

    for j in path.jumps_until(t) {
        let (b, a) = (side(j.before), side(j.after));
        let kind = if b < 0.0 && a > 0.0 {
            EventKind::JumpUp
        } else if b > 0.0 && a < 0.0 {
            EventKind::JumpDown
        } else {
            continue;
        };
        events.push(CrossingEvent {
            time: j.time,
            kind,
            segment_index: j.index.min(n - 1),
            one_sided: false,
        });
    }

    events.retain(|e| e.time <= t);
    events.sort_by(|a, b| a.time.total_cmp(&b.time));
    Ok(events)
}

/// Up when arriving from below, down when arriving from above.
fn directional(left: f64) -> EventKind {
    if left < 0.0 {
        EventKind::ContinuousUp
    } else {
        EventKind::ContinuousDown
    }
}

/// `N_x(t)`: number of times `s <= t` with `x` between `V(s-)` and `V(s)`.
pub fn crossing_count(path: &FvPath, x: f64, t: f64) -> Result<usize> {
    level_events(path, x, t).map(|e| e.len())
}

/// Levels off which the local-time profile at horizon `t` is locally
/// constant: path values at piece ends (segment ends, extrema, `V(0)`,
/// `V(t)`) and jump endpoints up to `t`. Values closer than a few level
/// tolerances are merged.
pub fn critical_values(path: &FvPath, t: f64) -> Result<Vec<f64>> {
    path.check_time(t)?;
    let mut values = Vec::new();
    values.push(path.value(0.0)?);
    for piece in path.pieces_until(t) {
        values.push(piece.start_value);
        values.push(piece.end_value);
    }
    for j in path.jumps_until(t) {
        values.push(j.before);
        values.push(j.after);
    }
    values.sort_by(f64::total_cmp);
    let merge = 4.0 * path.level_tolerance();
    let mut out: Vec<f64> = Vec::with_capacity(values.len());
    for v in values {
        match out.last() {
            Some(&prev) if v - prev <= merge => {}
            _ => out.push(v),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{make_fixture, Fixture};
    use alloc::vec;

    fn kinds(events: &[CrossingEvent]) -> Vec<EventKind> {
        events.iter().map(|e| e.kind).collect()
    }

    #[test]
    fn zigzag_events() {
        let z = make_fixture(&Fixture::Zigzag).unwrap();
        let ev = level_events(&z, 1.5, 3.0).unwrap();
        assert_eq!(
            kinds(&ev),
            vec![
                EventKind::ContinuousUp,
                EventKind::ContinuousDown,
                EventKind::ContinuousUp
            ]
        );
        for (e, t) in ev.iter().zip([0.75, 1.5, 2.25]) {
            assert!((e.time - t).abs() < 1e-12);
        }
        assert_eq!(crossing_count(&z, 1.5, 3.0).unwrap(), 3);
        assert!(classify_level(&z, 1.5, 3.0).unwrap().is_simple());
    }

    #[test]
    fn parab_touch() {
        let p = make_fixture(&Fixture::Parab).unwrap();
        let ev = level_events(&p, 0.0, 2.0).unwrap();
        assert_eq!(kinds(&ev), vec![EventKind::Touch(TouchSide::Above)]);
        assert!((ev[0].time - 1.0).abs() < 1e-12);
        assert_eq!(crossing_count(&p, 0.0, 2.0).unwrap(), 1);

        let q = make_fixture(&Fixture::NegParab).unwrap();
        let ev = level_events(&q, 0.0, 2.0).unwrap();
        assert_eq!(kinds(&ev), vec![EventKind::Touch(TouchSide::Below)]);
    }

    #[test]
    fn jumpmid_events() {
        let j = make_fixture(&Fixture::JumpMid).unwrap();
        let ev = level_events(&j, 1.0, 2.0).unwrap();
        assert_eq!(
            kinds(&ev),
            vec![EventKind::ContinuousUp, EventKind::JumpDown, EventKind::ContinuousUp]
        );
        assert!((ev[0].time - 0.5).abs() < 1e-12);
        assert_eq!(ev[1].time, 1.0);
        assert!((ev[2].time - 1.5).abs() < 1e-12);
    }

    #[test]
    fn stair_jump_crossing() {
        let s = make_fixture(&Fixture::Stair { steps: 3 }).unwrap();
        assert_eq!(crossing_count(&s, 0.5, 3.0).unwrap(), 1);
        let ev = level_events(&s, 2.5, 3.0).unwrap();
        assert_eq!(kinds(&ev), vec![EventKind::JumpUp]);
        assert_eq!(ev[0].time, 3.0);
    }

    #[test]
    fn complex_levels() {
        let j = make_fixture(&Fixture::JumpMid).unwrap();
        let c = classify_level(&j, 2.0, 2.0).unwrap();
        assert_eq!(c.reasons(), vec![ComplexReason::JumpEndpoint]);
        assert_eq!(c.verdict(), Verdict::Complex);
        // the jump at t = 1 lies after the horizon
        assert!(classify_level(&j, 2.0, 0.9).unwrap().is_simple());
        assert!(matches!(level_events(&j, 0.5, 2.0), Err(Error::ComplexLevel { .. })));

        let c = make_fixture(&Fixture::Const {
            value: 1.25,
            horizon: 2.0,
        })
        .unwrap();
        assert_eq!(
            classify_level(&c, 1.25, 2.0).unwrap().reasons(),
            vec![ComplexReason::NonDiscreteLevelSet]
        );
        assert!(classify_level(&c, 1.0, 2.0).unwrap().is_simple());
        assert!(matches!(classify_level(&c, 1.0, 0.0), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn breakpoint_extrema_are_touches() {
        let z = make_fixture(&Fixture::Zigzag).unwrap();
        let ev = level_events(&z, 2.0, 3.0).unwrap();
        // peak at t = 1, then the final segment passes 2 on the way up
        assert_eq!(
            kinds(&ev),
            vec![EventKind::Touch(TouchSide::Below), EventKind::ContinuousUp]
        );
        let ev = level_events(&z, 1.0, 3.0).unwrap();
        assert_eq!(
            kinds(&ev),
            vec![EventKind::ContinuousUp, EventKind::Touch(TouchSide::Above)]
        );
        assert_eq!(ev[1].time, 2.0);
    }

    #[test]
    fn horizon_event_is_one_sided() {
        let d = make_fixture(&Fixture::Drift).unwrap();
        let ev = level_events(&d, 2.0, 2.0).unwrap();
        assert_eq!(ev.len(), 1);
        assert!(ev[0].one_sided);
        assert_eq!(ev[0].kind, EventKind::ContinuousUp);
        // below the end of the path the crossing is ordinary
        let ev = level_events(&d, 1.0, 1.0).unwrap();
        assert_eq!(ev.len(), 1);
        assert!(!ev[0].one_sided);
    }

    #[test]
    fn critical_value_sets() {
        let z = make_fixture(&Fixture::Zigzag).unwrap();
        assert_eq!(critical_values(&z, 3.0).unwrap(), vec![0.0, 1.0, 2.0, 3.0]);
        let j = make_fixture(&Fixture::JumpMid).unwrap();
        assert_eq!(critical_values(&j, 2.0).unwrap(), vec![0.0, 0.5, 1.5, 2.0]);
        let c = make_fixture(&Fixture::Const {
            value: -0.5,
            horizon: 1.0,
        })
        .unwrap();
        assert_eq!(critical_values(&c, 1.0).unwrap(), vec![-0.5]);
        // truncation: ZIGZAG on [0, 1.5] reaches 2 and comes back to 1.5
        assert_eq!(critical_values(&z, 1.5).unwrap(), vec![0.0, 1.5, 2.0]);
    }
}
