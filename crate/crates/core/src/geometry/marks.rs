//! Winding around `S^1`, crossing marks with the level `t0` and planar indices.

use std::f64::consts::TAU;

use serde::Serialize;

use super::predicates::{polygon_distance, winding_number};
use super::{Link, Loop, Point, ANGLE_TOL, COINCIDENCE_TOL};
use crate::error::{Error, Result};

/// A point where a loop passes through the level `theta = t0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CrossingMark {
    pub loop_index: usize,
    pub segment: usize,
    /// Parameter in `[0, 1)` along the segment.
    pub t: f64,
    pub point: Point,
    /// `+1` when `theta` increases through `t0`.
    pub sign: i8,
}

/// Winding number of the loop's `S^1` coordinate.
pub fn winding_s1(l: &Loop) -> i64 {
    let n = l.vertices().len() - 1;
    ((l.theta(n) - l.theta(0)) / TAU).round() as i64
}

pub(crate) struct MarkScan {
    pub marks: Vec<CrossingMark>,
    /// Segments lying entirely at the cut angle.
    pub flat: Vec<usize>,
    /// Vertices touching the cut angle without crossing it.
    pub tangential: Vec<usize>,
}

fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else {
        -1
    }
}

pub(crate) fn scan_loop(l: &Loop, loop_index: usize, t0: f64) -> MarkScan {
    let nseg = l.num_segments();
    let shift = l.theta(nseg) - l.theta(0);
    let frac = |th: f64| (th - t0) / TAU;
    let on_target = |th: f64| {
        let f = frac(th);
        (f - f.round()).abs() * TAU < ANGLE_TOL
    };
    let mut scan = MarkScan {
        marks: Vec::new(),
        flat: Vec::new(),
        tangential: Vec::new(),
    };
    for i in 0..nseg {
        let ta = l.theta(i);
        let tb = l.theta(i + 1);
        if on_target(ta) {
            let prev = if i == 0 {
                l.theta(nseg - 1) - shift
            } else {
                l.theta(i - 1)
            };
            let (dp, dn) = (prev - ta, tb - ta);
            if dp.abs() >= ANGLE_TOL && dn.abs() >= ANGLE_TOL {
                if dp * dn < 0.0 {
                    scan.marks.push(CrossingMark {
                        loop_index,
                        segment: i,
                        t: 0.0,
                        point: l.point(i),
                        sign: sign(dn),
                    });
                } else {
                    scan.tangential.push(i);
                }
            }
        }
        if (tb - ta).abs() < ANGLE_TOL {
            if on_target(ta) {
                scan.flat.push(i);
            }
            continue;
        }
        let (fa, fb) = (frac(ta), frac(tb));
        let lo = fa.min(fb).ceil() as i64;
        let hi = fa.max(fb).floor() as i64;
        let mut levels: Vec<i64> = (lo..=hi)
            .filter(|&m| {
                (m as f64 - fa).abs() * TAU >= ANGLE_TOL && (m as f64 - fb).abs() * TAU >= ANGLE_TOL
            })
            .collect();
        if fb < fa {
            levels.reverse();
        }
        let (a, b) = l.segment(i);
        for m in levels {
            let t = (m as f64 - fa) / (fb - fa);
            scan.marks.push(CrossingMark {
                loop_index,
                segment: i,
                t,
                point: a.lerp(b, t),
                sign: sign(tb - ta),
            });
        }
    }
    scan
}

/// Crossing marks of a single loop, ordered along it.
pub fn loop_marks(l: &Loop, loop_index: usize, t0: f64) -> Result<Vec<CrossingMark>> {
    let scan = scan_loop(l, loop_index, t0);
    if let Some(&s) = scan.flat.first() {
        return Err(Error::NotAdmissible(format!(
            "segment {s} of loop {loop_index} lies at the cut angle"
        )));
    }
    if let Some(&v) = scan.tangential.first() {
        return Err(Error::TangentialCrossing {
            loop_index,
            vertex: v,
        });
    }
    Ok(scan.marks)
}

/// Crossing marks of all loops, ordered by loop and then along each loop.
pub fn crossing_marks(link: &Link) -> Result<Vec<CrossingMark>> {
    let mut out = Vec::new();
    for (i, l) in link.loops().iter().enumerate() {
        out.extend(loop_marks(l, i, link.t0())?);
    }
    Ok(out)
}

/// Index (winding number) of the point `p` with respect to the projected loop.
pub fn ind(l: &Loop, p: Point) -> Result<i64> {
    if !(p.x.is_finite() && p.y.is_finite()) {
        return Err(Error::PointOnCurve { x: p.x, y: p.y });
    }
    if l.is_vertical() {
        return if l.point(0).dist(p) < COINCIDENCE_TOL {
            Err(Error::PointOnCurve { x: p.x, y: p.y })
        } else {
            Ok(0)
        };
    }
    let poly = l.polygon();
    if polygon_distance(&poly, p) < COINCIDENCE_TOL {
        return Err(Error::PointOnCurve { x: p.x, y: p.y });
    }
    Ok(winding_number(&poly, p))
}
