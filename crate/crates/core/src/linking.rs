//! Combinatorial linking numbers of loops in `S^2 x S^1` and horizontal
//! push-offs.
//!
//! `lk` pairs projected crossings with the order of the two angles on the
//! circle cut open at `t0`. It depends on `t0`; the corrected `link_number`
//! does not.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::predicates::{contact, point_segment_distance, segment_distance, Contact};
use crate::geometry::{
    ind, loop_marks, validate, winding_s1, ArcPosition, Link, Loop, Point, ANGLE_TOL,
};
use crate::numbers::HalfInt;

/// One projected crossing of a pair of loops.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CrossingDatum {
    /// Position on the first loop.
    pub s: ArcPosition,
    /// Position on the second loop.
    pub u: ArcPosition,
    pub point: Point,
    /// Sign of `l' x l~'` at the crossing.
    pub cross_sign: i8,
    /// `+1` if the first loop's angle comes first after `t0`, else `-1`.
    pub s1_order: i8,
}

fn cut_position(theta: f64, t0: f64) -> f64 {
    (theta - t0).rem_euclid(TAU)
}

fn reject_vertical_pair(l: &Loop, lt: &Loop) -> Result<()> {
    if l.is_vertical() {
        return Err(Error::VerticalLoop(0));
    }
    if lt.is_vertical() {
        return Err(Error::VerticalLoop(1));
    }
    Ok(())
}

/// All projected crossings of `l` with `lt`, ordered by segment of `l`, then
/// segment of `lt`.
pub fn pair_crossings(l: &Loop, lt: &Loop, t0: f64) -> Result<Vec<CrossingDatum>> {
    reject_vertical_pair(l, lt)?;
    let mut out = Vec::new();
    for i in 0..l.num_segments() {
        let (a0, a1) = l.segment(i);
        for j in 0..lt.num_segments() {
            let (b0, b1) = lt.segment(j);
            match contact(a0, a1, b0, b1) {
                Contact::Disjoint => {}
                Contact::Degenerate => {
                    return Err(Error::NonTransverse(format!(
                        "segment {i} of the first loop touches segment {j} of the second"
                    )))
                }
                Contact::Cross { ta, tb, point } => {
                    let (_, th) = l.at(i, ta);
                    let (_, tht) = lt.at(j, tb);
                    let (p, pt) = (cut_position(th, t0), cut_position(tht, t0));
                    for q in [p, pt] {
                        if q < ANGLE_TOL || TAU - q < ANGLE_TOL {
                            return Err(Error::NotAdmissible(format!(
                                "a loop crosses the cut angle at the double point ({}, {})",
                                point.x, point.y
                            )));
                        }
                    }
                    if (p - pt).abs() < ANGLE_TOL {
                        return Err(Error::NotAdmissible(format!(
                            "the loops meet above ({}, {})",
                            point.x, point.y
                        )));
                    }
                    let c = a1.sub(a0).cross(b1.sub(b0));
                    if c == 0.0 {
                        return Err(Error::NonTransverse("parallel tangents at a crossing".into()));
                    }
                    out.push(CrossingDatum {
                        s: ArcPosition {
                            loop_index: 0,
                            segment: i,
                            t: ta,
                            theta: th,
                        },
                        u: ArcPosition {
                            loop_index: 1,
                            segment: j,
                            t: tb,
                            theta: tht,
                        },
                        point,
                        cross_sign: if c > 0.0 { 1 } else { -1 },
                        s1_order: if p < pt { 1 } else { -1 },
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `LK(l, lt) = 1/2 sum s1_order * cross_sign`.
pub fn lk(l: &Loop, lt: &Loop, t0: f64) -> Result<HalfInt> {
    let twice: i64 = pair_crossings(l, lt, t0)?
        .iter()
        .map(|c| (c.s1_order * c.cross_sign) as i64)
        .sum();
    Ok(HalfInt::from_twice(twice))
}

fn require_null_homologous(l: &Loop, loop_index: usize) -> Result<()> {
    let wind = winding_s1(l);
    if wind != 0 {
        return Err(Error::NotNullHomologous { loop_index, wind });
    }
    Ok(())
}

/// Topological linking number of two 0-homologous loops: `LK` corrected by
/// the indices at the crossing marks of each loop with respect to the other.
pub fn link_number(l: &Loop, lt: &Loop, t0: f64) -> Result<i64> {
    reject_vertical_pair(l, lt)?;
    require_null_homologous(l, 0)?;
    require_null_homologous(lt, 1)?;
    let mut twice = lk(l, lt, t0)?.twice();
    for m in loop_marks(l, 0, t0)? {
        twice -= 2 * m.sign as i64 * ind(lt, m.point)?;
    }
    for m in loop_marks(lt, 1, t0)? {
        twice -= 2 * m.sign as i64 * ind(l, m.point)?;
    }
    if twice % 2 != 0 {
        return Err(Error::NotAdmissible("linking number came out non-integral".into()));
    }
    Ok(twice / 2)
}

/// Which side of the directed curve a push-off moves to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Smallest geometric feature of the projected loop: segment lengths,
/// distances between non-adjacent segments, and distances from
/// self-crossings to segment endpoints.
pub fn feature_size(l: &Loop) -> f64 {
    let n = l.num_segments();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let (a0, a1) = l.segment(i);
        best = best.min(a0.dist(a1));
        for j in i + 1..n {
            let (b0, b1) = l.segment(j);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // shared vertex; distance of the far endpoints to the other segment
                let (far_a, far_b) = if j == i + 1 { (a0, b1) } else { (a1, b0) };
                best = best
                    .min(point_segment_distance(far_a, b0, b1))
                    .min(point_segment_distance(far_b, a0, a1));
                continue;
            }
            match contact(a0, a1, b0, b1) {
                Contact::Cross { point, .. } => {
                    for e in [a0, a1, b0, b1] {
                        best = best.min(point.dist(e));
                    }
                }
                _ => best = best.min(segment_distance(a0, a1, b0, b1)),
            }
        }
    }
    best
}

/// Largest offset for which the push-off stays clear of the other branch at
/// every self-crossing: near a crossing the offset moves the crossing along
/// both branches, and the angles there must not close the gap between them.
fn lift_gap_bound(l: &Loop) -> f64 {
    let n = l.num_segments();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let (a0, a1) = l.segment(i);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (b0, b1) = l.segment(j);
            if let Contact::Cross { ta, tb, .. } = contact(a0, a1, b0, b1) {
                let (da, db) = (a1.sub(a0), b1.sub(b0));
                let gap = {
                    let d = (l.at(i, ta).1 - l.at(j, tb).1).rem_euclid(TAU);
                    d.min(TAU - d)
                };
                let slope_a = (l.theta(i + 1) - l.theta(i)).abs() / da.norm();
                let slope_b = (l.theta(j + 1) - l.theta(j)).abs() / db.norm();
                let sin = (da.cross(db) / (da.norm() * db.norm())).abs();
                if slope_a + slope_b > 0.0 {
                    best = best.min(gap * sin / (4.0 * (slope_a + slope_b)));
                }
            }
        }
    }
    best
}

/// Offsets strictly below this are candidates for a push-off: a third of the
/// planar feature size, further limited near self-crossings whose branches
/// are close in angle.
pub fn pushoff_threshold(l: &Loop) -> f64 {
    (feature_size(l) / 3.0).min(lift_gap_bound(l))
}

/// Horizontal push-off to the left of the directed projected curve; the
/// angle lift is unchanged.
pub fn pushoff(l: &Loop, offset: f64) -> Result<Loop> {
    pushoff_side(l, offset, Side::Left)
}

pub fn pushoff_side(l: &Loop, offset: f64, side: Side) -> Result<Loop> {
    if l.is_vertical() {
        return Err(Error::VerticalLoop(0));
    }
    let limit = pushoff_threshold(l);
    if !(offset > 0.0 && offset < limit) {
        return Err(Error::OffsetTooLarge { offset, limit });
    }
    let s = match side {
        Side::Left => offset,
        Side::Right => -offset,
    };
    let n = l.num_segments();
    let mut verts: Vec<[f64; 3]> = Vec::with_capacity(n + 2);
    for i in 0..n {
        let prev = l.point((i + n - 1) % n);
        let cur = l.point(i);
        let next = l.point(i + 1);
        let n1 = cur.sub(prev).left_normal();
        let n2 = next.sub(cur).left_normal();
        let th = l.theta(i);
        let miter = n1.add(n2).scale(1.0 / (1.0 + n1.dot(n2)));
        // bevel only on the convex side; on the concave side the offset
        // segments meet at the miter point
        let concave = cur.sub(prev).cross(next.sub(cur)) * s > 0.0;
        if concave || miter.norm() <= 2.0 {
            let p = cur.add(miter.scale(s));
            verts.push([p.x, p.y, th]);
        } else {
            for nn in [n1, n2] {
                let p = cur.add(nn.scale(s));
                verts.push([p.x, p.y, th]);
            }
        }
    }
    let first = verts[0];
    verts.push([first[0], first[1], l.theta(n)]);
    let too_large = || Error::OffsetTooLarge { offset, limit };
    let p = Loop::new(verts, l.color(), l.framing(), false).map_err(|_| too_large())?;

    // The push-off must stay a parallel copy: each self-crossing of `l`
    // yields two crossings with it and one self-crossing of the copy.
    let k = l.color().twice().max(1);
    let pair = Link::new(vec![l.clone(), p.clone()], 0.0, k)?;
    let report = validate(&pair).map_err(|_| too_large())?;
    let own = report
        .double_points
        .iter()
        .filter(|d| d.first.loop_index == 0 && d.second.loop_index == 0)
        .count();
    let copy = report
        .double_points
        .iter()
        .filter(|d| d.first.loop_index == 1 && d.second.loop_index == 1)
        .count();
    let mixed = report.double_points.len() - own - copy;
    if copy != own || mixed != 2 * own || !report.triple_points.is_empty() {
        return Err(too_large());
    }
    Ok(p)
}

/// Linking number of a 0-homologous loop with its horizontal push-off,
/// evaluated at two offsets that must agree.
pub fn self_link(l: &Loop, t0: f64) -> Result<i64> {
    self_link_side(l, t0, Side::Left)
}

pub fn self_link_side(l: &Loop, t0: f64, side: Side) -> Result<i64> {
    require_null_homologous(l, 0)?;
    let thr = pushoff_threshold(l);
    let a = link_number(l, &pushoff_side(l, thr / 4.0, side)?, t0)?;
    let b = link_number(l, &pushoff_side(l, thr / 8.0, side)?, t0)?;
    if a != b {
        return Err(Error::UnstableFraming(a, b));
    }
    Ok(a)
}
