//! Admissibility checking: double points of the projection and the
//! genericity conditions on the cut angle.

use rayon::prelude::*;
use serde::Serialize;

use super::marks::scan_loop;
use super::predicates::{adjacent_degenerate, contact, point_segment_distance, Contact};
use super::{Link, Point, ANGLE_TOL, COINCIDENCE_TOL};
use crate::error::{Error, Result};

use std::f64::consts::TAU;

/// A position on a loop: segment index, parameter, and the lifted angle there.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ArcPosition {
    pub loop_index: usize,
    pub segment: usize,
    pub t: f64,
    pub theta: f64,
}

/// A transverse crossing of two arcs of the projection.
///
/// `first` precedes `second` in (loop, segment) order. `sign` is the sign of
/// `first' x second'`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DoublePoint {
    pub point: Point,
    pub first: ArcPosition,
    pub second: ArcPosition,
    pub sign: i8,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct AdmissibilityReport {
    pub double_points: Vec<DoublePoint>,
    /// Points where three or more arcs meet.
    pub triple_points: Vec<Point>,
    /// Double points with parallel tangents.
    pub non_transverse: Vec<Point>,
    /// `(loop, segment)` pairs lying entirely at the cut angle.
    pub cut_along_segment: Vec<(usize, usize)>,
    /// `(loop, vertex)` pairs touching the cut angle without crossing it.
    pub cut_tangential: Vec<(usize, usize)>,
    /// Crossing marks that sit on a double point.
    pub cut_at_double_point: Vec<(usize, Point)>,
    /// Double points where both arcs have the same angle, i.e. the curves
    /// actually meet.
    pub self_intersections: Vec<Point>,
    /// Vertical loops whose base point lies on another curve.
    pub vertical_conflicts: Vec<usize>,
}

impl AdmissibilityReport {
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        for p in &self.triple_points {
            v.push(format!("triple point at ({}, {})", p.x, p.y));
        }
        for p in &self.non_transverse {
            v.push(format!("non-transverse double point at ({}, {})", p.x, p.y));
        }
        for (l, s) in &self.cut_along_segment {
            v.push(format!("segment {s} of loop {l} lies at the cut angle"));
        }
        for (l, s) in &self.cut_tangential {
            v.push(format!("loop {l} touches the cut angle at vertex {s}"));
        }
        for (l, p) in &self.cut_at_double_point {
            v.push(format!("loop {l} crosses the cut angle at the double point ({}, {})", p.x, p.y));
        }
        for p in &self.self_intersections {
            v.push(format!("curves meet above ({}, {})", p.x, p.y));
        }
        for l in &self.vertical_conflicts {
            v.push(format!("vertical loop {l} sits on another curve"));
        }
        v
    }

    pub fn is_admissible(&self) -> bool {
        self.violations().is_empty()
    }

    /// `Ok` if admissible, otherwise the first violation as an error.
    pub fn ok(&self) -> Result<()> {
        match self.violations().into_iter().next() {
            None => Ok(()),
            Some(msg) => Err(Error::NotAdmissible(msg)),
        }
    }
}

#[derive(Clone, Copy)]
struct Seg {
    loop_index: usize,
    index: usize,
    nseg: usize,
    a: Point,
    b: Point,
}

fn theta_tie(a: f64, b: f64) -> bool {
    let d = (a - b) / TAU;
    (d - d.round()).abs() * TAU < ANGLE_TOL
}

enum PairOutcome {
    Cross(DoublePoint),
    Degenerate(String),
}

fn examine(link: &Link, s: &Seg, r: &Seg) -> Option<PairOutcome> {
    if s.loop_index == r.loop_index {
        let l = &link.loops()[s.loop_index];
        let (i, j) = (s.index, r.index);
        let mut adjacent = false;
        if j == i + 1 {
            adjacent = true;
            if adjacent_degenerate(l.point(i), l.point(j), l.point(j + 1)) {
                return Some(PairOutcome::Degenerate(format!(
                    "loop {} folds back at vertex {}",
                    s.loop_index, j
                )));
            }
        }
        if i == 0 && j == s.nseg - 1 {
            adjacent = true;
            if adjacent_degenerate(l.point(j), l.point(0), l.point(1)) {
                return Some(PairOutcome::Degenerate(format!(
                    "loop {} folds back at vertex 0",
                    s.loop_index
                )));
            }
        }
        if adjacent {
            return None;
        }
    }
    match contact(s.a, s.b, r.a, r.b) {
        Contact::Disjoint => None,
        Contact::Degenerate => Some(PairOutcome::Degenerate(format!(
            "segment {} of loop {} and segment {} of loop {} touch without crossing transversally",
            s.index, s.loop_index, r.index, r.loop_index
        ))),
        Contact::Cross { ta, tb, point } => {
            let (_, th_a) = link.loops()[s.loop_index].at(s.index, ta);
            let (_, th_b) = link.loops()[r.loop_index].at(r.index, tb);
            let c = s.b.sub(s.a).cross(r.b.sub(r.a));
            Some(PairOutcome::Cross(DoublePoint {
                point,
                first: ArcPosition {
                    loop_index: s.loop_index,
                    segment: s.index,
                    t: ta,
                    theta: th_a,
                },
                second: ArcPosition {
                    loop_index: r.loop_index,
                    segment: r.index,
                    t: tb,
                    theta: th_b,
                },
                sign: if c > 0.0 {
                    1
                } else if c < 0.0 {
                    -1
                } else {
                    0
                },
            }))
        }
    }
}

/// Find all double points and check the admissibility conditions.
///
/// Errors with `DegenerateGeometry` if projected curves touch without a
/// transverse crossing (a vertex on another segment, overlaps, fold-backs).
pub fn validate(link: &Link) -> Result<AdmissibilityReport> {
    let mut segs = Vec::new();
    for (li, l) in link.loops().iter().enumerate() {
        if l.is_vertical() {
            continue;
        }
        for i in 0..l.num_segments() {
            let (a, b) = l.segment(i);
            segs.push(Seg {
                loop_index: li,
                index: i,
                nseg: l.num_segments(),
                a,
                b,
            });
        }
    }

    let per_seg: Vec<Vec<PairOutcome>> = (0..segs.len())
        .into_par_iter()
        .map(|i| {
            segs[i + 1..]
                .iter()
                .filter_map(|r| examine(link, &segs[i], r))
                .collect()
        })
        .collect();

    let mut report = AdmissibilityReport::default();
    for outcome in per_seg.into_iter().flatten() {
        match outcome {
            PairOutcome::Degenerate(msg) => return Err(Error::DegenerateGeometry(msg)),
            PairOutcome::Cross(dp) => report.double_points.push(dp),
        }
    }

    let dps = report.double_points.clone();
    for (i, d) in dps.iter().enumerate() {
        if d.sign == 0 {
            report.non_transverse.push(d.point);
        }
        if theta_tie(d.first.theta, d.second.theta) {
            report.self_intersections.push(d.point);
        }
        let clustered = dps
            .iter()
            .enumerate()
            .any(|(j, e)| j != i && e.point.dist(d.point) < COINCIDENCE_TOL);
        let leader = !dps[..i].iter().any(|e| e.point.dist(d.point) < COINCIDENCE_TOL);
        if clustered && leader {
            report.triple_points.push(d.point);
        }
    }

    for (li, l) in link.loops().iter().enumerate() {
        let scan = scan_loop(l, li, link.t0());
        report.cut_along_segment.extend(scan.flat.iter().map(|&s| (li, s)));
        report.cut_tangential.extend(scan.tangential.iter().map(|&v| (li, v)));
        for m in &scan.marks {
            if dps.iter().any(|d| d.point.dist(m.point) < COINCIDENCE_TOL) {
                report.cut_at_double_point.push((li, m.point));
            }
        }
    }

    for (li, l) in link.loops().iter().enumerate() {
        if !l.is_vertical() {
            continue;
        }
        let q = l.point(0);
        let on_segment = segs
            .iter()
            .any(|s| point_segment_distance(q, s.a, s.b) < COINCIDENCE_TOL);
        let shared = link
            .loops()
            .iter()
            .enumerate()
            .any(|(j, o)| j != li && o.is_vertical() && o.point(0).dist(q) < COINCIDENCE_TOL);
        if on_segment || shared {
            report.vertical_conflicts.push(li);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Loop;
    use crate::numbers::Color;

    fn sq(x: f64, y: f64, s: f64, theta: f64) -> Loop {
        Loop::planar_polygon(
            &[
                Point::new(x, y),
                Point::new(x + s, y),
                Point::new(x + s, y + s),
                Point::new(x, y + s),
            ],
            theta,
            Color::HALF,
        )
        .unwrap()
    }

    #[test]
    fn overlapping_squares_cross_twice() {
        let link = Link::new(vec![sq(0.0, 0.0, 2.0, 1.0), sq(1.0, 1.0, 2.0, 2.0)], 0.0, 1).unwrap();
        let r = validate(&link).unwrap();
        assert_eq!(r.double_points.len(), 2);
        assert!(r.is_admissible());
        let signs: i32 = r.double_points.iter().map(|d| d.sign as i32).sum();
        assert_eq!(signs, 0);
    }

    #[test]
    fn equal_angles_meet() {
        let link = Link::new(vec![sq(0.0, 0.0, 2.0, 1.0), sq(1.0, 1.0, 2.0, 1.0)], 0.0, 1).unwrap();
        let r = validate(&link).unwrap();
        assert_eq!(r.self_intersections.len(), 2);
        assert!(r.ok().is_err());
    }

    #[test]
    fn touching_is_degenerate() {
        let link = Link::new(vec![sq(0.0, 0.0, 1.0, 1.0), sq(1.0, 0.0, 1.0, 2.0)], 0.0, 1).unwrap();
        assert!(matches!(validate(&link), Err(Error::DegenerateGeometry(_))));
    }

    #[test]
    fn fold_back_is_degenerate() {
        let l = Loop::new(
            vec![[0.0, 0.0, 0.0], [2.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.0]],
            Color::HALF,
            0,
            false,
        )
        .unwrap();
        let link = Link::new(vec![l], 1.0, 1).unwrap();
        assert!(matches!(validate(&link), Err(Error::DegenerateGeometry(_))));
    }

    #[test]
    fn triple_point_detected() {
        let seg = |a: (f64, f64), b: (f64, f64), apex: (f64, f64), th: f64| {
            Loop::planar_polygon(
                &[Point::new(a.0, a.1), Point::new(b.0, b.1), Point::new(apex.0, apex.1)],
                th,
                Color::HALF,
            )
            .unwrap()
        };
        let link = Link::new(
            vec![
                seg((-1.0, 0.0), (1.0, 0.0), (0.3, -4.0), 0.1),
                seg((0.0, -1.0), (0.0, 1.0), (4.0, 0.2), 0.2),
                seg((-1.0, -1.0), (1.0, 1.0), (-3.1, 3.3), 0.3),
            ],
            0.0,
            1,
        )
        .unwrap();
        let r = validate(&link).unwrap();
        assert_eq!(r.triple_points.len(), 1);
        assert!(r.triple_points[0].dist(Point::new(0.0, 0.0)) < 1e-12);
    }
}
