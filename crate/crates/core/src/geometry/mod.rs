//! Piecewise-linear links in `S^2 x S^1`.
//!
//! The sphere is charted by the plane with the marked point `sigma_0` at
//! infinity, so every projected loop is a closed polygon and the index of a
//! point with respect to a loop is the ordinary planar winding number. The
//! `S^1` coordinate is carried as a real lift `theta`.

mod arrangement;
mod faces;
mod marks;
pub(crate) mod predicates;
mod validate;

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::Color;
use crate::quantum::Level;

pub use arrangement::{Arrangement, ArrangementEdge, ArrangementFace, ArrangementVertex};
pub use faces::{face_complex, gleams_dpfree, FaceComplex, FaceInfo};
pub use marks::{crossing_marks, ind, loop_marks, winding_s1, CrossingMark};
pub use validate::{validate, AdmissibilityReport, ArcPosition, DoublePoint};

/// Two planar points (or a point and a curve) closer than this are treated as
/// coincident. Inputs that come this close are rejected, never perturbed.
pub const COINCIDENCE_TOL: f64 = 1e-9;

/// Angular tolerance for deciding `theta = t0 (mod 2 pi)`.
pub const ANGLE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    pub fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }

    pub fn scale(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        self.sub(o).norm()
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + t * (o.x - self.x), self.y + t * (o.y - self.y))
    }

    /// Unit normal pointing to the left of the direction `self`.
    pub fn left_normal(self) -> Point {
        let n = self.norm();
        Point::new(-self.y / n, self.x / n)
    }
}

/// A closed PL loop: vertices `(x, y, theta)` with the closing vertex repeated.
#[derive(Clone, Debug, PartialEq)]
pub struct Loop {
    vertices: Vec<[f64; 3]>,
    color: Color,
    framing: i64,
    vertical: bool,
}

impl Loop {
    /// Build a loop, checking its structural invariants.
    ///
    /// Errors carry `loop_index = 0`; [`Link::new`] re-labels them.
    pub fn new(vertices: Vec<[f64; 3]>, color: Color, framing: i64, vertical: bool) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidLoop {
            loop_index: 0,
            reason: reason.to_string(),
        };
        if vertices.len() < 3 {
            return Err(bad("fewer than 3 vertices"));
        }
        if vertices.iter().flatten().any(|v| !v.is_finite()) {
            return Err(bad("non-finite coordinate"));
        }
        let (first, last) = (vertices[0], vertices[vertices.len() - 1]);
        if Point::new(first[0], first[1]).dist(Point::new(last[0], last[1])) > COINCIDENCE_TOL {
            return Err(bad("first and last planar points differ"));
        }
        let turns = (last[2] - first[2]) / TAU;
        if (turns - turns.round()).abs() * TAU > ANGLE_TOL {
            return Err(bad("theta does not close up to a multiple of 2 pi"));
        }
        let planar = |v: &[f64; 3]| Point::new(v[0], v[1]);
        if vertical {
            if vertices
                .iter()
                .any(|v| planar(v).dist(planar(&first)) > COINCIDENCE_TOL)
            {
                return Err(bad("vertical loop moves in the plane"));
            }
            if turns.round() == 0.0 {
                return Err(bad("vertical loop must wind around S^1 at least once"));
            }
        } else {
            for w in vertices.windows(2) {
                if planar(&w[0]).dist(planar(&w[1])) <= COINCIDENCE_TOL {
                    return Err(bad("zero-length projected segment"));
                }
            }
        }
        let mut vertices = vertices;
        // Snap the closing vertex so the planar polygon closes exactly.
        let n = vertices.len();
        vertices[n - 1][0] = first[0];
        vertices[n - 1][1] = first[1];
        Ok(Loop {
            vertices,
            color,
            framing,
            vertical,
        })
    }

    /// A polygonal loop at constant angle `theta`.
    pub fn planar_polygon(points: &[Point], theta: f64, color: Color) -> Result<Self> {
        let mut v: Vec<[f64; 3]> = points.iter().map(|p| [p.x, p.y, theta]).collect();
        if let Some(&p) = points.first() {
            v.push([p.x, p.y, theta]);
        }
        Loop::new(v, color, 0, false)
    }

    pub fn vertices(&self) -> &[[f64; 3]] {
        &self.vertices
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn framing(&self) -> i64 {
        self.framing
    }

    pub fn is_vertical(&self) -> bool {
        self.vertical
    }

    pub fn num_segments(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn point(&self, i: usize) -> Point {
        let v = self.vertices[i];
        Point::new(v[0], v[1])
    }

    pub fn theta(&self, i: usize) -> f64 {
        self.vertices[i][2]
    }

    /// Planar endpoints of segment `i`.
    pub fn segment(&self, i: usize) -> (Point, Point) {
        (self.point(i), self.point(i + 1))
    }

    /// Planar point and lifted angle at parameter `t` of segment `i`.
    pub fn at(&self, segment: usize, t: f64) -> (Point, f64) {
        let (a, b) = self.segment(segment);
        let th = self.theta(segment) + t * (self.theta(segment + 1) - self.theta(segment));
        (a.lerp(b, t), th)
    }

    /// The projected polygon without the repeated closing vertex.
    pub fn polygon(&self) -> Vec<Point> {
        (0..self.num_segments()).map(|i| self.point(i)).collect()
    }

    /// Twice the signed area of the projected polygon (positive = counter-clockwise).
    pub fn signed_area2(&self) -> f64 {
        (0..self.num_segments())
            .map(|i| {
                let (a, b) = self.segment(i);
                a.cross(b)
            })
            .sum()
    }

    /// Same loop with the planar coordinates moved by `(dx, dy)`.
    pub fn translated(&self, dx: f64, dy: f64) -> Loop {
        let mut l = self.clone();
        for v in &mut l.vertices {
            v[0] += dx;
            v[1] += dy;
        }
        l
    }

    pub fn with_color(mut self, color: Color) -> Loop {
        self.color = color;
        self
    }

    pub fn with_framing(mut self, framing: i64) -> Loop {
        self.framing = framing;
        self
    }

    /// Same planar curve traversed backwards (theta lift reversed with it).
    pub fn reversed(&self) -> Loop {
        let mut l = self.clone();
        l.vertices.reverse();
        l
    }

    /// Insert a vertex at parameter `t` of segment `i` without changing the curve.
    pub fn refined(&self, segment: usize, t: f64) -> Loop {
        let (p, th) = self.at(segment, t);
        let mut l = self.clone();
        l.vertices.insert(segment + 1, [p.x, p.y, th]);
        l
    }
}

/// An ordered list of loops together with the cut angle `t0` and level `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Link {
    loops: Vec<Loop>,
    t0: f64,
    level: u32,
}

impl Link {
    pub fn new(loops: Vec<Loop>, t0: f64, level: u32) -> Result<Self> {
        if !t0.is_finite() {
            return Err(Error::Parse("t0 is not finite".into()));
        }
        let lv = Level::new(level)?;
        for l in &loops {
            lv.check(l.color())?;
        }
        Ok(Link {
            loops,
            t0: t0.rem_euclid(TAU),
            level,
        })
    }

    pub fn loops(&self) -> &[Loop] {
        &self.loops
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn k(&self) -> u32 {
        self.level
    }

    pub fn level(&self) -> Level {
        Level::new(self.level).expect("level validated on construction")
    }

    pub fn is_empty(&self) -> bool {
        self.loops.is_empty()
    }

    pub fn with_t0(&self, t0: f64) -> Link {
        Link {
            loops: self.loops.clone(),
            t0: t0.rem_euclid(TAU),
            level: self.level,
        }
    }

    pub fn with_level(&self, k: u32) -> Result<Link> {
        Link::new(self.loops.clone(), self.t0, k)
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Link {
        Link {
            loops: self.loops.iter().map(|l| l.translated(dx, dy)).collect(),
            t0: self.t0,
            level: self.level,
        }
    }

    /// Loops reordered so that new loop `i` is old loop `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Link {
        Link {
            loops: perm.iter().map(|&i| self.loops[i].clone()).collect(),
            t0: self.t0,
            level: self.level,
        }
    }

    pub(crate) fn reject_vertical(&self) -> Result<()> {
        match self.loops.iter().position(|l| l.is_vertical()) {
            Some(i) => Err(Error::VerticalLoop(i)),
            None => Ok(()),
        }
    }
}

impl Error {
    /// Re-label a loop construction error with the loop's position in its link.
    pub fn with_loop_index(self, index: usize) -> Error {
        match self {
            Error::InvalidLoop { reason, .. } => Error::InvalidLoop {
                loop_index: index,
                reason,
            },
            other => other,
        }
    }
}
