//! Planar predicates. Orientation signs are exact (adaptive-precision);
//! distances are plain floating point and only used against tolerances.

use super::{Point, COINCIDENCE_TOL};

fn coord(p: Point) -> robust::Coord<f64> {
    robust::Coord { x: p.x, y: p.y }
}

/// Sign of the orientation of `(a, b, c)`: `1` counter-clockwise, `-1` clockwise, `0` collinear.
pub fn orient(a: Point, b: Point, c: Point) -> i8 {
    let d = robust::orient2d(coord(a), coord(b), coord(c));
    if d > 0.0 {
        1
    } else if d < 0.0 {
        -1
    } else {
        0
    }
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let d = b.sub(a);
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(d) / len2).clamp(0.0, 1.0);
    p.dist(a.lerp(b, t))
}

/// How two segments meet.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Contact {
    Disjoint,
    /// A transverse crossing in the interiors of both segments.
    Cross { ta: f64, tb: f64, point: Point },
    /// Anything else within tolerance: a shared point that is an endpoint,
    /// collinear overlap, or a near miss.
    Degenerate,
}

fn bbox_apart(a0: Point, a1: Point, b0: Point, b1: Point) -> bool {
    let tol = COINCIDENCE_TOL;
    a0.x.max(a1.x) + tol < b0.x.min(b1.x)
        || b0.x.max(b1.x) + tol < a0.x.min(a1.x)
        || a0.y.max(a1.y) + tol < b0.y.min(b1.y)
        || b0.y.max(b1.y) + tol < a0.y.min(a1.y)
}

/// Contact between segments that do not share an endpoint by construction.
pub fn contact(a0: Point, a1: Point, b0: Point, b1: Point) -> Contact {
    if bbox_apart(a0, a1, b0, b1) {
        return Contact::Disjoint;
    }
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    let near = |p: Point, s0: Point, s1: Point| point_segment_distance(p, s0, s1) < COINCIDENCE_TOL;
    let any_near = near(b0, a0, a1) || near(b1, a0, a1) || near(a0, b0, b1) || near(a1, b0, b1);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        if any_near {
            return Contact::Degenerate;
        }
        let da = a1.sub(a0);
        let db = b1.sub(b0);
        let den = da.cross(db);
        let w = b0.sub(a0);
        let ta = w.cross(db) / den;
        let tb = w.cross(da) / den;
        let ta = ta.clamp(0.0, 1.0);
        let tb = tb.clamp(0.0, 1.0);
        return Contact::Cross {
            ta,
            tb,
            point: a0.lerp(a1, ta),
        };
    }
    if any_near {
        Contact::Degenerate
    } else {
        Contact::Disjoint
    }
}

/// Consecutive segments `(p, v)` and `(v, q)` of one loop: degenerate if the
/// second folds back onto the first.
pub fn adjacent_degenerate(p: Point, v: Point, q: Point) -> bool {
    point_segment_distance(q, p, v) < COINCIDENCE_TOL || point_segment_distance(p, v, q) < COINCIDENCE_TOL
}

/// Distance between two segments.
pub fn segment_distance(a0: Point, a1: Point, b0: Point, b1: Point) -> f64 {
    if let Contact::Cross { .. } = contact(a0, a1, b0, b1) {
        return 0.0;
    }
    point_segment_distance(a0, b0, b1)
        .min(point_segment_distance(a1, b0, b1))
        .min(point_segment_distance(b0, a0, a1))
        .min(point_segment_distance(b1, a0, a1))
}

/// Winding number of a closed polygon (closing vertex not repeated) around `p`.
/// Assumes `p` is off the polygon.
pub fn winding_number(poly: &[Point], p: Point) -> i64 {
    let n = poly.len();
    let mut wn = 0;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if a.y <= p.y {
            if b.y > p.y && orient(a, b, p) > 0 {
                wn += 1;
            }
        } else if b.y <= p.y && orient(a, b, p) < 0 {
            wn -= 1;
        }
    }
    wn
}

/// Smallest distance from `p` to the closed polygon.
pub fn polygon_distance(poly: &[Point], p: Point) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| point_segment_distance(p, poly[i], poly[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

/// Twice the signed area of a closed polygon.
pub fn signed_area2(poly: &[Point]) -> f64 {
    let n = poly.len();
    (0..n).map(|i| poly[i].cross(poly[(i + 1) % n])).sum()
}
