//! Faces of a double-point-free projection, read off from the nesting forest
//! of its loops.

use serde::Serialize;

use super::predicates::{point_segment_distance, polygon_distance, winding_number};
use super::validate::validate;
use super::{Link, Point, COINCIDENCE_TOL};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceInfo {
    pub euler_characteristic: i64,
    /// Loops forming the boundary of the face.
    pub boundary: Vec<usize>,
}

/// Faces of the complement of a projection without double points.
///
/// Face 0 is the face at infinity (containing the marked point); face `i + 1`
/// is the region just inside loop `i`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceComplex {
    faces: Vec<FaceInfo>,
    /// `ind[j][t]`: index of face `t` with respect to loop `j`.
    ind: Vec<Vec<i64>>,
    left: Vec<usize>,
    right: Vec<usize>,
    parent: Vec<Option<usize>>,
    orientation: Vec<i64>,
    #[serde(skip)]
    polygons: Vec<Vec<Point>>,
}

impl FaceComplex {
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[FaceInfo] {
        &self.faces
    }

    pub fn euler_characteristic(&self, face: usize) -> i64 {
        self.faces[face].euler_characteristic
    }

    pub fn total_euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| f.euler_characteristic).sum()
    }

    /// `ind(l_j; X_t)`.
    pub fn ind(&self, loop_index: usize, face: usize) -> i64 {
        self.ind[loop_index][face]
    }

    /// Face on the left of loop `j` (where its index is larger by one).
    pub fn left_face(&self, loop_index: usize) -> usize {
        self.left[loop_index]
    }

    pub fn right_face(&self, loop_index: usize) -> usize {
        self.right[loop_index]
    }

    pub fn parent(&self, loop_index: usize) -> Option<usize> {
        self.parent[loop_index]
    }

    /// `+1` for counter-clockwise loops, `-1` for clockwise ones.
    pub fn orientation(&self, loop_index: usize) -> i64 {
        self.orientation[loop_index]
    }

    pub fn num_loops(&self) -> usize {
        self.polygons.len()
    }

    /// The face containing `p`.
    pub fn locate(&self, p: Point) -> Result<usize> {
        let mut best: Option<(usize, usize)> = None;
        for (i, poly) in self.polygons.iter().enumerate() {
            if polygon_distance(poly, p) < COINCIDENCE_TOL {
                return Err(Error::PointOnCurve { x: p.x, y: p.y });
            }
            if winding_number(poly, p) != 0 {
                let depth = self.depth(i);
                if best.is_none_or(|(_, d)| depth > d) {
                    best = Some((i, depth));
                }
            }
        }
        Ok(best.map_or(0, |(i, _)| i + 1))
    }

    fn depth(&self, mut i: usize) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent[i] {
            d += 1;
            i = p;
        }
        d
    }

    /// Some point in the interior of `face`.
    pub fn sample_point(&self, face: usize) -> Point {
        if self.polygons.is_empty() {
            return Point::new(0.0, 0.0);
        }
        if face == 0 {
            let max_x = self
                .polygons
                .iter()
                .flatten()
                .map(|p| p.x)
                .fold(f64::NEG_INFINITY, f64::max);
            return Point::new(max_x + 1.0, 0.0);
        }
        let all_segments: Vec<(Point, Point)> = self
            .polygons
            .iter()
            .flat_map(|poly| (0..poly.len()).map(move |i| (poly[i], poly[(i + 1) % poly.len()])))
            .collect();
        for &j in &self.faces[face].boundary {
            let poly = &self.polygons[j];
            for i in 0..poly.len() {
                let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
                let mid = a.lerp(b, 0.5);
                let clearance = all_segments
                    .iter()
                    .filter(|&&(c, d)| !(c == a && d == b))
                    .map(|&(c, d)| point_segment_distance(mid, c, d))
                    .fold(a.dist(b) / 2.0, f64::min);
                let n = b.sub(a).left_normal();
                for side in [1.0, -1.0] {
                    let q = mid.add(n.scale(side * clearance / 3.0));
                    if self.locate(q).ok() == Some(face) {
                        return q;
                    }
                }
            }
        }
        unreachable!("face {face} has a boundary loop adjacent to it")
    }
}

/// Build the face complex of a link whose projection has no double points.
pub fn face_complex(link: &Link) -> Result<FaceComplex> {
    link.reject_vertical()?;
    let report = validate(link)?;
    if !report.double_points.is_empty() {
        return Err(Error::HasDoublePoints(report.double_points.len()));
    }
    let polygons: Vec<Vec<Point>> = link.loops().iter().map(|l| l.polygon()).collect();
    let n = polygons.len();

    let orientation: Vec<i64> = link
        .loops()
        .iter()
        .map(|l| if l.signed_area2() > 0.0 { 1 } else { -1 })
        .collect();
    // containers[i]: loops whose interior holds loop i
    let containers: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && winding_number(&polygons[j], polygons[i][0]) != 0)
                .collect()
        })
        .collect();
    let parent: Vec<Option<usize>> = (0..n)
        .map(|i| {
            containers[i]
                .iter()
                .copied()
                .max_by_key(|&j| containers[j].len())
        })
        .collect();

    let mut faces = vec![FaceInfo {
        euler_characteristic: 2,
        boundary: Vec::new(),
    }];
    faces.extend((0..n).map(|i| FaceInfo {
        euler_characteristic: 1,
        boundary: vec![i],
    }));
    for i in 0..n {
        let f = parent[i].map_or(0, |p| p + 1);
        faces[f].euler_characteristic -= 1;
        faces[f].boundary.push(i);
    }

    let mut ind = vec![vec![0; n + 1]; n];
    for (j, row) in ind.iter_mut().enumerate() {
        for (i, cont) in containers.iter().enumerate() {
            if i == j || cont.contains(&j) {
                row[i + 1] = orientation[j];
            }
        }
    }
    let mut left = vec![0; n];
    let mut right = vec![0; n];
    for j in 0..n {
        let inside = j + 1;
        let outside = parent[j].map_or(0, |p| p + 1);
        if orientation[j] > 0 {
            left[j] = inside;
            right[j] = outside;
        } else {
            left[j] = outside;
            right[j] = inside;
        }
    }
    Ok(FaceComplex {
        faces,
        ind,
        left,
        right,
        parent,
        orientation,
        polygons,
    })
}

/// Gleams of the faces: `x_t = sum_j eps_j wind(l_j)` over boundary loops,
/// with `eps_j = +1` if the face is to the left of `l_j`.
pub fn gleams_dpfree(link: &Link, fc: &FaceComplex) -> Vec<i64> {
    let winds: Vec<i64> = link.loops().iter().map(super::winding_s1).collect();
    (0..fc.num_faces())
        .map(|t| {
            fc.faces[t]
                .boundary
                .iter()
                .map(|&j| if fc.left[j] == t { winds[j] } else { -winds[j] })
                .sum()
        })
        .collect()
}
