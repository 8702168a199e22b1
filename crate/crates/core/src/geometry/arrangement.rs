//! The planar arrangement of a projection with double points: vertices at the
//! double points, edges along the arcs between them, faces traced from a
//! half-edge structure.

use std::cmp::Ordering;

use serde::Serialize;

use super::predicates::{signed_area2, winding_number};
use super::validate::validate;
use super::{Link, Point};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArrangementVertex {
    pub point: Point,
    /// Quadrant faces `[j, k, m, n]` in counter-clockwise order. The strand
    /// `loops[0]` separates `j|k` and `m|n`, the strand `loops[1]` separates
    /// `j|n` and `k|m`.
    pub faces: [usize; 4],
    pub loops: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArrangementEdge {
    pub loop_index: usize,
    /// `None` for a loop without double points.
    pub endpoints: Option<(usize, usize)>,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArrangementFace {
    pub euler_characteristic: i64,
    /// Distinct vertices on the closure of the face.
    pub vertices: Vec<usize>,
}

/// Face 0 contains the marked point at infinity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Arrangement {
    pub vertices: Vec<ArrangementVertex>,
    pub edges: Vec<ArrangementEdge>,
    pub faces: Vec<ArrangementFace>,
}

struct HalfEdge {
    origin: Option<usize>,
    poly: Vec<Point>,
    edge: usize,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Arrangement {
    pub fn build(link: &Link) -> Result<Arrangement> {
        link.reject_vertical()?;
        let report = validate(link)?;
        if let Some(p) = report.triple_points.first().or(report.non_transverse.first()) {
            return Err(Error::NotAdmissible(format!(
                "projection is not generic at ({}, {})",
                p.x, p.y
            )));
        }
        let dps = &report.double_points;
        let nloops = link.loops().len();

        // Cut positions (segment, t, double point) along each loop.
        let mut cuts: Vec<Vec<(usize, f64, usize)>> = vec![Vec::new(); nloops];
        for (d, dp) in dps.iter().enumerate() {
            cuts[dp.first.loop_index].push((dp.first.segment, dp.first.t, d));
            cuts[dp.second.loop_index].push((dp.second.segment, dp.second.t, d));
        }
        for c in &mut cuts {
            c.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal)));
        }

        let mut half: Vec<HalfEdge> = Vec::new();
        let mut edges: Vec<ArrangementEdge> = Vec::new();
        for (li, l) in link.loops().iter().enumerate() {
            let nseg = l.num_segments();
            let c = &cuts[li];
            if c.is_empty() {
                let poly = l.polygon();
                let mut rev = poly.clone();
                rev.reverse();
                let e = edges.len();
                edges.push(ArrangementEdge {
                    loop_index: li,
                    endpoints: None,
                    left: 0,
                    right: 0,
                });
                half.push(HalfEdge { origin: None, poly, edge: e });
                half.push(HalfEdge { origin: None, poly: rev, edge: e });
                continue;
            }
            for i in 0..c.len() {
                let (s0, _, d0) = c[i];
                let (s1, _, d1) = c[(i + 1) % c.len()];
                let mut poly = vec![dps[d0].point];
                // Vertices strictly after cut i and up to (not past) cut i+1.
                let mut s = s0;
                let wraps = i + 1 == c.len();
                if wraps || s1 != s0 {
                    loop {
                        s = (s + 1) % nseg;
                        poly.push(l.point(s));
                        if s == s1 {
                            break;
                        }
                    }
                }
                poly.push(dps[d1].point);
                let mut rev = poly.clone();
                rev.reverse();
                let e = edges.len();
                edges.push(ArrangementEdge {
                    loop_index: li,
                    endpoints: Some((d0, d1)),
                    left: 0,
                    right: 0,
                });
                half.push(HalfEdge { origin: Some(d0), poly, edge: e });
                half.push(HalfEdge { origin: Some(d1), poly: rev, edge: e });
            }
        }

        // Outgoing half-edges at each vertex, counter-clockwise.
        let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); dps.len()];
        for (h, he) in half.iter().enumerate() {
            if let Some(v) = he.origin {
                outgoing[v].push(h);
            }
        }
        let angle = |h: usize| {
            let d = half[h].poly[1].sub(half[h].poly[0]);
            d.y.atan2(d.x)
        };
        for out in &mut outgoing {
            out.sort_by(|&a, &b| angle(a).partial_cmp(&angle(b)).unwrap_or(Ordering::Equal));
            if out.len() != 4 {
                return Err(Error::NotAdmissible("double point is not 4-valent".into()));
            }
        }
        let next = |h: usize| -> usize {
            let twin = h ^ 1;
            match half[twin].origin {
                None => h,
                Some(v) => {
                    let out = &outgoing[v];
                    let p = out.iter().position(|&x| x == twin).expect("twin is outgoing");
                    out[(p + 3) % 4]
                }
            }
        };

        // Trace boundary cycles.
        let mut cycle_of = vec![usize::MAX; half.len()];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for h0 in 0..half.len() {
            if cycle_of[h0] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut cyc = Vec::new();
            let mut h = h0;
            loop {
                cycle_of[h] = id;
                cyc.push(h);
                h = next(h);
                if h == h0 {
                    break;
                }
            }
            cycles.push(cyc);
        }
        let polys: Vec<Vec<Point>> = cycles
            .iter()
            .map(|cyc| {
                let mut p = Vec::new();
                for &h in cyc {
                    let poly = &half[h].poly;
                    if half[h].origin.is_none() {
                        p.extend_from_slice(poly);
                    } else {
                        p.extend_from_slice(&poly[..poly.len() - 1]);
                    }
                }
                p
            })
            .collect();
        let areas: Vec<f64> = polys.iter().map(|p| signed_area2(p)).collect();

        // Connected components of the projection.
        let mut uf: Vec<usize> = (0..nloops).collect();
        for dp in dps {
            let a = find(&mut uf, dp.first.loop_index);
            let b = find(&mut uf, dp.second.loop_index);
            uf[a] = b;
        }
        let comp_of_cycle: Vec<usize> = cycles
            .iter()
            .map(|cyc| find(&mut uf, edges[half[cyc[0]].edge].loop_index))
            .collect();

        let mut face_of_cycle = vec![usize::MAX; cycles.len()];
        let mut nfaces = 1;
        for (c, &a) in areas.iter().enumerate() {
            if a > 0.0 {
                face_of_cycle[c] = nfaces;
                nfaces += 1;
            }
        }
        let mut holes = vec![0i64; nfaces];
        for (c, &a) in areas.iter().enumerate() {
            if a > 0.0 {
                continue;
            }
            let comp = comp_of_cycle[c];
            if areas
                .iter()
                .enumerate()
                .any(|(o, &ao)| o != c && ao <= 0.0 && comp_of_cycle[o] == comp)
            {
                return Err(Error::DegenerateGeometry(
                    "component has more than one outer boundary".into(),
                ));
            }
            let probe = polys[c][0];
            let host = (0..cycles.len())
                .filter(|&o| areas[o] > 0.0 && comp_of_cycle[o] != comp)
                .filter(|&o| winding_number(&polys[o], probe) != 0)
                .min_by(|&a, &b| areas[a].partial_cmp(&areas[b]).unwrap_or(Ordering::Equal));
            let f = host.map_or(0, |o| face_of_cycle[o]);
            face_of_cycle[c] = f;
            holes[f] += 1;
        }

        let mut faces: Vec<ArrangementFace> = (0..nfaces)
            .map(|f| ArrangementFace {
                euler_characteristic: if f == 0 { 2 - holes[0] } else { 1 - holes[f] },
                vertices: Vec::new(),
            })
            .collect();
        for e in 0..edges.len() {
            edges[e].left = face_of_cycle[cycle_of[2 * e]];
            edges[e].right = face_of_cycle[cycle_of[2 * e + 1]];
        }
        let mut vertices = Vec::with_capacity(dps.len());
        for (v, dp) in dps.iter().enumerate() {
            let out = &outgoing[v];
            let q: Vec<usize> = out.iter().map(|&h| face_of_cycle[cycle_of[h]]).collect();
            let strand = |h: usize| edges[half[h].edge].loop_index;
            vertices.push(ArrangementVertex {
                point: dp.point,
                faces: [q[0], q[1], q[2], q[3]],
                loops: [strand(out[1]), strand(out[0])],
            });
            for &f in &q {
                if !faces[f].vertices.contains(&v) {
                    faces[f].vertices.push(v);
                }
            }
        }
        Ok(Arrangement {
            vertices,
            edges,
            faces,
        })
    }

    pub fn total_euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| f.euler_characteristic).sum()
    }

    /// Edges between double points; loops without double points do not count.
    pub fn num_arcs(&self) -> usize {
        self.edges.iter().filter(|e| e.endpoints.is_some()).count()
    }
}
