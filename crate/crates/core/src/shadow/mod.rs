//! Shadows: faces with Euler characteristic and gleam, edges with a color
//! and two adjacent faces, and 4-valent vertices with their quadrant faces.

mod pairs;
mod state_sum;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Arrangement, FaceComplex, Link};
use crate::numbers::{Color, HalfInt};

pub use pairs::{
    check_bijection, coloring_of_pair, enumerate_pairs, wlo_dpfree_final, wlo_dpfree_pairsum,
    AdmissiblePair, BijectionReport,
};
pub use state_sum::{
    enumerate_colorings, state_sum_dpfree, state_sum_general, state_sum_with_count, AreaColoring,
    StateSum,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShadowFace {
    pub chi: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gleam: Option<HalfInt>,
    /// Number of distinct vertices on the boundary of the face.
    #[serde(default)]
    pub z: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShadowEdge {
    pub color: Color,
    pub left: usize,
    pub right: usize,
}

/// A vertex with quadrant faces `j, k, m, n` in cyclic order; the strand of
/// color `e1` separates `j|k` and `m|n`, the strand of color `e2` separates
/// `j|n` and `k|m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShadowVertex {
    pub e1: Color,
    pub e2: Color,
    pub j: usize,
    pub k: usize,
    pub m: usize,
    pub n: usize,
}

impl ShadowVertex {
    pub fn faces(&self) -> [usize; 4] {
        [self.j, self.k, self.m, self.n]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Shadow {
    faces: Vec<ShadowFace>,
    edges: Vec<ShadowEdge>,
    #[serde(default)]
    vertices: Vec<ShadowVertex>,
}

impl Shadow {
    /// Build a shadow, checking face references and the vertex counts `z`.
    pub fn new(faces: Vec<ShadowFace>, edges: Vec<ShadowEdge>, vertices: Vec<ShadowVertex>) -> Result<Self> {
        let nf = faces.len();
        if nf == 0 {
            return Err(Error::InvalidShadow("a shadow needs at least one face".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.left >= nf || e.right >= nf {
                return Err(Error::InvalidShadow(format!(
                    "edge {i} references a missing face"
                )));
            }
        }
        let mut z = vec![0u32; nf];
        for (i, v) in vertices.iter().enumerate() {
            let fs = v.faces();
            if fs.iter().any(|&f| f >= nf) {
                return Err(Error::InvalidShadow(format!(
                    "vertex {i} references a missing face"
                )));
            }
            for (a, &f) in fs.iter().enumerate() {
                if !fs[..a].contains(&f) {
                    z[f] += 1;
                }
            }
        }
        for (t, f) in faces.iter().enumerate() {
            if f.z != z[t] {
                return Err(Error::InvalidShadow(format!(
                    "face {t} declares z = {} but touches {} vertices",
                    f.z, z[t]
                )));
            }
        }
        Ok(Shadow {
            faces,
            edges,
            vertices,
        })
    }

    pub fn faces(&self) -> &[ShadowFace] {
        &self.faces
    }

    pub fn edges(&self) -> &[ShadowEdge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[ShadowVertex] {
        &self.vertices
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn total_euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| f.chi).sum()
    }

    /// Modified gleams `x' = x - z/2`.
    pub fn modified_gleams(&self) -> Result<Vec<HalfInt>> {
        self.faces
            .iter()
            .enumerate()
            .map(|(t, f)| {
                f.gleam
                    .map(|x| x - HalfInt::from_twice(f.z as i64))
                    .ok_or(Error::MissingGleams(t))
            })
            .collect()
    }

    /// Same shadow with faces renumbered so that new face `i` is old face `perm[i]`.
    pub fn permute_faces(&self, perm: &[usize]) -> Result<Shadow> {
        let mut inv = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let faces = perm.iter().map(|&o| self.faces[o].clone()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| ShadowEdge {
                color: e.color,
                left: inv[e.left],
                right: inv[e.right],
            })
            .collect();
        let vertices = self
            .vertices
            .iter()
            .map(|v| ShadowVertex {
                j: inv[v.j],
                k: inv[v.k],
                m: inv[v.m],
                n: inv[v.n],
                ..v.clone()
            })
            .collect();
        Shadow::new(faces, edges, vertices)
    }

    /// Same shadow with the edge list reordered.
    pub fn permute_edges(&self, perm: &[usize]) -> Shadow {
        Shadow {
            faces: self.faces.clone(),
            edges: perm.iter().map(|&i| self.edges[i].clone()).collect(),
            vertices: self.vertices.clone(),
        }
    }

    /// Shadow of a projection with double points. Gleams are left unset.
    pub fn from_arrangement(link: &Link, arr: &Arrangement) -> Result<Shadow> {
        let color = |l: usize| link.loops()[l].color();
        let faces = arr
            .faces
            .iter()
            .map(|f| ShadowFace {
                chi: f.euler_characteristic,
                gleam: None,
                z: f.vertices.len() as u32,
            })
            .collect();
        let edges = arr
            .edges
            .iter()
            .map(|e| ShadowEdge {
                color: color(e.loop_index),
                left: e.left,
                right: e.right,
            })
            .collect();
        let vertices = arr
            .vertices
            .iter()
            .map(|v| ShadowVertex {
                e1: color(v.loops[0]),
                e2: color(v.loops[1]),
                j: v.faces[0],
                k: v.faces[1],
                m: v.faces[2],
                n: v.faces[3],
            })
            .collect();
        Shadow::new(faces, edges, vertices)
    }
}

/// The vertex-free shadow of a link without double points: one edge per loop.
pub fn shadow_from_dpfree(link: &Link, fc: &FaceComplex, gleams: &[i64]) -> Result<Shadow> {
    if gleams.len() != fc.num_faces() || fc.num_loops() != link.loops().len() {
        return Err(Error::InvalidShadow(
            "gleams and face complex do not match the link".into(),
        ));
    }
    let faces = (0..fc.num_faces())
        .map(|t| ShadowFace {
            chi: fc.euler_characteristic(t),
            gleam: Some(HalfInt::from_int(gleams[t])),
            z: 0,
        })
        .collect();
    let edges = link
        .loops()
        .iter()
        .enumerate()
        .map(|(j, l)| ShadowEdge {
            color: l.color(),
            left: fc.left_face(j),
            right: fc.right_face(j),
        })
        .collect();
    Shadow::new(faces, edges, Vec::new())
}
