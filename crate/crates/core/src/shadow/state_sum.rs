//! Admissible area colorings and the shadow state sum.
//!
//! Faces are colored in id order by depth-first search. Each edge condition
//! is tested as soon as both of its faces carry a color, and each vertex
//! contributes its 6j-symbol once all four quadrants are colored. The top
//! level is split by the color of face 0; partial sums are added in color
//! order so the result does not depend on the thread count.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::Shadow;
use crate::error::{Error, Result};
use crate::numbers::{Color, HalfInt};
use crate::quantum::Level;

/// A color for every face, indexed by face id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AreaColoring(pub Vec<Color>);

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StateSum {
    pub value: Complex64,
    pub admissible_colorings: u64,
}

struct Kernel<'a> {
    level: &'a Level,
    nfaces: usize,
    /// `(edge color, other face)` pairs to test when face `t` gets colored.
    edge_checks: Vec<Vec<(Color, usize)>>,
    /// Vertices whose last-colored quadrant is face `t`.
    vertex_checks: Vec<Vec<usize>>,
    vertices: Vec<([Color; 2], [usize; 4])>,
    /// `weights[t][2c]`, or `None` when only counting.
    weights: Option<Vec<Vec<Complex64>>>,
}

impl<'a> Kernel<'a> {
    fn new(shadow: &Shadow, level: &'a Level, with_weights: bool) -> Result<Self> {
        for e in shadow.edges() {
            level.check(e.color)?;
        }
        for v in shadow.vertices() {
            level.check(v.e1)?;
            level.check(v.e2)?;
        }
        let nfaces = shadow.num_faces();
        let mut edge_checks = vec![Vec::new(); nfaces];
        for e in shadow.edges() {
            let (hi, lo) = (e.left.max(e.right), e.left.min(e.right));
            edge_checks[hi].push((e.color, lo));
        }
        let mut vertex_checks = vec![Vec::new(); nfaces];
        let mut vertices = Vec::new();
        for (i, v) in shadow.vertices().iter().enumerate() {
            let fs = v.faces();
            vertex_checks[*fs.iter().max().unwrap()].push(i);
            vertices.push(([v.e1, v.e2], fs));
        }
        let weights = if with_weights {
            let xp = shadow.modified_gleams()?;
            Some(
                shadow
                    .faces()
                    .iter()
                    .zip(&xp)
                    .map(|(f, &x)| face_weights(level, f.chi, x))
                    .collect(),
            )
        } else {
            None
        };
        Ok(Kernel {
            level,
            nfaces,
            edge_checks,
            vertex_checks,
            vertices,
            weights,
        })
    }

    fn admissible_at(&self, t: usize, colors: &[Color]) -> bool {
        let c = colors[t];
        self.edge_checks[t]
            .iter()
            .all(|&(e, o)| self.level.triple_admissible(e, c, colors[o]))
    }

    fn vertex_factor(&self, t: usize, colors: &[Color]) -> f64 {
        self.vertex_checks[t]
            .iter()
            .map(|&i| {
                let ([e1, e2], [j, k, m, n]) = self.vertices[i];
                self.level
                    .sixj([e1, colors[j], colors[k], e2, colors[m], colors[n]])
            })
            .product()
    }

    /// Sum over completions of `colors[..t]`, given the product so far.
    fn descend(&self, t: usize, colors: &mut Vec<Color>, acc: Complex64, out: &mut StateSum) {
        if t == self.nfaces {
            out.value += acc;
            out.admissible_colorings += 1;
            return;
        }
        for c in self.level.colors() {
            colors[t] = c;
            if !self.admissible_at(t, colors) {
                continue;
            }
            let mut next = acc;
            if let Some(w) = &self.weights {
                next *= w[t][c.twice() as usize];
                if !self.vertex_checks[t].is_empty() {
                    next *= self.vertex_factor(t, colors);
                }
            }
            self.descend(t + 1, colors, next, out);
        }
    }

    fn run(&self) -> StateSum {
        let parts: Vec<StateSum> = self
            .level
            .colors()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|c| {
                let mut out = StateSum {
                    value: Complex64::new(0.0, 0.0),
                    admissible_colorings: 0,
                };
                let mut colors = vec![Color::ZERO; self.nfaces];
                colors[0] = c;
                if self.admissible_at(0, &colors) {
                    let mut acc = Complex64::new(1.0, 0.0);
                    if let Some(w) = &self.weights {
                        acc *= w[0][c.twice() as usize];
                        if !self.vertex_checks[0].is_empty() {
                            acc *= self.vertex_factor(0, &colors);
                        }
                    }
                    self.descend(1, &mut colors, acc, &mut out);
                }
                out
            })
            .collect();
        parts.into_iter().fold(
            StateSum {
                value: Complex64::new(0.0, 0.0),
                admissible_colorings: 0,
            },
            |a, b| StateSum {
                value: a.value + b.value,
                admissible_colorings: a.admissible_colorings + b.admissible_colorings,
            },
        )
    }
}

/// `v_c^chi exp(2 x' u_c)` for every color `c`.
fn face_weights(level: &Level, chi: i64, xp: HalfInt) -> Vec<Complex64> {
    level
        .colors()
        .map(|c| {
            let v = level.v_unchecked(c.twice()).powi(chi as i32);
            // exp(2 x' u_c) = exp(2 pi i x' a_c) with u_c = pi i a_c
            let phase = TAU * xp.to_f64() * level.u_over_pi_i_unchecked(c.twice());
            Complex64::from_polar(v, phase)
        })
        .collect()
}

/// All admissible colorings in lexicographic order of (face 0, face 1, ...).
pub fn enumerate_colorings(shadow: &Shadow, level: &Level) -> Result<Vec<AreaColoring>> {
    let kernel = Kernel::new(shadow, level, false)?;
    let mut out = Vec::new();
    let mut colors = vec![Color::ZERO; shadow.num_faces()];
    collect(&kernel, 0, &mut colors, &mut out);
    Ok(out)
}

fn collect(k: &Kernel, t: usize, colors: &mut Vec<Color>, out: &mut Vec<AreaColoring>) {
    if t == k.nfaces {
        out.push(AreaColoring(colors.clone()));
        return;
    }
    for c in k.level.colors() {
        colors[t] = c;
        if k.admissible_at(t, colors) {
            collect(k, t + 1, colors, out);
        }
    }
}

/// The state sum together with the number of admissible colorings.
pub fn state_sum_with_count(shadow: &Shadow, level: &Level) -> Result<StateSum> {
    Ok(Kernel::new(shadow, level, true)?.run())
}

/// `sum_eta prod_v sixj(v; eta) prod_t v_eta(t)^chi(t) exp(2 x'_t u_eta(t))`.
pub fn state_sum_general(shadow: &Shadow, level: &Level) -> Result<Complex64> {
    Ok(state_sum_with_count(shadow, level)?.value)
}

/// State sum of a vertex-free shadow.
pub fn state_sum_dpfree(shadow: &Shadow, level: &Level) -> Result<Complex64> {
    if !shadow.vertices().is_empty() {
        return Err(Error::HasVertices(shadow.vertices().len()));
    }
    state_sum_general(shadow, level)
}
