//! Fixtures shared by the benchmarks.

use std::f64::consts::TAU;

use shadowsum_core::{Color, HalfInt, Link, Loop, Shadow, ShadowEdge, ShadowFace, ShadowVertex};

/// A circle of radius `r` sampled at `n` points, traversed counter-clockwise
/// when `ccw`, with angle `theta` wobbling around `base` without winding.
pub fn circle(center: (f64, f64), r: f64, n: usize, ccw: bool, base: f64) -> Loop {
    let mut v: Vec<[f64; 3]> = (0..n)
        .map(|i| {
            let s = i as f64 / n as f64;
            let a = if ccw { TAU * s } else { -TAU * s };
            [center.0 + r * a.cos(), center.1 + r * a.sin(), base + 0.3 * (TAU * s).sin()]
        })
        .collect();
    v.push(v[0]);
    Loop::new(v, Color::HALF, 0, false).expect("valid circle")
}

/// `depth` concentric circles with alternating orientation, next to a second
/// stack of `side` circles. No double points.
pub fn nested_link(depth: usize, side: usize, k: u32) -> Link {
    let mut loops = Vec::new();
    for i in 0..depth {
        loops.push(circle((0.0, 0.0), 1.0 + i as f64, 48, i % 2 == 0, 0.5 + 0.1 * i as f64));
    }
    for i in 0..side {
        loops.push(circle((3.0 * depth as f64, 0.0), 1.0 + i as f64, 48, i % 2 == 1, 1.5));
    }
    Link::new(loops, 0.0, k).expect("admissible link")
}

/// A chain of `n` four-valent vertices on a sphere: faces `0` (outside), and
/// a ring of faces glued along fundamental-colored edges.
pub fn vertex_chain(n: usize) -> Shadow {
    let nf = n + 2;
    let half = Color::HALF;
    let vertices: Vec<ShadowVertex> = (0..n)
        .map(|i| ShadowVertex {
            e1: half,
            e2: half,
            j: 0,
            k: 2 + i,
            m: 1,
            n: 2 + (i + 1) % n,
        })
        .collect();
    let edges: Vec<ShadowEdge> = (0..n)
        .flat_map(|i| {
            [
                ShadowEdge { color: half, left: 2 + i, right: 0 },
                ShadowEdge { color: half, left: 1, right: 2 + i },
            ]
        })
        .collect();
    let mut z = vec![0u32; nf];
    z[0] = n as u32;
    z[1] = n as u32;
    for zt in z.iter_mut().skip(2) {
        *zt = if n == 1 { 1 } else { 2 };
    }
    let faces = (0..nf)
        .map(|t| ShadowFace {
            chi: 1,
            gleam: Some(HalfInt::from_twice(if t % 2 == 0 { 1 } else { -1 })),
            z: z[t],
        })
        .collect();
    Shadow::new(faces, edges, vertices).expect("valid shadow")
}
