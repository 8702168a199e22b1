//! Independent oracles and random generators for the integration tests.
//!
//! Nothing here calls into the evaluation code of the library; only the
//! data types are shared.

#![allow(dead_code)]

use std::f64::consts::{PI, TAU};
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use shadowsum_core::io::{parse_input, Input};
use shadowsum_core::{Color, Level, Link, Loop, Point, Shadow};

pub fn c(twice: u32) -> Color {
    Color::from_twice(twice)
}

// ---------------------------------------------------------------------------
// Fixtures

/// A regular `n`-gon approximating a circle, with `theta(s)` at the vertex
/// of parameter `s = i / n`.
pub fn circle_loop(
    center: (f64, f64),
    r: f64,
    n: usize,
    phase: f64,
    ccw: bool,
    theta: impl Fn(f64) -> f64,
) -> Loop {
    let dir = if ccw { 1.0 } else { -1.0 };
    let v = (0..=n)
        .map(|i| {
            let s = i as f64 / n as f64;
            let a = phase + dir * TAU * (i % n) as f64 / n as f64;
            [center.0 + r * a.cos(), center.1 + r * a.sin(), theta(s)]
        })
        .collect();
    Loop::new(v, Color::HALF, 0, false).unwrap()
}

/// The Hopf pair: one circle at constant angle 0.5, the other passing
/// below it at 0.2 and above it at 0.9.
pub fn hopf_loops() -> (Loop, Loop) {
    let a = circle_loop((0.0, 0.0), 1.0, 32, 0.0, true, |_| 0.5);
    let b = circle_loop((1.0, 0.0), 1.0, 64, 0.0, true, |s| {
        if (TAU * s.fract()).sin() >= 0.0 {
            0.9
        } else {
            0.2
        }
    });
    (a, b)
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every corpus file that parses, by file name.
pub fn corpus_inputs() -> Vec<(String, Input)> {
    let mut out = Vec::new();
    let mut paths: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    for p in paths {
        let text = std::fs::read_to_string(&p).unwrap();
        if let Ok(input) = parse_input(&text) {
            out.push((p.file_name().unwrap().to_string_lossy().into_owned(), input));
        }
    }
    out
}

pub fn corpus_links() -> Vec<(String, Link)> {
    corpus_inputs()
        .into_iter()
        .filter_map(|(n, i)| match i {
            Input::Link(l) => Some((n, l)),
            Input::Shadow(_) => None,
        })
        .collect()
}

pub fn corpus_shadows() -> Vec<(String, Shadow)> {
    corpus_inputs()
        .into_iter()
        .filter_map(|(n, i)| match i {
            Input::Shadow(s) => Some((n, s)),
            Input::Link(_) => None,
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Random configurations

/// Random lift for a loop of winding `w`: a linear part plus one integer
/// frequency of wobble.
pub fn random_theta(rng: &mut impl Rng, w: i64) -> impl Fn(f64) -> f64 {
    let base = rng.random_range(0.0..TAU);
    let amp = if rng.random_bool(0.5) {
        rng.random_range(0.0..3.0)
    } else {
        0.0
    };
    let freq = rng.random_range(1..=3) as f64;
    let ph = rng.random_range(0.0..TAU);
    move |s: f64| base + TAU * w as f64 * s + amp * ((TAU * freq * s + ph).sin() - ph.sin())
}

/// Up to `max_circles` disjoint circles nested along a random forest, each
/// with a random orientation and a winding in `{-2, ..., 2}`.
pub fn random_dpfree(rng: &mut impl Rng, max_circles: usize, k: u32) -> Link {
    let n = rng.random_range(1..=max_circles);
    // parent[i] < i, or None for a root
    let parent: Vec<Option<usize>> = (0..n)
        .map(|i| {
            if i > 0 && rng.random_bool(0.6) {
                Some(rng.random_range(0..i))
            } else {
                None
            }
        })
        .collect();
    let mut children = vec![Vec::new(); n];
    let mut roots = Vec::new();
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => children[*p].push(i),
            None => roots.push(i),
        }
    }
    let mut discs = vec![((0.0, 0.0), 0.0); n];
    for (slot, &r) in roots.iter().enumerate() {
        place(r, (3.0 * slot as f64, 0.0), 1.0, &children, &mut discs);
    }
    let t0 = rng.random_range(0.0..TAU);
    let loops = discs
        .iter()
        .map(|&(center, r)| {
            let w = rng.random_range(-2..=2);
            let theta = random_theta(rng, w);
            let phase = rng.random_range(0.0..TAU);
            circle_loop(center, r, 24, phase, rng.random_bool(0.5), theta)
        })
        .collect();
    Link::new(loops, t0, k).unwrap()
}

/// The 200 configurations of the pair-sum comparison: up to five circles,
/// levels cycling through 1..=6.
pub fn criterion_one_configs() -> Vec<Link> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    (0..200).map(|i| random_dpfree(&mut rng, 5, 1 + i % 6)).collect()
}

fn place(i: usize, center: (f64, f64), r: f64, children: &[Vec<usize>], discs: &mut [((f64, f64), f64)]) {
    discs[i] = (center, r);
    let m = children[i].len();
    for (slot, &ch) in children[i].iter().enumerate() {
        let x = center.0 - r + (2 * slot + 1) as f64 * r / m as f64;
        place(ch, (x, center.1), 0.8 * r / m as f64, children, discs);
    }
}

/// A random star-shaped simple polygon around `center`.
pub fn random_star(rng: &mut impl Rng, center: (f64, f64), r: f64, n: usize) -> Vec<Point> {
    let ccw = rng.random_bool(0.5);
    let phase = rng.random_range(0.0..TAU);
    (0..n)
        .map(|i| {
            let a = phase + TAU * (i as f64 + rng.random_range(-0.3..0.3)) / n as f64;
            let a = if ccw { a } else { -a };
            let rr = r * rng.random_range(0.7..1.3);
            Point::new(center.0 + rr * a.cos(), center.1 + rr * a.sin())
        })
        .collect()
}

pub fn lifted(points: &[Point], theta: impl Fn(f64) -> f64) -> Loop {
    let n = points.len();
    let v = (0..=n)
        .map(|i| {
            let p = points[i % n];
            [p.x, p.y, theta(i as f64 / n as f64)]
        })
        .collect();
    Loop::new(v, Color::HALF, 0, false).unwrap()
}

/// Two overlapping random star polygons with winding-0 lifts.
pub fn random_pair(rng: &mut impl Rng) -> (Loop, Loop) {
    let a = random_star(rng, (0.0, 0.0), 1.0, 20);
    let d = rng.random_range(0.5..1.5);
    let ang = rng.random_range(0.0..TAU);
    let rb = rng.random_range(0.6..1.2);
    let b = random_star(rng, (d * ang.cos(), d * ang.sin()), rb, 20);
    let ta = random_wobble(rng, 0);
    let tb = random_wobble(rng, 0);
    (lifted(&a, ta), lifted(&b, tb))
}

/// Like [`random_theta`] but always with a sizeable wobble, so that loops
/// pass over and under each other.
pub fn random_wobble(rng: &mut impl Rng, w: i64) -> impl Fn(f64) -> f64 {
    let base = rng.random_range(0.0..TAU);
    let amp = rng.random_range(0.5..3.0);
    let freq = rng.random_range(1..=3) as f64;
    let ph = rng.random_range(0.0..TAU);
    move |s: f64| base + TAU * w as f64 * s + amp * ((TAU * freq * s + ph).sin() - ph.sin())
}

/// A figure-eight polygon with one double point, scaled and jittered.
pub fn random_figure_eight(rng: &mut impl Rng, center: (f64, f64), r: f64) -> Vec<Point> {
    let n = 24;
    let phase = rng.random_range(0.0..TAU);
    (0..n)
        .map(|i| {
            let t = phase + TAU * i as f64 / n as f64;
            let j = rng.random_range(0.95..1.05);
            Point::new(center.0 + r * j * t.cos(), center.1 + r * j * t.sin() * t.cos())
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Planar geometry oracles

/// Winding number by summing turning angles.
pub fn angle_winding(poly: &[Point], p: Point) -> i64 {
    let n = poly.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = poly[i].sub(p);
        let b = poly[(i + 1) % n].sub(p);
        total += a.cross(b).atan2(a.dot(b));
    }
    (total / TAU).round() as i64
}

/// Proper crossings between two polygons by solving each segment pair.
pub fn brute_crossings(a: &[Point], b: &[Point]) -> Vec<(usize, usize, f64, f64)> {
    let mut out = Vec::new();
    for i in 0..a.len() {
        let (p, p2) = (a[i], a[(i + 1) % a.len()]);
        let r = p2.sub(p);
        for j in 0..b.len() {
            let (q, q2) = (b[j], b[(j + 1) % b.len()]);
            let s = q2.sub(q);
            let den = r.cross(s);
            if den.abs() < 1e-300 {
                continue;
            }
            let t = q.sub(p).cross(s) / den;
            let u = q.sub(p).cross(r) / den;
            if (0.0..1.0).contains(&t) && (0.0..1.0).contains(&u) {
                out.push((i, j, t, u));
            }
        }
    }
    out
}

/// Self crossings of one polygon, skipping adjacent segments.
pub fn brute_self_crossings(a: &[Point]) -> usize {
    let n = a.len();
    let mut count = 0;
    for (i, j, _, _) in brute_crossings(a, a) {
        if i < j && j != i + 1 && !(i == 0 && j == n - 1) {
            count += 1;
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Linking in 3-space

/// The solid torus embedding `R^2 x S^1 -> R^3`, the plane squeezed into the
/// open unit disc around a core circle of radius 3.
pub fn embed_point(x: f64, y: f64, theta: f64) -> [f64; 3] {
    let s = 1.0 / (1.0 + (x * x + y * y).sqrt());
    let (u, v) = (x * s, y * s);
    [(3.0 + u) * theta.cos(), (3.0 + u) * theta.sin(), v]
}

/// Embedded polygon with each segment subdivided so that no piece is
/// longer than `h` in 3-space.
pub fn embed_loop(l: &Loop, h: f64) -> Vec<[f64; 3]> {
    let mut out = Vec::new();
    for i in 0..l.num_segments() {
        let (a, b) = (l.vertices()[i], l.vertices()[i + 1]);
        let pa = embed_point(a[0], a[1], a[2]);
        let pb = embed_point(b[0], b[1], b[2]);
        let m = ((dist3(pa, pb) / h).ceil() as usize).clamp(1, 2000);
        for j in 0..m {
            let t = j as f64 / m as f64;
            out.push(embed_point(
                a[0] + t * (b[0] - a[0]),
                a[1] + t * (b[1] - a[1]),
                a[2] + t * (b[2] - a[2]),
            ));
        }
    }
    out
}

fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dist3(a: [f64; 3], b: [f64; 3]) -> f64 {
    dot3(sub3(a, b), sub3(a, b)).sqrt()
}

fn unit3(a: [f64; 3]) -> [f64; 3] {
    let n = dot3(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Gauss linking integral of two closed polygons, summing the exact solid
/// angle of each segment pair (Klenin and Langowski).
pub fn gauss_linking(a: &[[f64; 3]], b: &[[f64; 3]]) -> f64 {
    let mut total = 0.0;
    for i in 0..a.len() {
        let (p1, p2) = (a[i], a[(i + 1) % a.len()]);
        for j in 0..b.len() {
            let (q1, q2) = (b[j], b[(j + 1) % b.len()]);
            let r13 = sub3(q1, p1);
            let r14 = sub3(q2, p1);
            let r23 = sub3(q1, p2);
            let r24 = sub3(q2, p2);
            let n1 = unit3(cross3(r13, r14));
            let n2 = unit3(cross3(r14, r24));
            let n3 = unit3(cross3(r24, r23));
            let n4 = unit3(cross3(r23, r13));
            let asin = |x: f64| x.clamp(-1.0, 1.0).asin();
            let omega = asin(dot3(n1, n2)) + asin(dot3(n2, n3)) + asin(dot3(n3, n4)) + asin(dot3(n4, n1));
            let s = dot3(cross3(sub3(q2, q1), sub3(p2, p1)), r13);
            if omega.is_finite() && s != 0.0 {
                total += omega * s.signum();
            }
        }
    }
    total / (4.0 * PI)
}

/// Linking number from the signed crossings of a generic planar projection
/// where `a` passes over `b`. Also returns the count with the roles swapped,
/// which must agree.
pub fn projection_linking(a: &[[f64; 3]], b: &[[f64; 3]]) -> (i64, i64) {
    // an arbitrary rotation makes the projection generic
    let (ca, sa) = (0.37f64.cos(), 0.37f64.sin());
    let (cb, sb) = (1.13f64.cos(), 1.13f64.sin());
    let rot = |p: [f64; 3]| {
        let y = ca * p[1] - sa * p[2];
        let z = sa * p[1] + ca * p[2];
        let x = cb * p[0] + sb * z;
        let z = -sb * p[0] + cb * z;
        [x, y, z]
    };
    let a: Vec<[f64; 3]> = a.iter().map(|&p| rot(p)).collect();
    let b: Vec<[f64; 3]> = b.iter().map(|&p| rot(p)).collect();
    let (mut a_over, mut b_over) = (0i64, 0i64);
    for i in 0..a.len() {
        let (p, p2) = (a[i], a[(i + 1) % a.len()]);
        let r = [p2[0] - p[0], p2[1] - p[1]];
        for j in 0..b.len() {
            let (q, q2) = (b[j], b[(j + 1) % b.len()]);
            let s = [q2[0] - q[0], q2[1] - q[1]];
            let den = r[0] * s[1] - r[1] * s[0];
            if den == 0.0 {
                continue;
            }
            let d = [q[0] - p[0], q[1] - p[1]];
            let t = (d[0] * s[1] - d[1] * s[0]) / den;
            let u = (d[0] * r[1] - d[1] * r[0]) / den;
            if !((0.0..1.0).contains(&t) && (0.0..1.0).contains(&u)) {
                continue;
            }
            let za = p[2] + t * (p2[2] - p[2]);
            let zb = q[2] + u * (q2[2] - q[2]);
            // right-handed crossing: over strand, under strand and the
            // viewing axis +z form a positive frame
            let (over, under) = if za > zb { (r, s) } else { (s, r) };
            let sign = (over[0] * under[1] - over[1] * under[0]).signum() as i64;
            if za > zb {
                a_over += sign;
            } else {
                b_over += sign;
            }
        }
    }
    (a_over, b_over)
}

// ---------------------------------------------------------------------------
// Quantum data oracles

/// SU(2) level-`k` fusion rule in doubled units, by listing the allowed
/// third spins explicitly.
pub fn fusion_allowed(k: u32, a: u32, b: u32, x: u32) -> bool {
    if a > k || b > k {
        return false;
    }
    let lo = a.abs_diff(b);
    let allowed: Vec<u32> = (0..)
        .map(|i| lo + 2 * i)
        .take_while(|&y| y <= a + b && a + b + y <= 2 * k)
        .collect();
    allowed.contains(&x)
}

/// `v_c = (-1)^(2c) sin((2c+1) pi / (k+2)) / sin(pi / (k+2))`.
pub fn v_oracle(k: u32, twice: u32) -> f64 {
    let r = (k + 2) as f64;
    let sign = if twice % 2 == 0 { 1.0 } else { -1.0 };
    sign * ((twice + 1) as f64 * PI / r).sin() / (PI / r).sin()
}

/// `u_c / (pi i) = c - c (c + 1) / (k + 2)`.
pub fn u_oracle(k: u32, twice: u32) -> f64 {
    let j = twice as f64 / 2.0;
    j - j * (j + 1.0) / (k + 2) as f64
}

/// All colorings of the shadow's faces, filtered edge by edge with
/// [`fusion_allowed`], in lexicographic order.
pub fn brute_colorings(shadow: &Shadow, k: u32) -> Vec<Vec<u32>> {
    let nf = shadow.num_faces();
    let total = (k as u64 + 1).pow(nf as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut x = code;
        let mut col = vec![0u32; nf];
        for t in (0..nf).rev() {
            col[t] = (x % (k as u64 + 1)) as u32;
            x /= k as u64 + 1;
        }
        if shadow
            .edges()
            .iter()
            .all(|e| fusion_allowed(k, e.color.twice(), col[e.left], col[e.right]))
        {
            out.push(col);
        }
    }
    out
}

/// State sum of a vertex-free shadow by brute force over all colorings.
pub fn brute_state_sum(shadow: &Shadow, k: u32) -> (f64, f64) {
    assert!(shadow.vertices().is_empty());
    let xp = shadow.modified_gleams().unwrap();
    let (mut re, mut im) = (0.0, 0.0);
    for col in brute_colorings(shadow, k) {
        let mut amp = 1.0;
        let mut arg = 0.0;
        for (t, f) in shadow.faces().iter().enumerate() {
            amp *= v_oracle(k, col[t]).powi(f.chi as i32);
            arg += TAU * xp[t].to_f64() * u_oracle(k, col[t]);
        }
        re += amp * arg.cos();
        im += amp * arg.sin();
    }
    (re, im)
}

/// The 24 tetrahedral images of `{j1 j2 j3; j4 j5 j6}`: column permutations
/// composed with upper/lower swaps in pairs of columns.
pub fn tetrahedral_images(s: [Color; 6]) -> Vec<[Color; 6]> {
    let cols = [(s[0], s[3]), (s[1], s[4]), (s[2], s[5])];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let flips = [[false, false, false], [true, true, false], [true, false, true], [false, true, true]];
    let mut out = Vec::with_capacity(24);
    for p in perms {
        for f in flips {
            let mut up = [Color::ZERO; 3];
            let mut lo = [Color::ZERO; 3];
            for (slot, (&src, &flip)) in p.iter().zip(f.iter()).enumerate() {
                let (u, l) = cols[src];
                if flip {
                    up[slot] = l;
                    lo[slot] = u;
                } else {
                    up[slot] = u;
                    lo[slot] = l;
                }
            }
            out.push([up[0], up[1], up[2], lo[0], lo[1], lo[2]]);
        }
    }
    out
}

/// Sample `(a, b, c, d, e, f, p, q, r)` with all seven fixed triads admissible.
pub fn random_pentagon_tuple(lv: &Level, rng: &mut impl Rng) -> [Color; 9] {
    let k = lv.k();
    loop {
        let mut t = [Color::ZERO; 9];
        for x in t.iter_mut() {
            *x = c(rng.random_range(0..=k));
        }
        let [a, b, cc, d, e, f, p, q, r] = t;
        let triads = [(a, d, p), (b, cc, p), (cc, f, q), (d, e, q), (a, e, r), (b, f, r), (p, q, r)];
        if triads
            .iter()
            .all(|&(x, y, z)| fusion_allowed(k, x.twice(), y.twice(), z.twice()))
        {
            return t;
        }
    }
}

/// Biedenharn-Elliott residual for one tuple: LHS - RHS.
pub fn pentagon_residual(lv: &Level, t: [Color; 9]) -> f64 {
    let [a, b, cc, d, e, f, p, q, r] = t;
    let s2: u32 = t.iter().map(|x| x.twice()).sum();
    let lhs: f64 = lv
        .colors()
        .map(|x| {
            let phase2 = s2 + x.twice();
            let sign = if (phase2 / 2) % 2 == 0 { 1.0 } else { -1.0 };
            sign * v_oracle(lv.k(), x.twice()).abs()
                * lv.sixj([a, b, x, cc, d, p])
                * lv.sixj([cc, d, x, e, f, q])
                * lv.sixj([e, f, x, b, a, r])
        })
        .sum();
    let rhs = lv.sixj([p, q, r, e, a, d]) * lv.sixj([p, q, r, f, b, cc]);
    lhs - rhs
}

/// Direct evaluation of the vertical-loop trigonometric sum.
pub fn vertical_sum(k: u32, genus: u32, dims: &[u32]) -> f64 {
    let r = (k + 2) as f64;
    (1..=k + 1)
        .map(|l| {
            let x = l as f64 * PI / r;
            let chars: f64 = dims.iter().map(|&d| (d as f64 * x).sin() / x.sin()).product();
            chars * x.sin().powf(2.0 - 2.0 * genus as f64)
        })
        .sum()
}
