//! Closed-form Wilson loop observables: the Abelian case, the conditional
//! Abelian and diagonal-holonomy products for given field samples, and
//! vertical loops.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::predicates::point_segment_distance;
use crate::geometry::{crossing_marks, ind, validate, winding_s1, CrossingMark, Link, Point};
use crate::linking::{link_number, lk, pushoff, pushoff_threshold, self_link};
use crate::quantum::Level;

/// Where the self-linking of each loop comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FramingSource {
    /// Linking number with a horizontal push-off.
    Geometric,
    /// The integer `framing` field of each loop.
    Declared,
}

/// Sampled field data: one line integral per loop and one background value
/// per crossing mark, in the order of [`crossing_marks`].
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub line_integrals: Vec<f64>,
    pub mark_values: Vec<f64>,
}

impl FieldSample {
    pub fn zero(link: &Link) -> Result<FieldSample> {
        Self::from_fn(link, |_| 0.0, |_| 0.0)
    }

    /// Sample `a(j)` for each loop and `b(sigma_m)` at each crossing mark.
    pub fn from_fn(link: &Link, a: impl Fn(usize) -> f64, b: impl Fn(Point) -> f64) -> Result<FieldSample> {
        let marks = crossing_marks(link)?;
        Ok(FieldSample {
            line_integrals: (0..link.loops().len()).map(a).collect(),
            mark_values: marks.iter().map(|m| b(m.point)).collect(),
        })
    }
}

fn phase(lambda: f64, twice_exponent: i64) -> Complex64 {
    Complex64::from_polar(1.0, PI * lambda * twice_exponent as f64 / 2.0)
}

fn checked_link(link: &Link) -> Result<()> {
    link.reject_vertical()?;
    validate(link)?.ok()
}

/// `Some(zero)` if the total winding is nonzero, an error if it vanishes
/// while some loop still winds, `None` otherwise.
fn winding_gate(link: &Link) -> Result<Option<Complex64>> {
    let winds: Vec<i64> = link.loops().iter().map(winding_s1).collect();
    if winds.iter().sum::<i64>() != 0 {
        return Ok(Some(Complex64::new(0.0, 0.0)));
    }
    if let Some((j, &w)) = winds.iter().enumerate().find(|(_, &w)| w != 0) {
        return Err(Error::NotNullHomologous {
            loop_index: j,
            wind: w,
        });
    }
    Ok(None)
}

/// Abelian observable `prod_j exp(lambda pi i F_j) prod_{j != k} exp(lambda pi i Link(l_j, l_k))`.
///
/// Exactly zero when the total `S^1` winding is nonzero.
pub fn wlo_abelian(link: &Link, lambda: f64, framing: FramingSource) -> Result<Complex64> {
    checked_link(link)?;
    if let Some(z) = winding_gate(link)? {
        return Ok(z);
    }
    let loops = link.loops();
    let t0 = link.t0();
    let mut exponent = 0i64;
    for l in loops {
        exponent += match framing {
            FramingSource::Geometric => self_link(l, t0)?,
            FramingSource::Declared => l.framing(),
        };
    }
    for (j, a) in loops.iter().enumerate() {
        for (k, b) in loops.iter().enumerate() {
            if j != k {
                exponent += link_number(a, b, t0)?;
            }
        }
    }
    Ok(phase(lambda, 2 * exponent))
}

/// Twice the `LK` part of the exponent: each loop against its push-off, and
/// all ordered pairs of distinct loops.
fn lk_exponent_twice(link: &Link) -> Result<i64> {
    let loops = link.loops();
    let t0 = link.t0();
    let mut twice = 0i64;
    for l in loops {
        let p = pushoff(l, pushoff_threshold(l) / 4.0)?;
        twice += lk(l, &p, t0)?.twice();
    }
    for (j, a) in loops.iter().enumerate() {
        for (k, b) in loops.iter().enumerate() {
            if j != k {
                twice += lk(a, b, t0)?.twice();
            }
        }
    }
    Ok(twice)
}

/// The two points just left and right of the curve at a crossing mark.
fn displaced(link: &Link, m: &CrossingMark) -> (Point, Point) {
    let l = &link.loops()[m.loop_index];
    let n = l.num_segments();
    let (a, b) = l.segment(m.segment);
    let (normal, own) = if m.t == 0.0 {
        let prev = (m.segment + n - 1) % n;
        let (p, _) = l.segment(prev);
        let n1 = a.sub(p).left_normal();
        let n2 = b.sub(a).left_normal();
        (n1.add(n2), [m.segment, prev])
    } else {
        (b.sub(a).left_normal(), [m.segment, m.segment])
    };
    let normal = normal.scale(1.0 / normal.norm());
    let mut room = pushoff_threshold(l) / 4.0;
    for (j, other) in link.loops().iter().enumerate() {
        for s in 0..other.num_segments() {
            if j == m.loop_index && own.contains(&s) {
                continue;
            }
            let (c, d) = other.segment(s);
            room = room.min(point_segment_distance(m.point, c, d) / 3.0);
        }
    }
    (m.point.add(normal.scale(room)), m.point.sub(normal.scale(room)))
}

/// The `LK` form of the Abelian observable with explicit index corrections at
/// the crossing marks, evaluated on the faces next to each mark.
pub fn wlo_abelian_intermediate(link: &Link, lambda: f64) -> Result<Complex64> {
    checked_link(link)?;
    if let Some(z) = winding_gate(link)? {
        return Ok(z);
    }
    let mut twice = lk_exponent_twice(link)?;
    for m in crossing_marks(link)? {
        let (plus, minus) = displaced(link, &m);
        for l in link.loops() {
            twice -= 2 * m.sign as i64 * (ind(l, plus)? + ind(l, minus)?);
        }
    }
    Ok(phase(lambda, twice))
}

/// Abelian observable conditioned on sampled fields:
/// `LK` phases times `prod_j exp(i a_j)` times `exp(i sum_m eps_m b(sigma_m))`.
pub fn conditional_wlo_abelian(link: &Link, lambda: f64, fields: &FieldSample) -> Result<Complex64> {
    checked_link(link)?;
    let marks = crossing_marks(link)?;
    if fields.line_integrals.len() != link.loops().len() {
        return Err(Error::FieldSample(format!(
            "{} line integrals for {} loops",
            fields.line_integrals.len(),
            link.loops().len()
        )));
    }
    if fields.mark_values.len() != marks.len() {
        return Err(Error::FieldSample(format!(
            "{} mark values for {} crossing marks",
            fields.mark_values.len(),
            marks.len()
        )));
    }
    if fields
        .line_integrals
        .iter()
        .chain(&fields.mark_values)
        .any(|x| !x.is_finite())
    {
        return Err(Error::FieldSample("non-finite field value".into()));
    }
    let a: f64 = fields.line_integrals.iter().sum();
    let b: f64 = marks
        .iter()
        .zip(&fields.mark_values)
        .map(|(m, &v)| m.sign as f64 * v)
        .sum();
    Ok(phase(lambda, lk_exponent_twice(link)?) * Complex64::from_polar(1.0, a + b))
}

/// `chi_d(x) = sin(d x) / sin(x)`, computed as the Chebyshev polynomial
/// `U_{d-1}(cos x)` so it is exact at multiples of `pi`.
pub fn character(dim: u32, x: f64) -> f64 {
    let c = x.cos();
    let (mut prev, mut cur) = (0.0, 1.0);
    for _ in 1..dim {
        let next = 2.0 * c * cur - prev;
        prev = cur;
        cur = next;
    }
    if dim == 0 {
        0.0
    } else {
        cur
    }
}

/// `prod_j chi_{d_j}(x_j)` with `d_j = 2 color_j + 1`.
pub fn conditional_holonomy_su2(link: &Link, totals: &[f64]) -> Result<Complex64> {
    if totals.len() != link.loops().len() {
        return Err(Error::FieldSample(format!(
            "{} totals for {} loops",
            totals.len(),
            link.loops().len()
        )));
    }
    let v: f64 = link
        .loops()
        .iter()
        .zip(totals)
        .map(|(l, &x)| character(l.color().dim(), x))
        .product();
    Ok(Complex64::new(v, 0.0))
}

/// `sum_{l=1}^{k+1} prod_j [sin(l d_j pi/(k+2)) / sin(l pi/(k+2))] sin(l pi/(k+2))^(2-2g)`.
pub fn wlo_vertical(k: u32, genus: u32, dims: &[u32]) -> Result<f64> {
    let level = Level::new(k)?;
    if dims.contains(&0) {
        return Err(Error::NotAdmissible("representation dimensions start at 1".into()));
    }
    let rbar = level.rbar() as f64;
    let euler = 2 - 2 * genus as i32;
    Ok((1..=k + 1)
        .map(|l| {
            let x = l as f64 * PI / rbar;
            let chars: f64 = dims.iter().map(|&d| character(d, x)).product();
            chars * x.sin().powi(euler)
        })
        .sum())
}

/// Dimensions of a link made only of vertical loops, each winding once
/// around `S^1` in either direction.
pub fn vertical_dims(link: &Link) -> Result<Vec<u32>> {
    let report = validate(link)?;
    if let Some(&j) = report.vertical_conflicts.first() {
        return Err(Error::NotAdmissible(format!("vertical loop {j} sits on another curve")));
    }
    link.loops()
        .iter()
        .enumerate()
        .map(|(j, l)| {
            if !l.is_vertical() {
                return Err(Error::NotAdmissible(format!("loop {j} is not vertical")));
            }
            if winding_s1(l).abs() != 1 {
                return Err(Error::NotAdmissible(format!(
                    "vertical loop {j} winds {} times",
                    winding_s1(l)
                )));
            }
            Ok(l.color().dim())
        })
        .collect()
}
