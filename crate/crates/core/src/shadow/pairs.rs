//! Admissible pairs `(l, s)` for links without double points whose loops all
//! carry the fundamental color, and the pair-sum evaluation of the Wilson
//! loop observable.

use std::collections::HashSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::state_sum::{enumerate_colorings, state_sum_dpfree, AreaColoring};
use super::shadow_from_dpfree;
use crate::error::{Error, Result};
use crate::geometry::{face_complex, gleams_dpfree, winding_s1, FaceComplex, Link};
use crate::numbers::Color;
use crate::quantum::Level;

/// A level value `l` and a sign per loop, with the induced face function
/// `xi(t) = l - sum_j s_j ind_j(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AdmissiblePair {
    pub l: u32,
    pub signs: Vec<i8>,
    pub xi: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BijectionReport {
    pub pairs: usize,
    pub colorings: usize,
    pub injective: bool,
    pub surjective: bool,
    /// Descriptions of colorings that are hit twice, missed, or not admissible.
    pub witnesses: Vec<String>,
}

impl BijectionReport {
    pub fn is_bijective(&self) -> bool {
        self.injective && self.surjective && self.pairs == self.colorings
    }
}

fn require_fundamental(link: &Link) -> Result<()> {
    link.reject_vertical()?;
    for (j, l) in link.loops().iter().enumerate() {
        if l.color() != Color::HALF {
            return Err(Error::UnsupportedColor {
                loop_index: j,
                color: l.color(),
            });
        }
    }
    Ok(())
}

/// All pairs whose face function takes values in `{1, ..., k+1}`, ordered by
/// `l` and then by the sign mask (bit `j` set means `s_j = +1`).
pub fn enumerate_pairs(link: &Link, level: &Level, fc: &FaceComplex) -> Result<Vec<AdmissiblePair>> {
    require_fundamental(link)?;
    let n = link.loops().len();
    if n >= 32 {
        return Err(Error::NotAdmissible(format!("{n} loops are too many to enumerate sign vectors")));
    }
    let top = level.k() as i64 + 1;
    let mut out = Vec::new();
    for l in 1..=level.k() + 1 {
        for mask in 0u64..(1u64 << n) {
            let signs: Vec<i8> = (0..n).map(|j| if mask >> j & 1 == 1 { 1 } else { -1 }).collect();
            let xi: Vec<i64> = (0..fc.num_faces())
                .map(|t| {
                    l as i64
                        - (0..n)
                            .map(|j| signs[j] as i64 * fc.ind(j, t))
                            .sum::<i64>()
                })
                .collect();
            if xi.iter().all(|&x| (1..=top).contains(&x)) {
                out.push(AdmissiblePair { l, signs, xi });
            }
        }
    }
    Ok(out)
}

/// `eta(t) = (xi(t) - 1) / 2`.
pub fn coloring_of_pair(pair: &AdmissiblePair) -> AreaColoring {
    AreaColoring(
        pair.xi
            .iter()
            .map(|&x| Color::from_twice((x - 1) as u32))
            .collect(),
    )
}

/// Compare the pair enumeration with the admissible colorings of the
/// link's shadow.
pub fn check_bijection(link: &Link, level: &Level) -> Result<BijectionReport> {
    let fc = face_complex(link)?;
    let pairs = enumerate_pairs(link, level, &fc)?;
    let shadow = shadow_from_dpfree(link, &fc, &gleams_dpfree(link, &fc))?;
    let colorings = enumerate_colorings(&shadow, level)?;
    let ad: HashSet<&AreaColoring> = colorings.iter().collect();

    let mut witnesses = Vec::new();
    let mut seen: HashSet<AreaColoring> = HashSet::new();
    let mut injective = true;
    let mut in_range = true;
    for p in &pairs {
        let c = coloring_of_pair(p);
        if !ad.contains(&c) {
            in_range = false;
            witnesses.push(format!("pair l={} s={:?} maps outside the admissible colorings", p.l, p.signs));
        }
        if !seen.insert(c) {
            injective = false;
            witnesses.push(format!("pair l={} s={:?} repeats an image", p.l, p.signs));
        }
    }
    let mut surjective = in_range;
    for c in &colorings {
        if !seen.contains(c) {
            surjective = false;
            let s: Vec<String> = c.0.iter().map(|x| x.to_string()).collect();
            witnesses.push(format!("coloring [{}] has no preimage", s.join(", ")));
        }
    }
    Ok(BijectionReport {
        pairs: pairs.len(),
        colorings: colorings.len(),
        injective,
        surjective,
        witnesses,
    })
}

/// Sum over admissible pairs of `prod_t sin(pi xi_t / (k+2))^chi_t` times the
/// phase `exp(-(pi i / (k+2)) / 2 sum_j w_j (xi(left_j)^2 - xi(right_j)^2))`.
pub fn wlo_dpfree_pairsum(link: &Link, level: &Level, fc: &FaceComplex) -> Result<Complex64> {
    let pairs = enumerate_pairs(link, level, fc)?;
    let rbar = level.rbar() as f64;
    let winds: Vec<i64> = link.loops().iter().map(winding_s1).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for p in &pairs {
        let amp: f64 = (0..fc.num_faces())
            .map(|t| (PI * p.xi[t] as f64 / rbar).sin().powi(fc.euler_characteristic(t) as i32))
            .product();
        let q: i64 = winds
            .iter()
            .enumerate()
            .map(|(j, &w)| {
                let (a, b) = (p.xi[fc.left_face(j)], p.xi[fc.right_face(j)]);
                w * (a * a - b * b)
            })
            .sum();
        total += Complex64::from_polar(amp, -PI / rbar * 0.5 * q as f64);
    }
    Ok(total)
}

/// `sin(pi/(k+2))^(2-2g)` times the state sum of the link's shadow.
pub fn wlo_dpfree_final(link: &Link, level: &Level, fc: &FaceComplex, genus: u32) -> Result<Complex64> {
    require_fundamental(link)?;
    let expected = 2 - 2 * genus as i64;
    let found = fc.total_euler_characteristic();
    if found != expected {
        return Err(Error::GenusMismatch {
            found,
            expected,
            genus,
        });
    }
    let shadow = shadow_from_dpfree(link, fc, &gleams_dpfree(link, fc))?;
    let s = state_sum_dpfree(&shadow, level)?;
    let pref = (PI / level.rbar() as f64).sin().powi(expected as i32);
    Ok(s * pref)
}
