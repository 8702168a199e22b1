//! SU(2) data at level `k`: the color set, the face weights `u_j`, `v_j`,
//! triple admissibility and quantum 6j-symbols at `q = exp(2 pi i / (k + 2))`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numbers::Color;

/// Level `k >= 1` together with its precomputed quantum integers.
///
/// Immutable after construction; lookups are plain table reads.
#[derive(Clone, Debug)]
pub struct Level {
    k: u32,
    /// `[n]! = prod_{m=1}^n sin(m pi / rbar) / sin(pi / rbar)` for `n <= 2k + 2`.
    qfact: Vec<f64>,
    /// `v_j` indexed by `2j`.
    v: Vec<f64>,
    /// `u_j / (pi i)` indexed by `2j`.
    u_over_pi_i: Vec<f64>,
}

impl Level {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidLevel { k, min: 1 });
        }
        let rbar = (k + 2) as f64;
        let s1 = (PI / rbar).sin();
        let qint = |n: u32| (n as f64 * PI / rbar).sin() / s1;
        let mut qfact = Vec::with_capacity(2 * k as usize + 3);
        qfact.push(1.0);
        for n in 1..=(2 * k + 2) {
            let prev = qfact[n as usize - 1];
            qfact.push(prev * qint(n));
        }
        let v = (0..=k)
            .map(|twice| {
                let sign = if twice % 2 == 0 { 1.0 } else { -1.0 };
                sign * qint(twice + 1)
            })
            .collect();
        let u_over_pi_i = (0..=k)
            .map(|twice| {
                let j = twice as f64 / 2.0;
                j - j * (j + 1.0) / rbar
            })
            .collect();
        Ok(Level {
            k,
            qfact,
            v,
            u_over_pi_i,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `rbar = k + 2`.
    pub fn rbar(&self) -> u32 {
        self.k + 2
    }

    /// Number of colors, `k + 1`.
    pub fn num_colors(&self) -> usize {
        self.k as usize + 1
    }

    /// The color set `{0, 1/2, ..., k/2}` in increasing order.
    pub fn colors(&self) -> impl Iterator<Item = Color> + Clone {
        (0..=self.k).map(Color::from_twice)
    }

    pub fn contains(&self, c: Color) -> bool {
        c.twice() <= self.k
    }

    pub fn check(&self, c: Color) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::ColorOutOfRange { color: c, k: self.k })
        }
    }

    /// Quantum integer `[n] = sin(n pi / rbar) / sin(pi / rbar)`.
    pub fn qint(&self, n: i64) -> f64 {
        let rbar = self.rbar() as f64;
        (n as f64 * PI / rbar).sin() / (PI / rbar).sin()
    }

    fn fact(&self, n: i64) -> f64 {
        debug_assert!(n >= 0);
        self.qfact[n as usize]
    }

    /// `u_j = pi i (j - j(j+1)/rbar)`.
    pub fn u_exponent(&self, j: Color) -> Result<Complex64> {
        self.check(j)?;
        Ok(Complex64::new(0.0, PI * self.u_over_pi_i[j.twice() as usize]))
    }

    /// `v_j = (-1)^{2j} sin((2j+1) pi / rbar) / sin(pi / rbar)`.
    pub fn v_dim(&self, j: Color) -> Result<f64> {
        self.check(j)?;
        Ok(self.v[j.twice() as usize])
    }

    /// Table access without range checks, for callers that validated colors.
    pub(crate) fn v_unchecked(&self, twice: u32) -> f64 {
        self.v[twice as usize]
    }

    pub(crate) fn u_over_pi_i_unchecked(&self, twice: u32) -> f64 {
        self.u_over_pi_i[twice as usize]
    }

    /// Integrality, level bound and triangle inequalities for `(i, j, k)`.
    pub fn triple_admissible(&self, i: Color, j: Color, k: Color) -> bool {
        let (a, b, c) = (i.twice(), j.twice(), k.twice());
        let sum = a + b + c;
        sum % 2 == 0
            && sum <= 2 * self.k
            && a <= b + c
            && b <= c + a
            && c <= a + b
    }

    /// Quantum 6j-symbol `{i j k; l m n}` in the tetrahedrally symmetric
    /// normalization.
    ///
    /// The four coupled triples are `(i,j,k)`, `(i,m,n)`, `(l,j,n)`, `(l,m,k)`;
    /// the symbol vanishes if any of them is inadmissible.
    pub fn sixj(&self, cols: [Color; 6]) -> f64 {
        let [i, j, k, l, m, n] = cols;
        if cols.iter().any(|c| !self.contains(*c)) {
            return 0.0;
        }
        let triads = [(i, j, k), (i, m, n), (l, j, n), (l, m, k)];
        if !triads
            .iter()
            .all(|&(a, b, c)| self.triple_admissible(a, b, c))
        {
            return 0.0;
        }
        let t = |c: Color| c.twice() as i64;
        let (i, j, k, l, m, n) = (t(i), t(j), t(k), t(l), t(m), t(n));

        // Triad sums and the three "opposite edge" sums, all halved back to integers.
        let alpha = [
            (i + j + k) / 2,
            (i + m + n) / 2,
            (l + j + n) / 2,
            (l + m + k) / 2,
        ];
        let beta = [(i + j + l + m) / 2, (j + k + m + n) / 2, (k + i + n + l) / 2];

        let prefactor: f64 = [(i, j, k), (i, m, n), (l, j, n), (l, m, k)]
            .iter()
            .map(|&(a, b, c)| self.delta(a, b, c))
            .product();

        let zmin = *alpha.iter().max().unwrap();
        let zmax = *beta.iter().min().unwrap();
        let mut sum = 0.0;
        for z in zmin..=zmax {
            let mut den = 1.0;
            for a in alpha {
                den *= self.fact(z - a);
            }
            for b in beta {
                den *= self.fact(b - z);
            }
            let sign = if z % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * self.fact(z + 1) / den;
        }
        prefactor * sum
    }

    /// Triangle coefficient `sqrt([a+b-c]! [a-b+c]! [-a+b+c]! / [a+b+c+1]!)`
    /// for doubled, admissible arguments.
    fn delta(&self, a: i64, b: i64, c: i64) -> f64 {
        let num = self.fact((a + b - c) / 2) * self.fact((a - b + c) / 2) * self.fact((b + c - a) / 2);
        (num / self.fact((a + b + c) / 2 + 1)).sqrt()
    }
}
