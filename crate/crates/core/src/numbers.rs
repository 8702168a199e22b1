//! Exact half-integers and SU(2) colors.
//!
//! Both are stored doubled so that `1/2` is the integer `1`; no float ever
//! carries a half-integer label around.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Tolerance for recognising a float as an exact multiple of `1/2`.
const HALF_TOL: f64 = 1e-9;

/// A number in `Z/2`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// Recognise `x` as a half-integer, or `None` if it is not one (or not finite).
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        let twice = (2.0 * x).round();
        if (2.0 * x - twice).abs() > HALF_TOL || twice.abs() > (i64::MAX / 4) as f64 {
            return None;
        }
        Some(HalfInt(twice as i64))
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if there is one.
    pub const fn as_integer(self) -> Option<i64> {
        if self.0 % 2 == 0 {
            Some(self.0 / 2)
        } else {
            None
        }
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl std::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        HalfInt(iter.map(|h| h.0).sum())
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_integer() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_f64(self.to_f64()),
        }
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let x = f64::deserialize(d)?;
        HalfInt::from_f64(x)
            .ok_or_else(|| serde::de::Error::custom(format!("{x} is not a half-integer")))
    }
}

/// An SU(2) color (spin) `j in {0, 1/2, 1, ...}`, stored as `2j`.
///
/// The representation dimension is `2j + 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u32);

impl Color {
    pub const ZERO: Color = Color(0);
    pub const HALF: Color = Color(1);

    pub const fn from_twice(twice: u32) -> Self {
        Color(twice)
    }

    /// Color of the representation of the given dimension (`d >= 1`).
    pub fn from_dim(dim: u32) -> Option<Self> {
        dim.checked_sub(1).map(Color)
    }

    pub fn from_f64(x: f64) -> Option<Self> {
        let h = HalfInt::from_f64(x)?;
        u32::try_from(h.twice()).ok().map(Color)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    pub const fn dim(self) -> u32 {
        self.0 + 1
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        HalfInt::from_twice(self.0 as i64).fmt(f)
    }
}

impl Serialize for Color {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HalfInt::from_twice(self.0 as i64).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let x = f64::deserialize(d)?;
        Color::from_f64(x)
            .ok_or_else(|| serde::de::Error::custom(format!("{x} is not a non-negative half-integer")))
    }
}
