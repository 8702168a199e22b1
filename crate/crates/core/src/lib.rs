//! Turaev shadow state sums and torus-gauge Wilson loop observables for
//! colored links in `S^2 x S^1`.
//!
//! Links are piecewise linear: a planar polygon (the sphere minus a marked
//! point at infinity) together with a lifted angle on the circle factor.
//! Several evaluation paths are provided that are expected to agree: the
//! shadow state sum, the sum over admissible pairs, and closed formulas for
//! Abelian and vertical configurations.

pub mod error;
pub mod evaluators;
pub mod geometry;
pub mod io;
pub mod linking;
pub mod numbers;
pub mod quantum;
pub mod shadow;

pub use error::{Error, ErrorKind, Result};
pub use evaluators::{FieldSample, FramingSource};
pub use geometry::{Link, Loop, Point};
pub use num_complex::Complex64;
pub use numbers::{Color, HalfInt};
pub use quantum::Level;
pub use shadow::{Shadow, ShadowEdge, ShadowFace, ShadowVertex};
