use thiserror::Error;

use crate::numbers::Color;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad failure categories; the CLI maps these onto exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input could not be read as a well-formed record.
    Parse,
    /// A structural invariant of an input object is violated.
    Invariant,
    /// The input is well-formed but outside the domain of the requested operation.
    Precondition,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid loop {loop_index}: {reason}")]
    InvalidLoop { loop_index: usize, reason: String },

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("loop {loop_index} touches the cut angle without crossing it at vertex {vertex}")]
    TangentialCrossing { loop_index: usize, vertex: usize },

    #[error("point ({x}, {y}) lies on the projected curve")]
    PointOnCurve { x: f64, y: f64 },

    #[error("link has {0} double point(s); operation needs a double-point-free projection")]
    HasDoublePoints(usize),

    #[error("link is not admissible: {0}")]
    NotAdmissible(String),

    #[error("projections are not transverse: {0}")]
    NonTransverse(String),

    #[error("offset {offset} too large (admissible below {limit})")]
    OffsetTooLarge { offset: f64, limit: f64 },

    #[error("loop {loop_index} has S^1 winding number {wind}; expected a 0-homologous loop")]
    NotNullHomologous { loop_index: usize, wind: i64 },

    #[error("loop {0} is vertical; only the vertical-loop evaluator accepts it")]
    VerticalLoop(usize),

    #[error("level must be at least {min}, got {k}")]
    InvalidLevel { k: u32, min: u32 },

    #[error("color {color} outside the color set of level {k}")]
    ColorOutOfRange { color: Color, k: u32 },

    #[error("loop {loop_index} has color {color}; only the fundamental color 1/2 is supported here")]
    UnsupportedColor { loop_index: usize, color: Color },

    #[error("invalid shadow: {0}")]
    InvalidShadow(String),

    #[error("face {0} has no gleam")]
    MissingGleams(usize),

    #[error("shadow has {0} vertices; operation needs a vertex-free shadow")]
    HasVertices(usize),

    #[error("faces have total Euler characteristic {found}, genus {genus} needs {expected}")]
    GenusMismatch { found: i64, expected: i64, genus: u32 },

    #[error("field sample mismatch: {0}")]
    FieldSample(String),

    #[error("self-linking is not stable under shrinking the framing offset ({0} vs {1})")]
    UnstableFraming(i64, i64),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::InvalidLoop { .. } => ErrorKind::Parse,
            Error::DegenerateGeometry(_)
            | Error::InvalidShadow(_)
            | Error::MissingGleams(_)
            | Error::ColorOutOfRange { .. }
            | Error::FieldSample(_) => ErrorKind::Invariant,
            _ => ErrorKind::Precondition,
        }
    }
}
