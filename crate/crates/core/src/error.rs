use thiserror::Error;

use crate::packing::{Coloring, ValidationReport};

/// Errors raised while reading any of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected ({} components)", components.len())]
    Disconnected { components: Vec<Vec<usize>> },

    #[error("graph has {n} vertices, limit for this operation is {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("unknown named graph `{0}`")]
    UnknownName(String),

    #[error("invalid packing spec: {0}")]
    InvalidSpec(String),

    #[error("coloring has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("color {color} exceeds spec length {k}")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("partial coloring has {} conflicts", report.violations.len())]
    InvalidPartial { report: ValidationReport },

    #[error("graph is colorable")]
    Colorable { coloring: Coloring },

    #[error("invalid configuration `{name}`: {message}")]
    InvalidConfig { name: String, message: String },

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("Euler total is {total_quarters}/4, expected -12")]
    EulerViolation { total_quarters: i64 },

    #[error("invalid resume cursor: {0}")]
    InvalidCursor(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("search budget exhausted: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
