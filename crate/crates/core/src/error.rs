use thiserror::Error;

use crate::field::FieldError;
use crate::matrix::MatrixError;
use crate::report::{AxiomReport, Counterexample};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("{role} is not a member of {carrier}")]
    NotMember { role: String, carrier: String },
    #[error("map is not affine: {}", .0.summary())]
    NotAffine(Box<AxiomReport>),
    #[error("bracket is not idempotent: [x,x] = {} for x = {}", .0.lhs, .0.inputs.first().map(|w| w.value.as_str()).unwrap_or("?"))]
    NotIdempotent(Box<Counterexample>),
    #[error("unknown generator `{0}` (expected one of A00_0, A01_0, A00_1, A10_0)")]
    UnknownGenerator(String),
    #[error("free-entry pattern for n={n} needs {expected} values, got {found}")]
    PatternLength { n: usize, expected: usize, found: usize },
    #[error("{op} is only defined for n={supported}, got n={n}")]
    UnsupportedDimension { op: &'static str, supported: usize, n: usize },
    #[error("n must be at least 1")]
    ZeroDimension,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
