//! Exact intrinsic affine spaces and Lie affgebras.
//!
//! An affine space is treated here without a chosen origin: it is a set with
//! a ternary heap operation `⟨a,b,c⟩` and a scalar action `λ ▷_a b`. Picking a
//! basepoint `o` recovers an abelian group and a vector space, and a Lie
//! bracket on the affine space reduces to an honest Lie algebra at every
//! basepoint. The concrete family studied is `SNA(n)`: traceless
//! `(n+1)×(n+1)` matrices whose rows and columns all sum to one, with bracket
//! `[a,b] = ab − ba + b`.
//!
//! All core types are generic over the scalar [`Field`]; the aliases below fix
//! the two exact instances.

pub mod affine;
mod error;
pub mod field;
pub mod lie;
pub mod line;
pub mod matrix;
pub mod report;
pub mod sna;

pub use affine::{AffineSpace, AllMatrices, VectorView};
pub use error::{Error, Result};
pub use field::{Eisenstein, Field, FieldError, Rational, ScalarText};
pub use lie::{Bracket, SnaBracket, ZetaBracket};
pub use line::{AffineLine, LineMap};
pub use matrix::{solve_linear, Matrix, MatrixError, Solution};
pub use report::{AxiomReport, Counterexample, Witness};
pub use sna::{BarycentricCombo, ChevalleyTriple, Generator, SnaSpec};

/// Matrices over the rationals.
pub type RatMatrix = Matrix<Rational>;
/// Matrices over Q(ω).
pub type EisMatrix = Matrix<Eisenstein>;
