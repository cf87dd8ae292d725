//! Exact arithmetic over `Z`, `Q` and `Z/n`, together with the matrix
//! normal forms that make lifting problems and syzygies decidable.

mod hermite;
mod matrix;
mod ring;
mod smith;
mod solve;

pub use hermite::hnf;
pub use matrix::Matrix;
pub use ring::{Elem, Ring};
pub use smith::snf;
pub(crate) use smith::invariant_factors;
pub use solve::{row_syzygies, solve_left};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("{op} is not supported over {ring}")]
    UnsupportedRing { op: &'static str, ring: Ring },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),
    #[error("unknown ring `{0}`")]
    UnknownRing(String),
    #[error("`{literal}` is not an element of {ring}")]
    InvalidLiteral { literal: String, ring: String },
}
