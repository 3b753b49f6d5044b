use num_bigint::BigInt;
use thiserror::Error;

/// `a(t)` has no factor `1 + t`; `remainder` is `a(-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial is not divisible by 1 + t (value at -1 is {remainder})")]
pub struct NotDivisible {
    pub remainder: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{space} carries no nontrivial orientation character")]
    InadmissibleCharacter { space: String },

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("boundary d_{degree} has shape {found_rows}x{found_cols}, expected {rows}x{cols}")]
    ShapeMismatch {
        degree: usize,
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    #[error("d_{degree} composed with d_{} is not zero", degree + 1)]
    BoundaryNotZero { degree: usize },

    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    #[error("invalid Morse data: {0}")]
    InvalidMorse(String),

    #[error("sign twist has {found} entries, Morse data has {expected} trajectories")]
    TwistShape { expected: usize, found: usize },

    #[error("twisted complex violates d^2 = 0 at d_{degree} composed with d_{}", degree + 1)]
    InconsistentTwist { degree: usize },

    #[error("invalid Morse-Bott data: {0}")]
    InvalidMorseBott(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
