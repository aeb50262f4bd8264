use alloc::string::String;

/// Errors raised by constructions and checks in this crate.
///
/// Failed identity checks are not errors; they come back as reports carrying
/// witnesses. These variants signal misuse or an inconclusive computation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("parameter n = {0} outside the supported range 1..=3")]
    UnsupportedN(u32),

    #[error("subspace inclusion violated: {0}")]
    NotASubspace(String),

    #[error("representatives do not form a complement: {0}")]
    InvalidRepresentatives(String),

    #[error("vector lies outside the numerator subspace; projection undefined")]
    ProjectionUndefined,

    #[error("endomorphism does not satisfy f^3 = 0")]
    CubeNotZero,

    #[error("matrix is not a derivation (first violation at basis pair ({0}, {1}))")]
    NotDerivation(usize, usize),

    #[error("irreducibility test inconclusive after {attempts} random elements (seed {seed})")]
    RetriesExhausted { attempts: usize, seed: u64 },

    #[error("module of dimension zero has no irreducibility verdict")]
    EmptyModule,

    #[error("{0}")]
    NotClosed(String),
}

pub type Result<T> = core::result::Result<T, Error>;
