use thiserror::Error;

/// Errors raised by constructions, parsers and checkers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Adjacency data that is not even a family of maps on the flag set.
    #[error("malformed structure: {0}")]
    Structural(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("color {color} is not an involution at flag {flag}")]
    NotInvolution { color: usize, flag: usize },

    /// `(r_i r_j)^2` moves `flag`.
    #[error("colors {i} and {j} do not commute at flag {flag}")]
    NotCommuting { i: usize, j: usize, flag: usize },

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("color {color} out of range for rank {rank}")]
    ColorOutOfRange { color: usize, rank: usize },

    /// Two flags in one block have images in different blocks.
    #[error("quotient not well defined: color {color} sends flags {a} and {b} of one block to different blocks")]
    IllDefinedQuotient { color: usize, a: usize, b: usize },

    #[error("voltage mismatch: xi(rn F) != xi(F)^-1 for facet {facet}")]
    VoltageNotInverse { facet: usize },

    #[error("words use different facet pairings")]
    MismatchedPairing,

    #[error("permutation is not an automorphism: fails color {color} at flag {flag}")]
    NotAutomorphism { color: usize, flag: usize },

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown group element `{0}`")]
    UnknownElement(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
