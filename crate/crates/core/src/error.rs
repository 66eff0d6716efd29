use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("exponent {exponent} exceeds the limit {limit}")]
    ExponentLimit { exponent: i64, limit: i64 },

    #[error("evaluation point has a zero component at index {0}")]
    ZeroComponent(usize),

    #[error("{0}")]
    InvalidInput(String),

    #[error(transparent)]
    Parse(#[from] crate::parse::ParseError),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("lattice cell cap exceeded: {cells} cells > cap {cap}")]
    LatticeCap { cells: u64, cap: u64 },

    #[error("grid budget exceeded: requested {requested}, max {max}")]
    GridBudget { requested: u32, max: u32 },

    #[error("root refinement did not converge within the iteration budget ({0})")]
    NonConvergence(String),

    #[error("Sturm endpoint {0} is a root; remove it or use an open-interval count")]
    EndpointRoot(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
