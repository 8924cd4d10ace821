use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IsingError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// `R = 0`, i.e. `J = 0` and `B1 = B2`: normalized quantities are undefined.
    #[error("degenerate parameters: R = sqrt(B_minus^2 + 4 J^2) vanishes")]
    DegenerateParameters,

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error("no entanglement generation without coupling (J = 0)")]
    NoEntanglementGeneration,

    #[error("maximal entanglement not attainable: B_minus^2 > 4 J^2")]
    NotAttainable,

    #[error("invalid loop indices (n={n}, m={m}, s={s}): {violated}")]
    InvalidLoopIndices { n: i64, m: i64, s: i64, violated: String },
}

pub type Result<T, E = IsingError> = std::result::Result<T, E>;
