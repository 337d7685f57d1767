//! Error type shared by all solver modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A gamma-family function was evaluated at a non-positive integer.
    #[error("gamma function pole at z = {re} + {im}i")]
    GammaPole { re: f64, im: f64 },

    /// A series or continued evaluation did not converge within its budget.
    #[error("{what} did not converge")]
    NonConvergence { what: &'static str },

    /// Coupling parameter outside 1/2 < nu < 3/2 or at the excluded point nu = 1.
    #[error("coupling nu = {nu} outside the admissible range (0.5, 1.5) \\ {{1}}")]
    InvalidCoupling { nu: f64 },

    /// Operation defined only for non-separating (off-diagonal) connection matrices.
    #[error("connection matrix is separating (diagonal); operation requires sin(beta) != 0")]
    SeparatingInput,

    /// A root bracket could not be established; indicates tolerance misconfiguration.
    #[error("bracketing failure: {what}")]
    BracketingFailure { what: String },

    /// A quantity that must hold at an eigenvalue failed its tolerance check.
    #[error("not an eigenvalue: {what}")]
    NotAnEigenvalue { what: String },

    /// The projected type-2 eigenvector vanished for both seed columns.
    #[error("projected eigenvector vanished for both seed columns")]
    ZeroEigenvector,

    /// The radial lambda = 0 case is excluded from the model.
    #[error("the radial problem at lambda = 0 is unsupported (requires a separate treatment)")]
    LambdaZeroUnsupported,

    /// Adaptive quadrature failed to reach its tolerance.
    #[error("quadrature did not converge for {what}")]
    QuadratureFailure { what: &'static str },

    /// A vector of class values is not the character of a genuine representation.
    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    /// Generic input validation failure (CLI and config surface).
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI: 2 for bad input, 3 for numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidCoupling { .. } | Error::InvalidInput(_) | Error::InvalidCharacter(_) => 2,
            _ => 3,
        }
    }
}
