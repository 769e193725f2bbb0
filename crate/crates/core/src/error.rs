use thiserror::Error;

/// Errors produced by the numerical kernels and model evaluations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Adaptive quadrature ran out of subdivisions before reaching the
    /// requested tolerance.
    #[error("quadrature did not converge after {subdivisions} subdivisions (error estimate {error_estimate:.3e})")]
    NonConvergence {
        subdivisions: usize,
        error_estimate: f64,
    },

    /// An argument lies outside the documented domain of the operation.
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    /// Bracketed root finding requires f(lo) and f(hi) of opposite sign.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {flo:.3e}, f(hi) = {fhi:.3e}")]
    NoSignChange { lo: f64, hi: f64, flo: f64, fhi: f64 },

    /// Every input vector fell below the rank tolerance.
    #[error("orthonormalization received only degenerate input")]
    DegenerateInput,

    /// The identity's left-hand side is undefined at V = 0.
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    /// A quantity violated an invariant the model guarantees; this signals a
    /// numerical fault, not model behaviour.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// |lambda| >= 1 requested where the matrix family is singular.
    #[error("lambda = {0} outside the open interval (-1, 1)")]
    LambdaOutOfRange(f64),

    /// RLD quantities do not exist for rank-deficient states.
    #[error("RLD undefined: state has rank {rank} < dimension {dim}")]
    RldUndefined { rank: usize, dim: usize },

    /// Eigendecomposition refused the input.
    #[error("eigendecomposition failed: {0}")]
    EigenFailure(String),

    /// The discretization grid cannot represent the state to tolerance.
    #[error("grid too coarse: trace deviates from 1 by {0:.3e}")]
    GridTooCoarse(f64),

    /// Denominator of the tradeoff indicator vanished numerically.
    #[error("degenerate denominator in omega evaluation: {0:.3e}")]
    DegenerateDenominator(f64),

    /// The SLD and lambda-LD inverses coincide on a diagonal entry.
    #[error("zero denominator: J_S^-1 equals J_lambda^-1 on diagonal entry {0}")]
    ZeroDenominator(usize),

    /// The radicand of the closed-form threshold turned negative.
    #[error("negative radicand {0:.3e} in lambda* closed form")]
    RadicandNegative(f64),

    /// Density scan found no interior maximum.
    #[error("no interior density peak found on the scan range")]
    NoPeak,
}

pub type Result<T> = std::result::Result<T, Error>;
