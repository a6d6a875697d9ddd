//! Error type shared across the toolkit.

use thiserror::Error;

/// Everything that can go wrong in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("point outside action box: coordinate {axis} = {value} not in [{lo}, {hi}]")]
    OutsideBox {
        axis: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("broken Hermitian symmetry: max deviation {max_dev:e} at k = {mode:?}")]
    Symmetry { max_dev: f64, mode: Vec<i64> },

    #[error("invalid mode: k = 0 is not allowed here")]
    ZeroMode,

    #[error("1-form is not closed: max |d alpha| = {max_dalpha:e} exceeds tolerance {tol:e}")]
    NotClosed { max_dalpha: f64, tol: f64 },

    #[error("vertical average does not vanish: max |k = 0 coefficient| = {max_avg:e}")]
    NonzeroAverage { max_avg: f64 },

    #[error("inconsistent primitive reconstruction at k = {mode:?}: discrepancy {max_dev:e}")]
    InconsistentPrimitive { max_dev: f64, mode: Vec<i64> },

    #[error(
        "small-divisor certificate failed: direction {direction:?} certifies only C = {certified:e}"
    )]
    CertificationFailure { direction: Vec<f64>, certified: f64 },

    #[error("perturbation is resonant: {violations} violation(s), worst |coefficient| = {worst:e}")]
    Resonant { violations: usize, worst: f64 },

    #[error("small divisor blow-up at k = {k:?}, xi = {xi:?}: |G| = {magnitude:e}")]
    SmallDivisor {
        k: Vec<i64>,
        xi: Vec<f64>,
        magnitude: f64,
    },

    #[error("weak nondegeneracy violated near xi = {xi:?}: |grad Omega_k| = {grad:e}")]
    Degenerate { xi: Vec<f64>, grad: f64 },

    #[error("flow left the action box at t = {t:e}: xi = {xi:?}")]
    FlowLeftBox { t: f64, xi: Vec<f64> },

    #[error("step size underflow at t = {t:e} (h = {h:e}): system too stiff for the tolerance")]
    StepUnderflow { t: f64, h: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("parse error in {what} (line {line}): {message}")]
    Parse {
        what: String,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
