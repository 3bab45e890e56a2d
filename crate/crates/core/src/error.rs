use thiserror::Error;

/// Errors surfaced by the laboratory.
///
/// Numerical failure modes carry enough context to act on (which
/// quantity degenerated, what to change); plain validation failures
/// carry the offending field description.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("lambda below spectrum: no eigenvalue satisfies lambda_j <= {lambda}")]
    LambdaBelowSpectrum { lambda: f64 },

    #[error("underflow: sigma_min = {sigma_min:.3e}; reduce lambda or enlarge G")]
    Underflow { sigma_min: f64 },

    #[error("mesh too coarse: eigenpair {mode} residual {residual:.3e} exceeds {tolerance:.3e}")]
    MeshTooCoarse {
        mode: usize,
        residual: f64,
        tolerance: f64,
    },

    #[error("regression matrix rank-deficient at step {step}; increase n_paths")]
    RankDeficient { step: usize },

    #[error("unsupported terminal datum for the closed-form solver; use the regression solver")]
    UnsupportedTerminal,

    #[error("projection required: mode {mode} has lambda_j = {lambda_j} below cutoff {lambda}")]
    ProjectionRequired {
        mode: usize,
        lambda_j: f64,
        lambda: f64,
    },

    #[error("observation vanishes: E|chi_G z(t)|^2 = 0 at t = {t}")]
    ObservationVanishes { t: f64 },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("ensemble mismatch: {0}")]
    EnsembleMismatch(String),

    #[error("telescope measure condition fails at n = {violating:?}")]
    MeasureCondition { violating: Vec<usize> },

    #[error("anchor gap too small: exponent {exponent:.3e} overflows")]
    AnchorGapTooSmall { exponent: f64 },

    #[error("conjugate gradient stagnated after {iterations} iterations (residual {residual:.3e}); increase epsilon or reduce m")]
    CgStagnation { iterations: usize, residual: f64 },

    #[error("lifting requires deterministic noise coefficient")]
    NonDeterministicNoise,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
