use thiserror::Error;

/// Errors produced by transform, filter-bank and design routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("LCT parameter matrix is not unimodular: ad - bc = {det} (|det - 1| > {tol})")]
    NonUnimodular { det: f64, tol: f64 },

    #[error("LCT parameter b must be positive, got {b}")]
    NonPositiveB { b: f64 },

    #[error("signal must contain at least one sample")]
    EmptySignal,

    #[error("signal sample at index {index} is not finite")]
    NonFiniteSample { index: i64 },

    #[error("sample period must be positive, got {period}")]
    NonPositivePeriod { period: f64 },

    #[error("frequency grid needs at least 2 points, got {count}")]
    InvalidGrid { count: usize },

    #[error("grid of {count} points is too coarse for order {order}: need at least {required}")]
    GridTooCoarse {
        count: usize,
        order: usize,
        required: usize,
    },

    #[error("sample periods differ: {left} vs {right}")]
    PeriodMismatch { left: f64, right: f64 },

    #[error("polyphase components have inconsistent periods: {left} vs {right}")]
    InconsistentPair { left: f64, right: f64 },

    #[error("filter order must be odd, got {order}")]
    EvenOrder { order: usize },

    #[error("half-band order must be twice an odd number, got {order}")]
    InvalidOrder { order: usize },

    #[error("transition width must lie in (0, pi/2), got {value}")]
    InvalidTransition { value: f64 },

    #[error("window shape must be non-negative, got {value}")]
    InvalidShape { value: f64 },

    #[error("filter support must start at index 0, got {start}")]
    UnsupportedStart { start: i64 },

    #[error("half-band spectrum dips to {min} on the unit circle; not factorable")]
    NegativeSpectrum { min: f64 },

    #[error("at least one peak frequency is required")]
    EmptyPeakList,

    #[error("peak frequency {value} is outside [0, 2pi)")]
    InvalidPeak { value: f64 },

    #[error("spectral factorization failed: {0}")]
    RootFindingFailure(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: u64,
        message: String,
    },

    #[error("filter bank file is inconsistent: {0}")]
    BankMismatch(String),

    #[error("{message}")]
    Usage { message: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON error on {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
