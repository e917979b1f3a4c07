//! Error types shared across the crate.

use thiserror::Error;

/// Errors from vector arithmetic.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum VectorError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vector must have at least one entry")]
    Empty,
    #[error("non-finite entry at index {index}")]
    NonFiniteEntry { index: usize },
    #[error("non-finite scalar {value}")]
    NonFiniteScalar { value: f64 },
}

/// Errors from run-configuration validation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("smoothness exponent q must lie in (1, 2], got {0}")]
    InvalidQ(f64),
    #[error("alpha must be positive, got {0}")]
    InvalidAlpha(f64),
    #[error("mu value {mu} violates the admissibility condition mu > {threshold}")]
    InadmissibleMu { mu: f64, threshold: f64 },
    #[error("weakness value {0} must lie in (0, 1]")]
    InvalidWeakness(f64),
    #[error("the rescaled and baseline variants require weakness identically 1, got {0}")]
    WeaknessNotOne(f64),
    #[error("{name} sequence must be nonempty")]
    EmptySequence { name: &'static str },
    #[error("{name} tolerance must be positive, got {value}")]
    InvalidTolerance { name: &'static str, value: f64 },
    #[error("us_radius must be positive, got {0}")]
    InvalidRadius(f64),
    #[error("m_zero must be nonnegative, got {0}")]
    InvalidMZero(f64),
}

/// Errors from dictionary construction, the semi-norm solver, and file I/O.
#[derive(Debug, Error)]
pub enum DictionaryError {
    #[error("dictionary atoms must share one dimension: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("atom {index} has norm {norm}, expected 1 within 1e-12")]
    NonUnitAtom { index: usize, norm: f64 },
    #[error("atoms do not span the ambient space (rank {rank} < dimension {dim})")]
    RankDeficient { rank: usize, dim: usize },
    #[error("random dictionary generation failed to reach full rank after {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("point is not representable in the span of the dictionary")]
    NotInSpan,
    #[error("dictionary needs at least {dim} atoms to span dimension {dim}, got {count}")]
    TooFewAtoms { dim: usize, count: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Vector(#[from] VectorError),
}

/// Errors from objective evaluation and loading.
#[derive(Debug, Error)]
pub enum ObjectiveError {
    #[error("point dimension {found} does not match objective dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("labels must be +1 or -1, found {0}")]
    InvalidLabel(f64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Vector(#[from] VectorError),
}

/// Errors from the univariate line search.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum LineSearchError {
    #[error("line-search direction is the zero vector")]
    ZeroDirection,
    #[error("non-finite value encountered at t = {t}")]
    NonFinite { t: f64 },
    #[error("objective appears unbounded below along the ray (no sign change of the derivative up to |t| = 2^60)")]
    UnboundedDirection,
}

/// Errors from the iteration engines.
#[derive(Debug, Error)]
pub enum AlgorithmError {
    #[error("step size is undefined for a zero inner product")]
    ZeroInnerProduct,
    #[error("no dictionary atom sees the gradient (all inner products vanish)")]
    DegenerateSelection,
    #[error("objective dimension {objective}, dictionary dimension {dictionary}")]
    DimensionMismatch { objective: usize, dictionary: usize },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("line search failed at step {step}: {source}")]
    LineSearch {
        step: usize,
        source: LineSearchError,
        partial: crate::trace::RunTrace,
    },
}

/// Errors from the analysis layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("the bound is defined for step indices k >= 2, got {0}")]
    IndexTooSmall(usize),
    #[error("bound inputs must be positive: {name} = {value}")]
    NonPositiveInput { name: &'static str, value: f64 },
    #[error("the closed-form bound requires a constant mu sequence")]
    NonConstantMu,
    #[error("exact convergence before k = {k}: error is not positive, no rate to fit")]
    ExactConvergence { k: usize },
    #[error("trace records carry no error values (minimum unknown)")]
    MissingErrorValues,
    #[error("fit range [{k_min}, {k_max}] contains fewer than two usable points")]
    RangeTooSmall { k_min: usize, k_max: usize },
}

/// Errors from experiment specs and command execution.
#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("spec parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid experiment spec: {0}")]
    InvalidSpec(String),
    #[error("unknown builtin '{0}'")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Dictionary(#[from] DictionaryError),
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
    #[error(transparent)]
    Algorithm(#[from] AlgorithmError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}
