use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("adjoint action has an eigenvalue outside Q(i)")]
    EigenNotGaussianRational,
    #[error("adjoint action of h is not diagonalizable")]
    NotDiagonalizable,
    #[error("no Gaussian-rational adaptable basis found: {0}")]
    ConstructionFailed(String),
    #[error("adaptable-basis hint violates condition {condition}: {detail}")]
    HintInvalid { condition: u8, detail: String },
    #[error("element has a nonzero h-component")]
    NotUnipotent,
    #[error("exact flow requested but some weight is nonzero")]
    NeedsFloat,
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("no stable majority layer: {agreeing} of {trials} samples agree")]
    InconsistentSampling { agreeing: usize, trials: usize },
    #[error("Pfaffian of an odd-dimensional matrix")]
    OddDimension,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("normalization of the complement of k is singular")]
    NormalizationFailed,
    #[error("functional is not in the cross-section")]
    NotInLambdaNu,
    #[error("polarization is not isotropic")]
    IsotropyFail,
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),
    #[error("Monte-Carlo relative error {0:.3e} exceeds the limit")]
    McVarianceTooHigh(f64),
}

impl Error {
    /// Stable reason code used in reports and exit messages.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "PARSE_ERROR",
            Error::UnknownLabel(_) => "UNKNOWN_LABEL",
            Error::DuplicateLabel(_) => "DUPLICATE_LABEL",
            Error::BadNumber(_) => "BAD_NUMBER",
            Error::EigenNotGaussianRational => "EIGEN_NOT_GAUSSIAN_RATIONAL",
            Error::NotDiagonalizable => "NOT_DIAGONALIZABLE",
            Error::ConstructionFailed(_) => "CONSTRUCTION_FAILED",
            Error::HintInvalid { .. } => "HINT_INVALID",
            Error::NotUnipotent => "NOT_UNIPOTENT",
            Error::NeedsFloat => "NEEDS_FLOAT",
            Error::DivisionByZero(_) => "DIVISION_BY_ZERO",
            Error::UnsupportedCase(_) => "UNSUPPORTED_CASE",
            Error::InconsistentSampling { .. } => "INCONSISTENT_SAMPLING",
            Error::OddDimension => "ODD_DIMENSION",
            Error::NotSkew => "NOT_SKEW",
            Error::NormalizationFailed => "NORMALIZATION_FAILED",
            Error::NotInLambdaNu => "NOT_IN_LAMBDA_NU",
            Error::IsotropyFail => "ISOTROPY_FAIL",
            Error::HypothesisViolation(_) => "HYPOTHESIS_VIOLATION",
            Error::McVarianceTooHigh(_) => "MC_VARIANCE_TOO_HIGH",
        }
    }

    /// Input problems (as opposed to mathematical outcomes).
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::UnknownLabel(_) | Error::DuplicateLabel(_) | Error::BadNumber(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
