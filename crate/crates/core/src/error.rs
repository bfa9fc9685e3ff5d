use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("indeterminate value")]
    Indeterminate,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("function is constant")]
    ConstantFunction,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { msg: String, line: usize, col: usize },
    #[error("invalid cycle spec: {0}")]
    InvalidSpec(String),
    #[error("face intersection is not Gaussian-rational: {0}")]
    NonRationalFace(String),
    #[error("inadmissible input: {0}")]
    InadmissibleInput(String),
    #[error("translation factor is zero")]
    ZeroTranslation,
    #[error("value lies on a branch cut: {0}")]
    OnBranchCut(String),
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("tracking failure: {0}")]
    TrackingFailure(String),
    #[error("tangential crossing: {0}")]
    TangentialCrossing(String),
    #[error("too close to a singularity: {0}")]
    TooCloseToSingularity(String),
    #[error("cycle is not closed: {0}")]
    NonClosedCycle(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
}

impl Error {
    /// Process exit code: 2 for bad input, 3 for numerical or mathematical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::InvalidSpec(_)
            | Error::ZeroDenominator
            | Error::ZeroTranslation
            | Error::NonRationalFace(_)
            | Error::InadmissibleInput(_)
            | Error::DegreeMismatch(_) => 2,
            _ => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "ZeroDenominator",
            Error::Indeterminate => "Indeterminate",
            Error::ZeroFunction => "ZeroFunction",
            Error::ConstantFunction => "ConstantFunction",
            Error::Parse { .. } => "ParseError",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::NonRationalFace(_) => "NonRationalFace",
            Error::InadmissibleInput(_) => "InadmissibleInput",
            Error::ZeroTranslation => "ZeroTranslation",
            Error::OnBranchCut(_) => "OnBranchCut",
            Error::SingularPoint(_) => "SingularPoint",
            Error::TrackingFailure(_) => "TrackingFailure",
            Error::TangentialCrossing(_) => "TangentialCrossing",
            Error::TooCloseToSingularity(_) => "TooCloseToSingularity",
            Error::NonClosedCycle(_) => "NonClosedCycle",
            Error::DegreeMismatch(_) => "DegreeMismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
