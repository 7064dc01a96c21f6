use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid half: {0}")]
    InvalidHalf(String),
    #[error("invalid weight function: {0}")]
    InvalidWeights(String),
    #[error("degenerate fiber at target vertex {0}")]
    DegenerateFiber(usize),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("structure violated: {0}")]
    StructureViolation(String),
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    /// A constructive step that is proven to succeed did not. Reaching this
    /// would refute a theorem or lemma the crate relies on.
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("lemma violated: {0}")]
    LemmaViolation(String),
    #[error("pipeline failed at stage `{stage}`: {detail}")]
    PipelineFailure { stage: String, detail: String },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit status for this failure: `64` usage, `2` resource
    /// limits, `3` refutations of a proven statement, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Parse { .. } | Error::Io(_) => 64,
            Error::ResourceLimit(_) => 2,
            Error::TheoremViolation(_) | Error::LemmaViolation(_) => 3,
            _ => 1,
        }
    }

    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid_argument",
            Error::PreconditionViolation(_) => "precondition_violation",
            Error::ResourceLimit(_) => "resource_limit",
            Error::InvalidHalf(_) => "invalid_half",
            Error::InvalidWeights(_) => "invalid_weights",
            Error::DegenerateFiber(_) => "degenerate_fiber",
            Error::NotApplicable(_) => "not_applicable",
            Error::HypothesisViolation(_) => "hypothesis_violation",
            Error::ConstraintViolation(_) => "constraint_violation",
            Error::StructureViolation(_) => "structure_violation",
            Error::InconsistentInput(_) => "inconsistent_input",
            Error::TheoremViolation(_) => "theorem_violation",
            Error::LemmaViolation(_) => "lemma_violation",
            Error::PipelineFailure { .. } => "pipeline_failure",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
        }
    }

    pub(crate) fn pipeline(stage: &str, detail: impl Into<String>) -> Self {
        Error::PipelineFailure { stage: stage.to_string(), detail: detail.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
