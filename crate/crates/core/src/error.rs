use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. Each variant maps to a stable machine-readable `kind`
/// string used by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable totals: {0} vs {1}")]
    IncomparableTotals(u32, u32),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid cuspidal datum: {0}")]
    InvalidCuspidal(String),

    #[error("not a summand: {0}")]
    NotASummand(String),

    #[error("inconsistent sign: {0}")]
    InconsistentSign(String),

    #[error("parameter is not elliptic: {0}")]
    NotElliptic(String),

    #[error("parameter is not self-dual: {0}")]
    NotSelfDual(String),

    #[error("parity rule violated: {0}")]
    ParityViolation(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("case not constructed in paper: {0}")]
    CaseNotConstructed(String),

    #[error("table not defined: {0}")]
    TableUndefined(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("N mismatch: parameter incomplete ({0})")]
    DimensionMismatch(String),

    #[error("unknown cuspidal datum: {0}")]
    UnknownTau(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IncomparableTotals(..) => "incomparable_totals",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidCuspidal(_) => "invalid_cuspidal",
            Error::NotASummand(_) => "not_a_summand",
            Error::InconsistentSign(_) => "inconsistent_sign",
            Error::NotElliptic(_) => "not_elliptic",
            Error::NotSelfDual(_) => "not_self_dual",
            Error::ParityViolation(_) => "parity_violation",
            Error::GroupMismatch(_) => "group_mismatch",
            Error::Degenerate(_) => "degenerate",
            Error::CaseNotConstructed(_) => "case_not_constructed",
            Error::TableUndefined(_) => "table_undefined",
            Error::Hypothesis(_) => "hypothesis",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::UnknownTau(_) => "unknown_tau",
            Error::Parse(_) => "parse",
        }
    }
}
