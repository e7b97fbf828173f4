use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a composition needs at least one part")]
    EmptyComposition,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("cannot truncate a composition with a single part")]
    TruncateSinglePart,
    #[error("weight must be at least 1")]
    NonPositiveWeight,
    #[error("root of unity order must be odd and at least 3, got {0}")]
    BadOrder(u32),
    #[error("matrix size must be at least 1")]
    BadSize,
    #[error("elements live over different algebras (n = {0} and n = {1})")]
    ContextMismatch(u8, u8),
    #[error("generator index ({0},{1}) out of range for n = {2}")]
    IndexOutOfRange(u8, u8, u8),
    #[error("R-tilde entry {0} is not a Laurent polynomial")]
    NonLaurent(String),
    #[error("index constraint violated: {0}")]
    IndexConstraint(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
