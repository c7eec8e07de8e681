use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid element {element}: {reason}")]
    InvalidElement { element: String, reason: String },

    #[error("invalid truncation policy: {0}")]
    InvalidPolicy(String),

    #[error("enumeration of {requested} elements exceeds the cap of {cap}")]
    ResourceLimit { requested: u128, cap: u64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("directed set mismatch: {0}")]
    DirectedSetMismatch(String),

    #[error("invalid family spec `{spec}`: {reason}")]
    FamilySpec { spec: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite value {value} at {element}")]
    NonFinite { value: f64, element: String },
}

pub type Result<T> = std::result::Result<T, Error>;
