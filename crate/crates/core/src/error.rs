use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: u128, cap: usize },

    #[error("cannot parse group descriptor {0:?}")]
    BadDescriptor(String),

    #[error("objects belong to different groups ({0} vs {1})")]
    GroupMismatch(String, String),

    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("empty set: {0}")]
    EmptySet(&'static str),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("unknown irrep identifier {0:?}")]
    UnknownIrrep(String),

    #[error("invalid Bohr spec: {0}")]
    InvalidBohrSpec(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("oracle workload of {steps} steps exceeds the cap of {cap}")]
    OracleTooLarge { steps: u128, cap: u128 },

    #[error("instance mismatch: {0}")]
    InstanceMismatch(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}
