use thiserror::Error;

/// Everything that can go wrong inside the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Input(String),

    #[error("operation is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("carrier is not a semilattice")]
    NotSemilattice,

    #[error("carrier is not a lattice: {0}")]
    NotLattice(String),

    #[error("{what} of order {order} exceeds the configured cap {cap}")]
    CapExceeded {
        what: String,
        order: usize,
        cap: usize,
    },

    #[error("carrier width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    /// The product of two members of a space fell outside the space.
    #[error("closure violation in {space}: product of carrier elements {left} and {right} left the space")]
    ClosureViolation {
        space: String,
        left: usize,
        right: usize,
    },

    #[error("unknown {kind} `{value}`")]
    Unknown { kind: &'static str, value: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}
