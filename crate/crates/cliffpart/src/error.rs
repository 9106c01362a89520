use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order n = {n}; need n >= 2")]
    InvalidOrder { n: u32 },

    #[error("phases of different order cannot be combined (n = {left} vs n = {right})")]
    IncompatibleOrder { left: u32, right: u32 },

    #[error("numeric domain error: {0}")]
    NumericDomain(String),

    #[error("{what} needs {required} but the guard allows {limit}")]
    Capacity {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("no commutation phase fits generators {i} and {j}")]
    RepresentationInconsistency { i: usize, j: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
