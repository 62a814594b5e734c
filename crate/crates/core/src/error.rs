use thiserror::Error;

use crate::coloring::Rectangle;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("class index {index} out of range (partition has {classes} classes)")]
    ClassOutOfRange { index: usize, classes: usize },

    #[error("colorings live on {left} and {right} vertices")]
    SizeMismatch { left: usize, right: usize },

    #[error("rows {0} and {1}: agreement graph is not colorable with the allowed colors")]
    ChromaticObstruction(usize, usize),

    #[error("grid contains alternating rectangle {0}")]
    AlternatingRectangle(Rectangle),

    #[error("color {0} does not have the ({{x,y}}, a_1, ..., a_t) shape")]
    NotMubayiColor(String),

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("{0} vertices exceeds the configured maximum")]
    TooLarge(u64),

    #[error("malformed partite coloring: {0}")]
    MalformedPartite(String),

    #[error("precondition violated: {message} (need n >= {required})")]
    TooSmall { message: String, required: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
