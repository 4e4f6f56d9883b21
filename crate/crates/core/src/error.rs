use thiserror::Error;

use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("genus must be at least 1 (got {0})")]
    InvalidGenus(u32),

    #[error("generator {generator} is outside the alphabet of {context}")]
    Alphabet { generator: String, context: String },

    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: u32, found: u32 },

    #[error("invalid parameters for builtin `{name}`: {reason}")]
    InvalidBuiltin { name: String, reason: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram has no beta curves; a curve description of the beta side is required")]
    MissingCurves,

    #[error("word {word} is not in the intersection of the two kernels")]
    NotInIntersection { word: Word },

    #[error("unknown twist `{0}`")]
    UnknownTwist(String),

    #[error("twist table is invalid: {0}")]
    TwistTable(String),

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
