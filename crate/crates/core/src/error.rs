use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("generator index {index} out of range for {strands} strands")]
    LetterOutOfRange { index: i32, strands: usize },

    #[error("invalid strand count {0}")]
    InvalidStrands(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("strand {0} is not fixed by the braid permutation")]
    StrandNotFixed(usize),

    #[error("variable registries differ")]
    RegistryMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("substitution produces a fractional exponent in `{0}`")]
    FractionalExponent(String),

    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid reducing arc: {0}")]
    InvalidArc(String),

    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: usize },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
