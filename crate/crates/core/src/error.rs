use crate::internal::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("table entry {index} is {value}, outside a codomain of size {cod}")]
    OutOfRange { index: usize, value: usize, cod: usize },

    #[error("map is not injective: {first} and {second} both go to {value}")]
    NotMono { first: usize, second: usize, value: usize },

    #[error("map is not surjective: {missing} has no preimage")]
    NotEpi { missing: usize },

    #[error("size bound exceeded: work estimate {estimate} over limit {limit}")]
    SizeBound { estimate: u128, limit: u128 },

    #[error("morphism outside the expected hom-set: {0}")]
    NotInHomSet(String),

    #[error("morphism outside the required class: {0}")]
    NotInClass(String),

    #[error("diagram does not commute: {0}")]
    NonCommuting(String),

    #[error("fibre over {element} has {count} elements, expected exactly one")]
    FiberNotSingleton { element: usize, count: usize },

    #[error("functor is not a full monomorphism")]
    NotFullMono,

    #[error("functor is not a strict bi-sieve")]
    NotBiSieve,

    #[error("functor is not fully faithful and epi on objects: {0}")]
    NotFfEpi(String),

    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse { line: usize, field: String, message: String },

    #[error("validation failed: {0}")]
    Validation(ValidationReport),
}
