use thiserror::Error;

/// Errors produced by semigroup construction and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),

    #[error("generators {gens:?} have gcd {gcd}, not 1")]
    GcdNotOne { gens: Vec<i64>, gcd: i64 },

    #[error("gap {0} is not a positive integer")]
    NonPositiveGap(i64),

    #[error("not closed under addition: {a} + {b} = {} is a gap", a + b)]
    NotASemigroup { a: i64, b: i64 },

    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(i64),

    #[error("{0} is not a pseudo-Frobenius number")]
    NotPseudoFrobenius(i64),

    #[error("operation is undefined on the whole monoid N")]
    WholeMonoid,

    #[error("type {0} is too large for subset enumeration (limit {max})", max = crate::extensions::MAX_TYPE)]
    TypeTooLarge(usize),

    #[error("Frobenius number exceeds the supported bound 2^40")]
    FrobeniusTooLarge,

    #[error("genus {requested} exceeds the supported maximum {max}")]
    GenusTooLarge { requested: usize, max: usize },

    #[error("multiplicity must be at least 2, got {0}")]
    InvalidMultiplicity(i64),

    #[error("complexity must be at least 1, got {0}")]
    InvalidComplexity(usize),

    #[error("level at depth {depth} would hold {projected} nodes, above the cap {cap}")]
    LevelTooLarge {
        depth: usize,
        projected: u128,
        cap: usize,
    },

    #[error("invalid semigroup literal: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
