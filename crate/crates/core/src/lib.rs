//! Numerical semigroups: ideal extensions, i-chains, the complexity
//! invariant, and enumeration of all semigroups with a given multiplicity and
//! complexity through the genealogy tree `G(m)`.
//!
//! ```
//! use semicomplex::{complexity, NumericalSemigroup};
//!
//! let s: NumericalSemigroup = "<5,7>".parse().unwrap();
//! assert_eq!(s.frobenius(), 23);
//! assert_eq!(complexity(&s), 5);
//! ```

pub mod complexity;
pub mod error;
pub mod extensions;
pub mod genealogy;
pub mod json;
pub mod oracle;
pub mod semigroup;

pub use complexity::{
    chain, classify, complexity, gamma, mu, pf_chain_exceeds_complexity, validate_chain, Class,
    IChain, ThetaMap,
};
pub use error::{Error, Result};
pub use extensions::{
    ideal_extensions, is_ideal_extension, is_pertinent, pertinent_sets, proper_ideal_extensions,
    PertinentSet,
};
pub use genealogy::{children, count, enumerate, export_dot, level, shift_embed, TreeLevel};
pub use semigroup::{AperySet, NumericalSemigroup};
