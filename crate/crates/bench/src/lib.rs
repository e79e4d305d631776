//! Inputs shared by the criterion benchmarks.

use semicomplex::NumericalSemigroup;

/// Semigroups of increasing size used across benchmark groups.
pub fn fixtures() -> Vec<(&'static str, NumericalSemigroup)> {
    [
        ("<5,6,8,9>", &[5, 6, 8, 9][..]),
        ("<5,7>", &[5, 7]),
        ("<4,6,9,11>", &[4, 6, 9, 11]),
        ("<11,13,17,19>", &[11, 13, 17, 19]),
        ("<31,37,41>", &[31, 37, 41]),
    ]
    .into_iter()
    .map(|(name, gens)| (name, NumericalSemigroup::from_generators(gens).unwrap()))
    .collect()
}
