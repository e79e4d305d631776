//! Ideal extensions: the semigroups `Δ` for which `S \ {0}` is an ideal.
//!
//! They are exactly the sets `S ∪ A` with `A` an i(S)-pertinent subset of
//! `PF(S)`, so enumerating them reduces to filtering subsets of `PF(S)`.

use std::cmp::Reverse;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest type for which all `2^t` subsets of `PF(S)` are enumerated.
pub const MAX_TYPE: usize = 25;

/// A subset of `PF(base)` closed under sums that land back in `PF(base)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PertinentSet<'a> {
    base: &'a NumericalSemigroup,
    members: Vec<i64>,
}

impl<'a> PertinentSet<'a> {
    /// Validates `members` against `base`.
    pub fn new(base: &'a NumericalSemigroup, members: &[i64]) -> Result<Self> {
        let pf = base.pseudo_frobenius()?;
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        match violation(&pf, &members) {
            Some(err) => Err(err),
            None => Ok(Self { base, members }),
        }
    }

    pub fn base(&self) -> &NumericalSemigroup {
        self.base
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    /// `base ∪ members`.
    pub fn extension(&self) -> NumericalSemigroup {
        self.base
            .adjoin(&self.members)
            .expect("adjoining to a numerical semigroup keeps gcd 1")
    }
}

/// First reason why `members` is not i(S)-pertinent, if any. A member outside
/// `pf` is reported before a sum (repetition allowed) that lands in `pf`
/// without being a member. Both slices must be sorted.
fn violation(pf: &[i64], members: &[i64]) -> Option<Error> {
    if let Some(&x) = members.iter().find(|x| pf.binary_search(x).is_err()) {
        return Some(Error::NotPseudoFrobenius(x));
    }
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            if pf.binary_search(&(a + b)).is_ok() && members.binary_search(&(a + b)).is_err() {
                return Some(Error::NotASemigroup { a, b });
            }
        }
    }
    None
}

fn closed_in(pf: &[i64], members: &[i64]) -> bool {
    violation(pf, members).is_none()
}

/// `S ⊆ Δ ⊆ S ∪ PF(S)`.
pub fn is_ideal_extension(s: &NumericalSemigroup, delta: &NumericalSemigroup) -> bool {
    if !s.generators().iter().all(|&g| delta.contains(g)) {
        return false;
    }
    if s.is_whole() {
        return true;
    }
    let pf = s.pseudo_frobenius().expect("S is not N");
    (1..=s.frobenius())
        .filter(|&x| delta.contains(x) && !s.contains(x))
        .all(|x| pf.binary_search(&x).is_ok())
}

/// Whether `S ∪ candidate` is a numerical semigroup, i.e. `candidate` is an
/// i(S)-pertinent set.
pub fn is_pertinent(s: &NumericalSemigroup, candidate: &[i64]) -> Result<bool> {
    let pf = s.pseudo_frobenius()?;
    let mut members = candidate.to_vec();
    members.sort_unstable();
    members.dedup();
    Ok(closed_in(&pf, &members))
}

/// Every i(S)-pertinent set, ordered by size and then lexicographically.
pub fn pertinent_sets(s: &NumericalSemigroup) -> Result<Vec<PertinentSet<'_>>> {
    let pf = s.pseudo_frobenius()?;
    let t = pf.len();
    if t > MAX_TYPE {
        return Err(Error::TypeTooLarge(t));
    }
    let mut sets: Vec<Vec<i64>> = (0u32..1 << t)
        .into_par_iter()
        .filter_map(|mask| {
            let members: Vec<i64> = (0..t)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pf[i])
                .collect();
            closed_in(&pf, &members).then_some(members)
        })
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets
        .into_iter()
        .map(|members| PertinentSet { base: s, members })
        .collect())
}

/// All ideal extensions of `S`, including `S` itself, ordered by genus
/// (descending) and then by minimal generators.
pub fn ideal_extensions(s: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    let mut out: Vec<NumericalSemigroup> = pertinent_sets(s)?
        .par_iter()
        .map(PertinentSet::extension)
        .collect();
    out.sort_by(|a, b| {
        Reverse(a.genus())
            .cmp(&Reverse(b.genus()))
            .then_with(|| a.cmp(b))
    });
    Ok(out)
}

/// Ideal extensions other than `S` itself.
pub fn proper_ideal_extensions(s: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    let mut all = ideal_extensions(s)?;
    all.retain(|d| d != s);
    Ok(all)
}
