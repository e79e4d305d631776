//! Brute-force certifiers for small semigroups.
//!
//! Nothing here goes through the Apéry-set machinery used by the rest of the
//! crate: the catalog is built on gap bitmasks, pseudo-Frobenius numbers come
//! straight from their definition, extensions are found by testing every
//! subset for closure, and minimal i-chain lengths by breadth-first search.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::complexity::{complexity, mu, ThetaMap};
use crate::error::{Error, Result};
use crate::extensions::ideal_extensions;
use crate::genealogy;
use crate::semigroup::NumericalSemigroup;

/// Largest genus the catalog will enumerate.
pub const MAX_CATALOG_GENUS: usize = 12;

/// Largest genus accepted by [`min_ichain_bfs`].
pub const MAX_BFS_GENUS: usize = 10;

/// Number of numerical semigroups of genus 0, 1, ..., 12 (OEIS A007323).
pub const GENUS_COUNTS: [usize; 13] = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592];

/// Every numerical semigroup up to a given genus.
#[derive(Clone, Debug)]
pub struct GenusCatalog {
    pub max_genus: usize,
    /// All semigroups, by genus and then by minimal generators.
    pub semigroups: Vec<NumericalSemigroup>,
}

impl GenusCatalog {
    pub fn with_genus(&self, g: usize) -> impl Iterator<Item = &NumericalSemigroup> {
        self.semigroups.iter().filter(move |s| s.genus() == g)
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.max_genus)
            .map(|g| self.with_genus(g).count())
            .collect()
    }
}

/// Gap set as a bitmask: bit `x` set iff `x` is a gap. Genus at most 12
/// keeps every gap below 24.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Gaps(u64);

impl Gaps {
    fn is_member(self, x: i64) -> bool {
        !(0..64).contains(&x) || self.0 >> x & 1 == 0
    }

    fn frobenius(self) -> i64 {
        63 - self.0.leading_zeros() as i64
    }

    fn multiplicity(self) -> i64 {
        (1..).find(|&x| self.is_member(x)).unwrap()
    }

    /// Not a sum of two nonzero members.
    fn is_irreducible(self, x: i64) -> bool {
        (1..=x / 2).all(|a| !(self.is_member(a) && self.is_member(x - a)))
    }

    /// Children in the genus tree: remove a minimal generator above `F`.
    fn children(self) -> impl Iterator<Item = Gaps> {
        let f = self.frobenius();
        let m = self.multiplicity();
        // Minimal generators never exceed F + m; for N the only one is 1.
        (f + 1..=f + m + 1)
            .filter(move |&x| x >= 1 && self.is_irreducible(x))
            .map(move |x| Gaps(self.0 | 1 << x))
    }

    fn to_list(self) -> Vec<i64> {
        (1..64).filter(|&x| self.0 >> x & 1 == 1).collect()
    }
}

pub fn enumerate_by_genus(max_genus: usize) -> Result<GenusCatalog> {
    if max_genus > MAX_CATALOG_GENUS {
        return Err(Error::GenusTooLarge {
            requested: max_genus,
            max: MAX_CATALOG_GENUS,
        });
    }
    let mut level = vec![Gaps(0)];
    let mut semigroups = Vec::new();
    for g in 0..=max_genus {
        let mut built: Vec<NumericalSemigroup> = level
            .par_iter()
            .map(|gaps| NumericalSemigroup::from_gaps(&gaps.to_list()))
            .collect::<Result<_>>()?;
        built.sort();
        semigroups.extend(built);
        if g < max_genus {
            level = level.iter().flat_map(|gaps| gaps.children()).collect();
        }
    }
    Ok(GenusCatalog {
        max_genus,
        semigroups,
    })
}

/// `PF(S)` from the definition: gaps `x` with `x + s ∈ S` for every nonzero
/// `s ∈ S`.
pub fn pf_bruteforce(s: &NumericalSemigroup) -> Result<Vec<i64>> {
    if s.is_whole() {
        return Err(Error::WholeMonoid);
    }
    let f = s.frobenius();
    let nonzero: Vec<i64> = (1..=f).filter(|&x| s.contains(x)).collect();
    Ok((1..=f)
        .filter(|&x| !s.contains(x) && nonzero.iter().all(|&e| s.contains(x + e)))
        .collect())
}

/// Nonzero elements that are not a sum of two nonzero elements.
pub fn minimal_generators_bruteforce(s: &NumericalSemigroup) -> Vec<i64> {
    let limit = s.frobenius() + s.multiplicity() + 1;
    (1..=limit)
        .filter(|&x| s.contains(x))
        .filter(|&x| (1..=x / 2).all(|a| !(s.contains(a) && s.contains(x - a))))
        .collect()
}

/// Every `Δ` with `S ⊆ Δ ⊆ S ∪ PF(S)` that is closed under addition, found
/// by testing all subsets of the brute-force `PF(S)`. Sorted by minimal
/// generators.
pub fn extensions_bruteforce(s: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    let pf = pf_bruteforce(s)?;
    let t = pf.len();
    if t > crate::extensions::MAX_TYPE {
        return Err(Error::TypeTooLarge(t));
    }
    let f = s.frobenius();
    let gaps = s.gaps();
    let mut out = Vec::new();
    for mask in 0u32..1 << t {
        let added: HashSet<i64> = (0..t)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pf[i])
            .collect();
        let in_delta = |x: i64| x > f || s.contains(x) || added.contains(&x);
        let small: Vec<i64> = (1..=f).filter(|&x| in_delta(x)).collect();
        let closed = small
            .iter()
            .all(|&a| small.iter().all(|&b| a + b > f || in_delta(a + b)));
        if closed {
            let remaining: Vec<i64> = gaps
                .iter()
                .copied()
                .filter(|x| !added.contains(x))
                .collect();
            out.push(NumericalSemigroup::from_gaps(&remaining)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Length of a shortest i-chain from `S` to `N`, by breadth-first search over
/// proper ideal extensions.
pub fn min_ichain_bfs(s: &NumericalSemigroup) -> Result<usize> {
    if s.genus() > MAX_BFS_GENUS {
        return Err(Error::GenusTooLarge {
            requested: s.genus(),
            max: MAX_BFS_GENUS,
        });
    }
    let mut seen: HashSet<NumericalSemigroup> = HashSet::from([s.clone()]);
    let mut queue = VecDeque::from([(s.clone(), 0usize)]);
    while let Some((current, dist)) = queue.pop_front() {
        if current.is_whole() {
            return Ok(dist);
        }
        for delta in extensions_bruteforce(&current)? {
            if delta != current && seen.insert(delta.clone()) {
                queue.push_back((delta, dist + 1));
            }
        }
    }
    unreachable!("N is an ideal extension target of every ordinary semigroup")
}

/// The families of checks run by [`verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Pseudo-Frobenius numbers, Apéry sets and minimal generators.
    Pf,
    /// Ideal extensions against the subset filter.
    Ext,
    /// Complexity against BFS, the Frobenius bounds and the γ chain.
    Complexity,
    /// `G(m)` levels against the catalog.
    Tree,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Pf, Check::Ext, Check::Complexity, Check::Tree];

    pub fn name(self) -> &'static str {
        match self {
            Check::Pf => "pf",
            Check::Ext => "ext",
            Check::Complexity => "complexity",
            Check::Tree => "tree",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// A disagreement between an algorithm and its oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub check: Check,
    /// The offending semigroup, or the `(m, c)` class for tree checks.
    pub subject: String,
    pub detail: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.check, self.subject, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_genus: usize,
    /// `(check, number of cases)` in the order the checks were run.
    pub cases: Vec<(Check, usize)>,
}

#[derive(Debug)]
pub enum VerifyError {
    Setup(Error),
    Discrepancy(Discrepancy),
}

impl From<Error> for VerifyError {
    fn from(e: Error) -> Self {
        VerifyError::Setup(e)
    }
}

fn mismatch(check: Check, s: &NumericalSemigroup, detail: String) -> Discrepancy {
    Discrepancy {
        check,
        subject: s.to_string(),
        detail,
    }
}

fn check_pf(s: &NumericalSemigroup) -> Option<Discrepancy> {
    let brute = minimal_generators_bruteforce(s);
    if brute != s.generators() {
        return Some(mismatch(
            Check::Pf,
            s,
            format!("msg {:?}, brute force {:?}", s.generators(), brute),
        ));
    }
    if s.is_whole() {
        return None;
    }
    let fast = s.pseudo_frobenius().ok()?;
    let brute = pf_bruteforce(s).ok()?;
    if fast != brute {
        return Some(mismatch(
            Check::Pf,
            s,
            format!("PF {fast:?}, brute force {brute:?}"),
        ));
    }
    if fast.last() != Some(&s.frobenius()) {
        return Some(mismatch(
            Check::Pf,
            s,
            format!("max PF {:?} != F", fast.last()),
        ));
    }
    let m = s.multiplicity();
    let ap = s.apery_set(m).ok()?;
    let valid = ap
        .elements
        .iter()
        .enumerate()
        .all(|(i, &w)| w.rem_euclid(m) == i as i64 && s.contains(w) && !s.contains(w - m));
    if !valid {
        return Some(mismatch(
            Check::Pf,
            s,
            format!("bad Apéry set {:?}", ap.elements),
        ));
    }
    // S ∪ PF(S) is closed under addition.
    let union = |x: i64| s.contains(x) || fast.contains(&x);
    let closed = (1..=s.frobenius())
        .all(|a| (1..=s.frobenius()).all(|b| !(union(a) && union(b)) || union(a + b)));
    if !closed {
        return Some(mismatch(Check::Pf, s, "S ∪ PF(S) is not closed".into()));
    }
    None
}

fn check_ext(s: &NumericalSemigroup) -> Option<Discrepancy> {
    if s.is_whole() {
        return None;
    }
    let mut fast = ideal_extensions(s).ok()?;
    fast.sort();
    let brute = extensions_bruteforce(s).ok()?;
    if fast != brute {
        let show = |v: &[NumericalSemigroup]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>();
        return Some(mismatch(
            Check::Ext,
            s,
            format!(
                "extensions {:?}, brute force {:?}",
                show(&fast),
                show(&brute)
            ),
        ));
    }
    None
}

fn check_complexity(s: &NumericalSemigroup) -> Option<Discrepancy> {
    let c = complexity(s);
    let gamma_len = mu(ThetaMap::Gamma, s);
    if gamma_len != c {
        return Some(mismatch(
            Check::Complexity,
            s,
            format!("C = {c}, μ(γ) = {gamma_len}"),
        ));
    }
    if !s.is_whole() {
        let (f, m, k) = (s.frobenius(), s.multiplicity(), c as i64);
        if !((k - 1) * m < f && f < k * m) {
            return Some(mismatch(
                Check::Complexity,
                s,
                format!("C = {c} violates (C-1)m < F < Cm"),
            ));
        }
    }
    if s.genus() <= MAX_BFS_GENUS {
        let bfs = min_ichain_bfs(s).ok()?;
        if bfs != c {
            return Some(mismatch(
                Check::Complexity,
                s,
                format!("C = {c}, shortest i-chain {bfs}"),
            ));
        }
    }
    None
}

/// Compares `G(m)` levels with the catalog for every class `(m, c)` that can
/// hold a semigroup of genus at most `max_genus`.
fn check_tree(catalog: &GenusCatalog) -> std::result::Result<usize, VerifyError> {
    let g = catalog.max_genus as i64;
    let mut by_class: HashMap<(i64, usize), Vec<NumericalSemigroup>> = HashMap::new();
    for s in catalog.semigroups.iter().filter(|s| !s.is_whole()) {
        by_class
            .entry((s.multiplicity(), complexity(s)))
            .or_default()
            .push(s.clone());
    }
    let mut classes = Vec::new();
    for m in 2..=g + 1 {
        // The smallest genus in class (m, c) is at least ((c-1)m + 2) / 2.
        for c in 1.. {
            if ((c as i64 - 1) * m + 2) / 2 > g {
                break;
            }
            classes.push((m, c));
        }
    }
    for &(m, c) in &classes {
        let mut from_tree: Vec<NumericalSemigroup> = genealogy::enumerate(m, c)?
            .into_iter()
            .filter(|s| s.genus() <= catalog.max_genus)
            .collect();
        from_tree.sort();
        let mut expected = by_class.remove(&(m, c)).unwrap_or_default();
        expected.sort();
        if from_tree != expected {
            let missing: Vec<String> = expected
                .iter()
                .filter(|s| !from_tree.contains(s))
                .map(|s| s.to_string())
                .collect();
            let extra: Vec<String> = from_tree
                .iter()
                .filter(|s| !expected.contains(s))
                .map(|s| s.to_string())
                .collect();
            return Err(VerifyError::Discrepancy(Discrepancy {
                check: Check::Tree,
                subject: format!("m = {m}, c = {c}"),
                detail: format!("missing from G(m): {missing:?}; unexpected: {extra:?}"),
            }));
        }
    }
    if let Some(((m, c), _)) = by_class.into_iter().next() {
        return Err(VerifyError::Discrepancy(Discrepancy {
            check: Check::Tree,
            subject: format!("m = {m}, c = {c}"),
            detail: "class present in the catalog was never enumerated".into(),
        }));
    }
    Ok(classes.len())
}

/// Runs the requested checks over every semigroup of genus at most
/// `max_genus`. The first discrepancy found in catalog order (smallest genus
/// first) is returned.
pub fn verify(
    max_genus: usize,
    checks: &[Check],
) -> std::result::Result<VerifyReport, VerifyError> {
    let catalog = enumerate_by_genus(max_genus)?;
    let counts = catalog.counts();
    if counts[..] != GENUS_COUNTS[..=max_genus] {
        return Err(VerifyError::Discrepancy(Discrepancy {
            check: Check::Tree,
            subject: format!("genus <= {max_genus}"),
            detail: format!(
                "catalog counts {counts:?}, expected {:?}",
                &GENUS_COUNTS[..=max_genus]
            ),
        }));
    }
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let mut cases = Vec::new();
    for check in checks {
        let per_semigroup: Option<fn(&NumericalSemigroup) -> Option<Discrepancy>> = match check {
            Check::Pf => Some(check_pf),
            Check::Ext => Some(check_ext),
            Check::Complexity => Some(check_complexity),
            Check::Tree => None,
        };
        let n = match per_semigroup {
            Some(f) => {
                if let Some(d) = catalog.semigroups.par_iter().find_map_first(f) {
                    return Err(VerifyError::Discrepancy(d));
                }
                catalog.semigroups.len()
            }
            None => check_tree(&catalog)?,
        };
        cases.push((check, n));
    }
    Ok(VerifyReport { max_genus, cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn discrepancy_report() {
        let d = Discrepancy {
            check: Check::Ext,
            subject: "<4,6,9,11>".into(),
            detail: "7 extensions, oracle found 8".into(),
        };
        assert_eq!(d.to_string(), "[ext] <4,6,9,11>: 7 extensions, oracle found 8");
        assert_eq!("tree".parse::<Check>().unwrap(), Check::Tree);
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn small_catalogs() {
        assert_eq!(enumerate_by_genus(0).unwrap().semigroups, vec![ns(&[1])]);
        let c2 = enumerate_by_genus(2).unwrap();
        assert_eq!(
            c2.with_genus(2).cloned().collect::<Vec<_>>(),
            vec![ns(&[2, 5]), ns(&[3, 4, 5])]
        );
        assert_eq!(enumerate_by_genus(4).unwrap().with_genus(4).count(), 7);
        assert!(matches!(
            enumerate_by_genus(13),
            Err(Error::GenusTooLarge {
                requested: 13,
                max: 12
            })
        ));
    }

    #[test]
    fn catalog_counts() {
        let catalog = enumerate_by_genus(9).unwrap();
        assert_eq!(catalog.counts(), GENUS_COUNTS[..=9]);
        let unique: HashSet<_> = catalog.semigroups.iter().collect();
        assert_eq!(unique.len(), catalog.semigroups.len());
    }

    #[test]
    fn pf_oracle_examples() {
        assert_eq!(pf_bruteforce(&ns(&[5, 6, 8, 9])).unwrap(), vec![3, 4, 7]);
        assert_eq!(pf_bruteforce(&ns(&[5, 7])).unwrap(), vec![23]);
        for m in 2..7 {
            let o = NumericalSemigroup::ordinary(m).unwrap();
            assert_eq!(pf_bruteforce(&o).unwrap(), (1..m).collect::<Vec<_>>());
        }
        assert_eq!(pf_bruteforce(&ns(&[1])), Err(Error::WholeMonoid));
    }

    #[test]
    fn minimal_generators_oracle() {
        assert_eq!(
            minimal_generators_bruteforce(&ns(&[5, 6, 8, 9, 10, 11, 12])),
            vec![5, 6, 8, 9]
        );
        assert_eq!(minimal_generators_bruteforce(&ns(&[1])), vec![1]);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(min_ichain_bfs(&ns(&[4, 6, 9, 11])).unwrap(), 2);
        assert_eq!(min_ichain_bfs(&ns(&[1])).unwrap(), 0);
        assert_eq!(min_ichain_bfs(&ns(&[3, 7, 8])).unwrap(), 2);
        assert!(matches!(
            min_ichain_bfs(&ns(&[5, 7])),
            Err(Error::GenusTooLarge { requested: 12, .. })
        ));
    }

    #[test]
    fn extension_oracle_example() {
        let brute = extensions_bruteforce(&ns(&[5, 6, 8, 9])).unwrap();
        assert_eq!(brute.len(), 7);
        assert_eq!(extensions_bruteforce(&ns(&[4, 6, 9, 11])).unwrap().len(), 7);
    }

    #[test]
    fn verify_small() {
        let report = verify(6, &Check::ALL).unwrap();
        assert_eq!(report.max_genus, 6);
        assert_eq!(report.cases.len(), 4);
        assert_eq!(report.cases[0], (Check::Pf, 50));
    }

    #[test]
    fn check_names() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }
}
