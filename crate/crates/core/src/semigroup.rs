//! Canonical representation of numerical semigroups and the classical
//! invariants: membership, multiplicity, Frobenius number, genus, Apéry
//! sets, pseudo-Frobenius numbers and type.
//!
//! A semigroup is stored through its Apéry set with respect to the
//! multiplicity `m`: entry `i` is the least element congruent to `i` mod `m`,
//! so `x` is a member iff `x >= apery[x mod m]`. Every other invariant is
//! derived from that table once at construction.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest Frobenius number we accept.
pub const MAX_FROBENIUS: i64 = 1 << 40;

#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
    genus: usize,
}

/// `Ap(S, n)`: the least element of `S` in each residue class modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    pub modulus: i64,
    /// `elements[i]` is the least element of `S` congruent to `i` mod `modulus`.
    pub elements: Vec<i64>,
}

impl AperySet {
    /// Elements in ascending order.
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    /// The whole monoid `N = <1>`.
    pub fn whole() -> Self {
        Self::from_apery(vec![0])
    }

    /// The ordinary semigroup `{0, m, ->}`.
    pub fn ordinary(m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::NonPositiveGenerator(m));
        }
        Self::from_generators(&(m..2 * m).collect::<Vec<_>>())
    }

    /// The semigroup generated by `gens`. The input need not be minimal.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            let mut gens = gens.to_vec();
            gens.sort_unstable();
            gens.dedup();
            return Err(Error::GcdNotOne { gens, gcd: d });
        }

        let m = *gens.iter().min().unwrap();
        let mut steps: Vec<i64> = gens.iter().copied().filter(|g| g % m != 0).collect();
        steps.sort_unstable();
        steps.dedup();

        // Shortest paths on the residues mod m; the distance to residue i is
        // the least element of S congruent to i.
        let mut apery = vec![i64::MAX; m as usize];
        apery[0] = 0;
        let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > apery[r] {
                continue;
            }
            for &g in &steps {
                let nd = d.checked_add(g).ok_or(Error::FrobeniusTooLarge)?;
                if nd > MAX_FROBENIUS + m {
                    return Err(Error::FrobeniusTooLarge);
                }
                let nr = (r + (g % m) as usize) % m as usize;
                if nd < apery[nr] {
                    apery[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        debug_assert!(apery.iter().all(|&w| w != i64::MAX));
        Ok(Self::from_apery(apery))
    }

    /// The semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        if let Some(&g) = gaps.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGap(g));
        }
        let set: BTreeSet<i64> = gaps.iter().copied().collect();
        let Some(&max_gap) = set.last() else {
            return Ok(Self::whole());
        };
        if max_gap > MAX_FROBENIUS {
            return Err(Error::FrobeniusTooLarge);
        }
        let members: Vec<i64> = (1..=max_gap).filter(|x| !set.contains(x)).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                if a + b > max_gap {
                    break;
                }
                if set.contains(&(a + b)) {
                    return Err(Error::NotASemigroup { a, b });
                }
            }
        }
        Ok(Self::from_predicate(max_gap, |x| !set.contains(&x)))
    }

    /// Builds a semigroup from a membership test. Every `x > bound` must be a
    /// member and the predicate must describe an additively closed set; this
    /// is not checked.
    pub(crate) fn from_predicate(bound: i64, member: impl Fn(i64) -> bool) -> Self {
        let m = (1..=bound + 1).find(|&x| member(x)).unwrap();
        let apery = (0..m)
            .map(|r| {
                let mut x = r;
                while !member(x) {
                    x += m;
                }
                x
            })
            .collect();
        Self::from_apery(apery)
    }

    fn from_apery(apery: Vec<i64>) -> Self {
        let m = apery.len() as i64;
        let frobenius = apery.iter().max().unwrap() - m;
        let genus = apery.iter().map(|&w| (w / m) as usize).sum();
        let member = |x: i64| x >= 0 && x >= apery[(x % m) as usize];
        // A nonzero Apéry element is a minimal generator iff no other nonzero
        // Apéry element lies below it in the order <=_S.
        let mut generators = vec![m];
        for &w in &apery[1..] {
            let decomposable = apery[1..].iter().any(|&v| v != w && member(w - v));
            if !decomposable {
                generators.push(w);
            }
        }
        generators.sort_unstable();
        Self {
            generators,
            apery,
            frobenius,
            genus,
        }
    }

    /// Minimal generating set, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.apery.len() as i64
    }

    /// Largest gap; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn is_whole(&self) -> bool {
        self.apery.len() == 1
    }

    /// `{0, m, ->}` with `m >= 2`.
    pub fn is_ordinary(&self) -> bool {
        !self.is_whole() && self.frobenius == self.multiplicity() - 1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let m = self.apery.len() as i64;
        x >= self.apery[(x % m) as usize]
    }

    /// `a <=_S b` iff `b - a` is in `S`.
    pub fn leq(&self, a: i64, b: i64) -> bool {
        self.contains(b - a)
    }

    /// All elements up to `F(S) + 1`, ascending. For `N` this is `[0, 1]`.
    pub fn small_elements(&self) -> Vec<i64> {
        if self.is_whole() {
            return vec![0, 1];
        }
        (0..=self.frobenius + 1)
            .filter(|&x| self.contains(x))
            .collect()
    }

    /// Gaps in ascending order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    pub fn apery_set(&self, n: i64) -> Result<AperySet> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        let elements = (0..n)
            .map(|r| {
                let mut x = r;
                while !self.contains(x) {
                    x += n;
                }
                x
            })
            .collect();
        Ok(AperySet {
            modulus: n,
            elements,
        })
    }

    /// `PF(S)`, computed from the maximal elements of `Ap(S, m)` under `<=_S`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        if self.is_whole() {
            return Err(Error::WholeMonoid);
        }
        let m = self.multiplicity();
        let mut pf: Vec<i64> = self
            .apery
            .iter()
            .filter(|&&w| !self.apery.iter().any(|&v| v != w && self.leq(w, v)))
            .map(|&w| w - m)
            .collect();
        pf.sort_unstable();
        Ok(pf)
    }

    /// `t(S) = |PF(S)|`.
    pub fn type_of(&self) -> Result<usize> {
        self.pseudo_frobenius().map(|pf| pf.len())
    }

    /// The semigroup generated by `S` together with `extra`. When `extra` is
    /// an i(S)-pertinent set this is exactly `S ∪ extra`.
    pub fn adjoin(&self, extra: &[i64]) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Self::from_generators(&gens)
    }

    /// `S \ removed`, where every removed element is a minimal generator.
    pub fn remove_generators(&self, removed: &[i64]) -> Result<Self> {
        if let Some(&x) = removed.iter().find(|x| !self.generators.contains(x)) {
            return Err(Error::NotAMember(x));
        }
        if self.generators.len() == removed.len() {
            // Removing every generator of N would leave {0}.
            return Err(Error::NotAMember(self.generators[0]));
        }
        let bound = removed.iter().copied().fold(self.frobenius, i64::max);
        let s = Self::from_predicate(bound.max(0), |x| self.contains(x) && !removed.contains(&x));
        debug_assert!(s.gaps().len() == self.genus + removed.len());
        Ok(s)
    }

    /// Gap-style list `[ 3, 5 ]` as printed by GAP.
    pub fn gap_style(&self) -> String {
        format_gap_list(&self.generators)
    }

    /// Compact list `[3,5]`.
    pub fn bracket_style(&self) -> String {
        format_bracket_list(&self.generators)
    }
}

pub fn format_gap_list(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(i64::to_string).collect();
    if inner.is_empty() {
        "[ ]".to_string()
    } else {
        format!("[ {} ]", inner.join(", "))
    }
}

pub fn format_bracket_list(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("[{}]", inner.join(","))
}

/// Formats a set as `{7,8}`.
pub fn format_set(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the minimal generating sets.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators.cmp(&other.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.generators.iter().map(i64::to_string).collect();
        write!(f, "<{}>", inner.join(","))
    }
}

/// Parses a comma separated integer list, optionally wrapped in `<>` or `[]`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let t = s.trim();
    let t = match (t.chars().next(), t.chars().last()) {
        (Some('<'), Some('>')) | (Some('['), Some(']')) | (Some('{'), Some('}')) => {
            &t[1..t.len() - 1]
        }
        _ => t,
    };
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<i64>()
                .map_err(|_| Error::Parse(format!("{part:?} is not an integer in {s:?}")))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = parse_int_list(s)?;
        if gens.is_empty() {
            return Err(Error::Parse(format!("no generators in {s:?}")));
        }
        Self::from_generators(&gens)
    }
}
