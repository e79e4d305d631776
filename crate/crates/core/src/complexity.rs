//! i-pertinent maps, the i-chains they generate, and the complexity
//! invariant `C(S) = floor(F/m) + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extensions::is_ideal_extension;
use crate::semigroup::NumericalSemigroup;

/// A rule selecting a nonempty i(S)-pertinent set for every `S != N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThetaMap {
    /// All of `PF(S)`.
    Pf,
    /// `{F(S)}`.
    #[serde(rename = "frob")]
    FrobeniusOnly,
    /// `{x in PF(S) : x >= F/2}`.
    #[serde(rename = "upperhalf")]
    UpperHalfPf,
    /// `{x in PF(S) : x > F - m}`.
    #[serde(rename = "above-f-m")]
    AboveFMinusM,
    /// `{x in PF(S) : x > F - g}`.
    #[serde(rename = "above-f-g")]
    AboveFMinusG,
    /// `{min {x in PF(S) : x > F/2}}`.
    #[serde(rename = "min-half")]
    MinAboveHalfF,
    /// Gaps `x` with `floor(F/m)·m <= x <= F`.
    Gamma,
}

impl ThetaMap {
    pub const ALL: [ThetaMap; 7] = [
        ThetaMap::Pf,
        ThetaMap::FrobeniusOnly,
        ThetaMap::UpperHalfPf,
        ThetaMap::AboveFMinusM,
        ThetaMap::AboveFMinusG,
        ThetaMap::MinAboveHalfF,
        ThetaMap::Gamma,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            ThetaMap::Pf => "pf",
            ThetaMap::FrobeniusOnly => "frob",
            ThetaMap::UpperHalfPf => "upperhalf",
            ThetaMap::AboveFMinusM => "above-f-m",
            ThetaMap::AboveFMinusG => "above-f-g",
            ThetaMap::MinAboveHalfF => "min-half",
            ThetaMap::Gamma => "gamma",
        }
    }

    /// The selected set, ascending.
    pub fn apply(self, s: &NumericalSemigroup) -> Result<Vec<i64>> {
        if s.is_whole() {
            return Err(Error::WholeMonoid);
        }
        let f = s.frobenius();
        let m = s.multiplicity();
        let g = s.genus() as i64;
        let select = |keep: &dyn Fn(i64) -> bool| -> Result<Vec<i64>> {
            Ok(s.pseudo_frobenius()?
                .into_iter()
                .filter(|&x| keep(x))
                .collect())
        };
        match self {
            ThetaMap::Pf => s.pseudo_frobenius(),
            ThetaMap::FrobeniusOnly => Ok(vec![f]),
            ThetaMap::UpperHalfPf => select(&|x| 2 * x >= f),
            ThetaMap::AboveFMinusM => select(&|x| x > f - m),
            ThetaMap::AboveFMinusG => select(&|x| x > f - g),
            ThetaMap::MinAboveHalfF => Ok(select(&|x| 2 * x > f)?.into_iter().take(1).collect()),
            ThetaMap::Gamma => Ok(gamma(s)),
        }
    }
}

impl fmt::Display for ThetaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ThetaMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ThetaMap::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theta map {s:?}")))
    }
}

/// `γ(S)`: the gaps in `[floor(F/m)·m, F]`. Empty for `N`.
pub fn gamma(s: &NumericalSemigroup) -> Vec<i64> {
    if s.is_whole() {
        return Vec::new();
    }
    let f = s.frobenius();
    let m = s.multiplicity();
    let lo = f.div_euclid(m) * m;
    (lo..=f).filter(|&x| !s.contains(x)).collect()
}

/// An ascending sequence of semigroups ending at `N` in which each link is an
/// ideal extension of the previous one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IChain {
    links: Vec<NumericalSemigroup>,
}

impl IChain {
    /// Returns `None` unless `links` passes [`validate_chain`].
    pub fn new(links: Vec<NumericalSemigroup>) -> Option<Self> {
        validate_chain(&links).then_some(Self { links })
    }

    pub fn links(&self) -> &[NumericalSemigroup] {
        &self.links
    }

    /// Number of steps, `|links| - 1`.
    pub fn len(&self) -> usize {
        self.links.len() - 1
    }

    /// True for the chain `[N]`.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> &NumericalSemigroup {
        &self.links[0]
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.links.windows(2).all(|w| w[0].genus() > w[1].genus())
    }
}

/// Consecutive links are ideal extensions and the chain ends at `N`.
pub fn validate_chain(links: &[NumericalSemigroup]) -> bool {
    match links.last() {
        Some(last) if last.is_whole() => links.windows(2).all(|w| is_ideal_extension(&w[0], &w[1])),
        _ => false,
    }
}

/// Iterates `S_{n+1} = S_n ∪ θ(S_n)` from `S` until reaching `N`.
pub fn chain(theta: ThetaMap, s: &NumericalSemigroup) -> IChain {
    let mut links = vec![s.clone()];
    // The genus drops at every step.
    for _ in 0..=s.genus() {
        let current = links.last().unwrap();
        if current.is_whole() {
            break;
        }
        let added = theta.apply(current).expect("current link is not N");
        debug_assert!(!added.is_empty(), "{theta} selected nothing on {current}");
        let next = current
            .adjoin(&added)
            .expect("adjoining to a numerical semigroup keeps gcd 1");
        debug_assert_eq!(next.genus() + added.len(), current.genus());
        links.push(next);
    }
    debug_assert!(links.last().unwrap().is_whole());
    IChain { links }
}

/// `μ(θ, S)`: the length of `chain(θ, S)`.
pub fn mu(theta: ThetaMap, s: &NumericalSemigroup) -> usize {
    chain(theta, s).len()
}

/// `C(S) = floor(F(S)/m(S)) + 1`, with `C(N) = 0`.
pub fn complexity(s: &NumericalSemigroup) -> usize {
    if s.is_whole() {
        return 0;
    }
    (s.frobenius() / s.multiplicity()) as usize + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    WholeMonoid,
    /// `{0, m, ->}` with `m >= 2`.
    Ordinary,
    /// `F(S) < 2 m(S)` but not ordinary.
    ElementaryNotOrdinary,
    General,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::WholeMonoid => "whole-monoid",
            Class::Ordinary => "ordinary",
            Class::ElementaryNotOrdinary => "elementary-not-ordinary",
            Class::General => "general",
        })
    }
}

pub fn classify(s: &NumericalSemigroup) -> Class {
    if s.is_whole() {
        Class::WholeMonoid
    } else if s.is_ordinary() {
        Class::Ordinary
    } else if s.frobenius() < 2 * s.multiplicity() {
        Class::ElementaryNotOrdinary
    } else {
        Class::General
    }
}

/// Whether iterating `PF` takes more steps than the complexity.
pub fn pf_chain_exceeds_complexity(s: &NumericalSemigroup) -> bool {
    mu(ThetaMap::Pf, s) > complexity(s)
}
