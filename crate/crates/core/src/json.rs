//! Serializable views used by the command line `--json` output. The shapes
//! are described by `schema/semicomplex.v1.json`.

use serde::{Deserialize, Serialize};

use crate::complexity::{complexity, IChain, ThetaMap};
use crate::semigroup::NumericalSemigroup;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: usize,
    pub multiplicity: i64,
    pub small_elements: Vec<i64>,
    /// `null` for `N`, where pseudo-Frobenius numbers are undefined.
    pub pf: Option<Vec<i64>>,
}

impl From<&NumericalSemigroup> for SemigroupJson {
    fn from(s: &NumericalSemigroup) -> Self {
        Self {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
            small_elements: s.small_elements(),
            pf: s.pseudo_frobenius().ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub version: u32,
    pub theta: ThetaMap,
    pub length: usize,
    pub links: Vec<SemigroupJson>,
}

impl ChainJson {
    pub fn new(theta: ThetaMap, chain: &IChain) -> Self {
        Self {
            version: SCHEMA_VERSION,
            theta,
            length: chain.len(),
            links: chain.links().iter().map(SemigroupJson::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityJson {
    pub version: u32,
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub frobenius: i64,
    pub complexity: usize,
}

impl From<&NumericalSemigroup> for ComplexityJson {
    fn from(s: &NumericalSemigroup) -> Self {
        Self {
            version: SCHEMA_VERSION,
            generators: s.generators().to_vec(),
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius(),
            complexity: complexity(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupListJson {
    pub version: u32,
    pub count: usize,
    pub semigroups: Vec<SemigroupJson>,
}

impl SemigroupListJson {
    pub fn new<'a>(items: impl IntoIterator<Item = &'a NumericalSemigroup>) -> Self {
        let semigroups: Vec<SemigroupJson> = items.into_iter().map(SemigroupJson::from).collect();
        Self {
            version: SCHEMA_VERSION,
            count: semigroups.len(),
            semigroups,
        }
    }
}
