//! The tree `G(m)` on all numerical semigroups of multiplicity `m`.
//!
//! The root is the ordinary semigroup `{0, m, ->}` and the parent of `S` is
//! `S ∪ γ(S)`. A vertex at depth `d` has complexity `d + 1`, so walking the
//! tree level by level enumerates the semigroups with a given multiplicity
//! and complexity.

use std::fmt::Write;

use rayon::prelude::*;

use crate::complexity::complexity;
use crate::error::{Error, Result};
use crate::semigroup::{format_set, NumericalSemigroup};

/// Default bound on the number of vertices materialized in one level.
pub const DEFAULT_MAX_NODES: usize = 10_000_000;

/// `N(G(m), depth)`: the vertices at a given depth, sorted by minimal
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeLevel {
    pub multiplicity: i64,
    pub depth: usize,
    pub members: Vec<NumericalSemigroup>,
}

/// Minimal generators of `T` above `(floor(F/m) + 1)·m`; removing any
/// nonempty subset of them yields a child.
pub fn removable_generators(t: &NumericalSemigroup) -> Vec<i64> {
    if t.is_whole() {
        return Vec::new();
    }
    let m = t.multiplicity();
    let threshold = (t.frobenius() / m + 1) * m;
    t.generators()
        .iter()
        .copied()
        .filter(|&x| x > threshold)
        .collect()
}

/// Children of `T` paired with the removed set, in bitmask order of the
/// removable generators (so `{4}`, `{5}`, `{4,5}`).
pub fn children_with_labels(t: &NumericalSemigroup) -> Vec<(Vec<i64>, NumericalSemigroup)> {
    let candidates = removable_generators(t);
    let k = candidates.len();
    (1u64..1 << k)
        .map(|mask| {
            let removed: Vec<i64> = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            let child = t
                .remove_generators(&removed)
                .expect("removable generators are minimal generators");
            debug_assert_eq!(child.multiplicity(), t.multiplicity());
            debug_assert_eq!(crate::complexity::gamma(&child), removed);
            (removed, child)
        })
        .collect()
}

/// Children of `T` in `G(m(T))`. Empty for `N` and for vertices without
/// removable generators.
pub fn children(t: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    children_with_labels(t)
        .into_iter()
        .map(|(_, child)| child)
        .collect()
}

fn child_count(t: &NumericalSemigroup) -> u128 {
    (1u128 << removable_generators(t).len()) - 1
}

fn root(m: i64) -> Result<NumericalSemigroup> {
    if m < 2 {
        return Err(Error::InvalidMultiplicity(m));
    }
    NumericalSemigroup::ordinary(m)
}

/// Expands one level into the next, refusing when the result would exceed
/// `max_nodes` vertices.
fn expand(
    parents: &[NumericalSemigroup],
    depth: usize,
    max_nodes: usize,
) -> Result<Vec<NumericalSemigroup>> {
    let projected: u128 = parents.par_iter().map(child_count).sum();
    if projected > max_nodes as u128 {
        return Err(Error::LevelTooLarge {
            depth,
            projected,
            cap: max_nodes,
        });
    }
    let mut next: Vec<NumericalSemigroup> = parents.par_iter().flat_map_iter(children).collect();
    next.par_sort_unstable();
    let before = next.len();
    next.dedup();
    assert_eq!(
        before,
        next.len(),
        "G(m) produced a vertex twice at depth {depth}"
    );
    Ok(next)
}

/// `N(G(m), depth)` with a cap on the size of every materialized level.
pub fn level_with_cap(m: i64, depth: usize, max_nodes: usize) -> Result<TreeLevel> {
    let mut members = vec![root(m)?];
    for d in 1..=depth {
        members = expand(&members, d, max_nodes)?;
        if members.is_empty() {
            break;
        }
    }
    Ok(TreeLevel {
        multiplicity: m,
        depth,
        members,
    })
}

/// `N(G(m), depth)`.
pub fn level(m: i64, depth: usize) -> Result<TreeLevel> {
    level_with_cap(m, depth, DEFAULT_MAX_NODES)
}

/// All semigroups with multiplicity `m` and complexity `c`.
pub fn enumerate_with_cap(m: i64, c: usize, max_nodes: usize) -> Result<Vec<NumericalSemigroup>> {
    if c == 0 {
        return Err(Error::InvalidComplexity(c));
    }
    Ok(level_with_cap(m, c - 1, max_nodes)?.members)
}

pub fn enumerate(m: i64, c: usize) -> Result<Vec<NumericalSemigroup>> {
    enumerate_with_cap(m, c, DEFAULT_MAX_NODES)
}

/// Number of semigroups with multiplicity `m` and complexity `c`. The last
/// level is counted from its parents without being built.
pub fn count_with_cap(m: i64, c: usize, max_nodes: usize) -> Result<u128> {
    match c {
        0 => Err(Error::InvalidComplexity(c)),
        1 => root(m).map(|_| 1),
        _ => {
            let parents = level_with_cap(m, c - 2, max_nodes)?.members;
            Ok(parents.par_iter().map(child_count).sum())
        }
    }
}

pub fn count(m: i64, c: usize) -> Result<u128> {
    count_with_cap(m, c, DEFAULT_MAX_NODES)
}

/// `({m} + S) ∪ {0}`: same multiplicity, Frobenius number raised by `m`,
/// complexity raised by one.
pub fn shift_embed(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if s.is_whole() {
        return Err(Error::WholeMonoid);
    }
    let m = s.multiplicity();
    let shifted = NumericalSemigroup::from_predicate(s.frobenius() + m, |x| {
        x == 0 || s.contains(x - m) && x >= m
    });
    debug_assert_eq!(complexity(&shifted), complexity(s) + 1);
    Ok(shifted)
}

/// Graphviz rendering of `G(m)` down to `max_depth`. Nodes are labelled with
/// the semigroup literal and edges, drawn from child to parent, with the
/// removed set. The root is drawn at the top.
pub fn export_dot(m: i64, max_depth: usize) -> Result<String> {
    export_dot_with_cap(m, max_depth, DEFAULT_MAX_NODES)
}

pub fn export_dot_with_cap(m: i64, max_depth: usize, max_nodes: usize) -> Result<String> {
    let root = root(m)?;
    let mut out = String::new();
    writeln!(out, "digraph G{m} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    writeln!(out, "  n0 [label=\"{root}\"];").unwrap();

    let mut frontier = vec![(0usize, root)];
    let mut next_id = 1usize;
    let mut edges = String::new();
    for depth in 1..=max_depth {
        let projected: u128 = frontier.iter().map(|(_, t)| child_count(t)).sum();
        if projected > max_nodes as u128 {
            return Err(Error::LevelTooLarge {
                depth,
                projected,
                cap: max_nodes,
            });
        }
        let mut next = Vec::new();
        for (parent_id, parent) in &frontier {
            for (removed, child) in children_with_labels(parent) {
                let id = next_id;
                next_id += 1;
                writeln!(out, "  n{id} [label=\"{child}\"];").unwrap();
                writeln!(
                    edges,
                    "  n{id} -> n{parent_id} [label=\"{}\"];",
                    format_set(&removed)
                )
                .unwrap();
                next.push((id, child));
            }
        }
        frontier = next;
    }
    out.push_str(&edges);
    out.push_str("}\n");
    Ok(out)
}
