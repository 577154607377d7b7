//! Maximal independent sets.
//!
//! Enumeration runs Bron–Kerbosch with Tomita pivoting on the complement
//! graph, so the number of recursive calls stays within the Moon–Moser bound
//! of `3^{n/3}` leaves.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// The input to [`greedy_extend_independent`] had an edge inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotIndependent(pub usize, pub usize);

impl fmt::Display for NotIndependent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {} and {} are adjacent", self.0, self.1)
    }
}

impl core::error::Error for NotIndependent {}

/// Calls `visit` once for every maximal independent set of `g`, each given as
/// a sorted slice. The order is deterministic.
pub fn for_each_maximal_independent_set<F: FnMut(&[usize])>(g: &Graph, mut visit: F) {
    let n = g.n();
    if n == 0 {
        visit(&[]);
        return;
    }
    let closed: Vec<FixedBitSet> = g
        .vertices()
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(v);
            for &w in g.neighbors(v) {
                s.insert(w);
            }
            s
        })
        .collect();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let excluded = FixedBitSet::with_capacity(n);
    let mut current = Vec::new();
    expand(&closed, &mut current, candidates, excluded, &mut visit);
}

fn expand<F: FnMut(&[usize])>(
    closed: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    visit: &mut F,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            let mut set = current.clone();
            set.sort_unstable();
            visit(&set);
        }
        return;
    }
    // pivot: the vertex whose closed neighborhood covers the fewest candidates
    // leaves the fewest branches
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .min_by_key(|&u| candidates.intersection(&closed[u]).count())
        .expect("candidates are nonempty");
    let branch: Vec<usize> = candidates.intersection(&closed[pivot]).collect();
    for v in branch {
        let mut next_candidates = candidates.clone();
        next_candidates.difference_with(&closed[v]);
        let mut next_excluded = excluded.clone();
        next_excluded.difference_with(&closed[v]);
        current.push(v);
        expand(closed, current, next_candidates, next_excluded, visit);
        current.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}

/// Every maximal independent set of `g`, each sorted, in enumeration order.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, |s| out.push(s.to_vec()));
    out
}

/// Extends the independent set `seed` to a maximal independent set by adding
/// undominated vertices in ascending index order.
pub fn greedy_extend_independent(g: &Graph, seed: &[usize]) -> Result<Vec<usize>, NotIndependent> {
    let mut member = vec![false; g.n()];
    for &v in seed {
        member[v] = true;
    }
    for &v in seed {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| member[w]) {
            return Err(NotIndependent(v.min(w), v.max(w)));
        }
    }
    let mut dominated = vec![false; g.n()];
    for v in g.vertices().filter(|&v| member[v]) {
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    }
    for v in g.vertices() {
        if !dominated[v] {
            member[v] = true;
            dominated[v] = true;
            for &w in g.neighbors(v) {
                dominated[w] = true;
            }
        }
    }
    Ok(g.vertices().filter(|&v| member[v]).collect())
}

/// Moon–Moser maximum number of maximal independent sets on `n` vertices.
pub fn moon_moser_bound(n: usize) -> u128 {
    match n {
        0 | 1 => 1,
        _ => match n % 3 {
            0 => 3u128.pow((n / 3) as u32),
            1 => 4 * 3u128.pow(((n - 4) / 3) as u32),
            _ => 2 * 3u128.pow(((n - 2) / 3) as u32),
        },
    }
}
