//! Sub-exponential r-approximation.
//!
//! The vertex set is cut into `l = max(1, ⌊r/2⌋)` blocks of nearly equal
//! size. For each block `V_i` two families of candidates are produced:
//!
//! 1. every maximal independent set of `G[V_i]`, greedily extended to a
//!    maximal independent set of `G`;
//! 2. every nonempty `S ⊆ V_i` together with every guess of one private
//!    neighbor per member of `S`, extended by [`extend_supported`].
//!
//! Some optimal solution `D* = S* ∪ I*` puts at least `2|D*|/r` members in
//! some block, and half of those are in `S*` or in `I*`, so one of the two
//! families reaches `|D*|/r`. Running time is `n^{O(n/r)}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::domination::{check_minimal, UpperDomSolution};
use crate::graph::Graph;
use crate::mis::{for_each_maximal_independent_set, greedy_extend_independent};

/// Blocks above this size would need more than `2^63` subsets.
pub const MAX_BLOCK: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ApproxError {
    InvalidRatio(f64),
    BlockTooLarge { size: usize, max: usize },
}

impl fmt::Display for ApproxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApproxError::InvalidRatio(r) => write!(f, "approximation ratio must exceed 1, got {r}"),
            ApproxError::BlockTooLarge { size, max } => {
                write!(f, "block of {size} vertices exceeds the supported {max}")
            }
        }
    }
}

impl core::error::Error for ApproxError {}

/// Partition of the vertices into `l` blocks whose sizes differ by at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionScheme {
    pub blocks: Vec<Vec<usize>>,
    pub seed: u64,
}

impl PartitionScheme {
    /// `max(1, ⌊r/2⌋)`, capped at `n` so no block is empty.
    pub fn block_count(n: usize, ratio: f64) -> usize {
        // the cast truncates and saturates, so it is `floor` for r > 0
        ((ratio / 2.0) as usize).max(1).min(n.max(1))
    }

    /// Contiguous blocks of the vertex order, which is shuffled with `seed`
    /// first when `shuffle` is set. Each block is sorted.
    pub fn new(n: usize, ratio: f64, seed: u64, shuffle: bool) -> Self {
        let l = Self::block_count(n, ratio);
        let mut order: Vec<usize> = (0..n).collect();
        if shuffle {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        let (base, extra) = (n / l, n % l);
        let mut blocks = Vec::with_capacity(l);
        let mut start = 0;
        for b in 0..l {
            let len = base + usize::from(b < extra);
            let mut block = order[start..start + len].to_vec();
            block.sort_unstable();
            blocks.push(block);
            start += len;
        }
        PartitionScheme { blocks, seed }
    }
}

/// A candidate supported set `S` with one guessed private neighbor per
/// member, plus the neighborhood classes derived from them.
///
/// The classes only contain vertices outside `S ∪ P`:
/// `N_SP` sees both `S` and `P`, `N_S` only `S`, `N_P` only `P`;
/// `V_SP` sees neither and is outside `S ∪ P`; `Q_P ⊆ N_P` has no neighbor
/// in `V_SP`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessContext {
    pub supported: Vec<usize>,
    /// `privates[i]` is the guessed private neighbor of `supported[i]`.
    pub privates: Vec<usize>,
    pub n_sp: Vec<usize>,
    pub n_s: Vec<usize>,
    pub n_p: Vec<usize>,
    pub v_sp: Vec<usize>,
    pub q_p: Vec<usize>,
}

impl GuessContext {
    pub fn new(g: &Graph, supported: Vec<usize>, privates: Vec<usize>) -> Self {
        let n = g.n();
        let mut in_s = vec![false; n];
        let mut in_p = vec![false; n];
        let mut near_s = vec![false; n];
        let mut near_p = vec![false; n];
        for &u in &supported {
            in_s[u] = true;
            for &w in g.neighbors(u) {
                near_s[w] = true;
            }
        }
        for &p in &privates {
            in_p[p] = true;
            for &w in g.neighbors(p) {
                near_p[w] = true;
            }
        }
        let outside = |v: usize| !in_s[v] && !in_p[v];
        let n_sp: Vec<usize> = (0..n).filter(|&v| outside(v) && near_s[v] && near_p[v]).collect();
        let n_s: Vec<usize> = (0..n).filter(|&v| outside(v) && near_s[v] && !near_p[v]).collect();
        let n_p: Vec<usize> = (0..n).filter(|&v| outside(v) && near_p[v] && !near_s[v]).collect();
        let v_sp: Vec<usize> = (0..n).filter(|&v| outside(v) && !near_s[v] && !near_p[v]).collect();
        let mut in_vsp = vec![false; n];
        for &v in &v_sp {
            in_vsp[v] = true;
        }
        let q_p = n_p
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().all(|&w| !in_vsp[w]))
            .collect();
        GuessContext {
            supported,
            privates,
            n_sp,
            n_s,
            n_p,
            v_sp,
            q_p,
        }
    }
}

/// Private-neighbor candidates of every member of `s`: neighbors outside `s`
/// that no other member of `s` dominates. Candidate lists of different
/// members are disjoint, so every choice is injective.
pub fn private_candidates(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &u in s {
        in_s[u] = true;
    }
    let mut s_degree = vec![0u32; n];
    for &u in s {
        for &w in g.neighbors(u) {
            s_degree[w] += 1;
        }
    }
    s.iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&w| !in_s[w] && s_degree[w] == 1)
                .collect()
        })
        .collect()
}

/// Calls `visit` with a [`GuessContext`] for every way of picking one
/// private candidate per member of `s` (odometer order, first member slowest).
/// Nothing is visited if some member has no candidate.
pub fn guess_private_neighbors<F: FnMut(GuessContext)>(g: &Graph, s: &[usize], mut visit: F) {
    let candidates = private_candidates(g, s);
    if candidates.iter().any(Vec::is_empty) {
        return;
    }
    let mut choice = vec![0usize; s.len()];
    loop {
        let privates = choice.iter().zip(&candidates).map(|(&c, list)| list[c]).collect();
        visit(GuessContext::new(g, s.to_vec(), privates));
        // advance the odometer
        let mut i = s.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Greedily drops members of `set` (ascending) that no longer dominate some
/// vertex of `target` alone.
fn prune_without_private(g: &Graph, set: &mut Vec<usize>, target: &[bool]) {
    let mut member = vec![false; g.n()];
    let mut count = vec![0u32; g.n()];
    for &u in set.iter() {
        member[u] = true;
        for &w in g.neighbors(u) {
            count[w] += 1;
        }
    }
    for &u in set.iter() {
        let private = g.neighbors(u).iter().any(|&w| target[w] && count[w] == 1);
        if !private {
            member[u] = false;
            for &w in g.neighbors(u) {
                count[w] -= 1;
            }
        }
    }
    set.retain(|&u| member[u]);
}

/// Extends the supported set of `ctx` to a whole solution:
///
/// 1. `T₁ = N(Q_P) ∩ N_S`, pruned to members with a private neighbor in `N_P`;
/// 2. `T₂ = N(N_P \ N(T₁)) ∩ V_SP`, pruned to members with a private
///    neighbor in `N_P \ N(T₁)`;
/// 3. undominated vertices of `V_SP \ N[T₂]` are added in index order.
///
/// Returns `None` if the result is not a minimal dominating set.
pub fn extend_supported(g: &Graph, ctx: &GuessContext) -> Option<UpperDomSolution> {
    let n = g.n();
    let mask = |list: &[usize]| {
        let mut m = vec![false; n];
        for &v in list {
            m[v] = true;
        }
        m
    };
    let in_ns = mask(&ctx.n_s);
    let in_np = mask(&ctx.n_p);
    let in_qp = mask(&ctx.q_p);
    let in_vsp = mask(&ctx.v_sp);

    let mut t1: Vec<usize> = ctx
        .n_s
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().any(|&w| in_qp[w]))
        .collect();
    debug_assert!(t1.iter().all(|&v| in_ns[v]));
    prune_without_private(g, &mut t1, &in_np);

    let mut near_t1 = vec![false; n];
    for &u in &t1 {
        for &w in g.neighbors(u) {
            near_t1[w] = true;
        }
    }
    let remaining: Vec<bool> = (0..n).map(|v| in_np[v] && !near_t1[v]).collect();
    let mut t2: Vec<usize> = ctx
        .v_sp
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().any(|&w| remaining[w]))
        .collect();
    prune_without_private(g, &mut t2, &remaining);

    let mut member = vec![false; n];
    let mut dominated = vec![false; n];
    let mut near_t2 = vec![false; n];
    let add = |v: usize, member: &mut Vec<bool>, dominated: &mut Vec<bool>| {
        member[v] = true;
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    };
    for &v in ctx.supported.iter().chain(&t1) {
        add(v, &mut member, &mut dominated);
    }
    for &v in &t2 {
        add(v, &mut member, &mut dominated);
        near_t2[v] = true;
        for &w in g.neighbors(v) {
            near_t2[w] = true;
        }
    }
    for v in (0..n).filter(|&v| in_vsp[v] && !near_t2[v]) {
        if !dominated[v] {
            add(v, &mut member, &mut dominated);
        }
    }
    let set: Vec<usize> = (0..n).filter(|&v| member[v]).collect();
    check_minimal(g, &set).ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApproxOptions {
    /// Shuffle the vertex order with the seed before cutting blocks.
    pub shuffle: bool,
}

impl Default for ApproxOptions {
    fn default() -> Self {
        ApproxOptions { shuffle: true }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ApproxStats {
    pub blocks: usize,
    pub block_sizes: Vec<usize>,
    pub mis_branches: u64,
    /// Nonempty subsets tried, per block.
    pub subset_branches: Vec<u64>,
    pub contexts: u64,
    pub discards: u64,
}

fn better(candidate: &UpperDomSolution, best: &Option<UpperDomSolution>) -> bool {
    match best {
        None => true,
        Some(b) => candidate.size() > b.size() || (candidate.size() == b.size() && candidate.set < b.set),
    }
}

/// r-approximate maximum minimal dominating set; see the module docs.
pub fn approximate_uds(g: &Graph, ratio: f64, seed: u64) -> Result<UpperDomSolution, ApproxError> {
    approximate_uds_with(g, ratio, seed, &ApproxOptions::default()).map(|(s, _)| s)
}

pub fn approximate_uds_with(
    g: &Graph,
    ratio: f64,
    seed: u64,
    opts: &ApproxOptions,
) -> Result<(UpperDomSolution, ApproxStats), ApproxError> {
    if !(ratio > 1.0) {
        return Err(ApproxError::InvalidRatio(ratio));
    }
    let mut stats = ApproxStats::default();
    if g.is_empty() {
        return Ok((UpperDomSolution::default(), stats));
    }
    let partition = PartitionScheme::new(g.n(), ratio, seed, opts.shuffle);
    if let Some(size) = partition.blocks.iter().map(Vec::len).find(|&s| s > MAX_BLOCK) {
        return Err(ApproxError::BlockTooLarge { size, max: MAX_BLOCK });
    }
    stats.blocks = partition.blocks.len();
    stats.block_sizes = partition.blocks.iter().map(Vec::len).collect();

    let mut best: Option<UpperDomSolution> = None;
    for block in &partition.blocks {
        let sub = g.induced(block);
        for_each_maximal_independent_set(&sub, |local| {
            stats.mis_branches += 1;
            let seed_set: Vec<usize> = local.iter().map(|&i| block[i]).collect();
            let extended = greedy_extend_independent(g, &seed_set).expect("block MIS is independent in G");
            let solution = check_minimal(g, &extended).expect("maximal independent sets are minimal dominating");
            if better(&solution, &best) {
                best = Some(solution);
            }
        });

        let mut subsets = 0u64;
        for mask in 1u64..(1u64 << block.len()) {
            subsets += 1;
            let s: Vec<usize> = (0..block.len()).filter(|&i| mask >> i & 1 == 1).map(|i| block[i]).collect();
            guess_private_neighbors(g, &s, |ctx| {
                stats.contexts += 1;
                match extend_supported(g, &ctx) {
                    Some(solution) => {
                        if better(&solution, &best) {
                            best = Some(solution);
                        }
                    }
                    None => stats.discards += 1,
                }
            });
        }
        stats.subset_branches.push(subsets);
    }
    Ok((best.expect("the independent set branch always yields a solution"), stats))
}
