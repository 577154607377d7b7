//! Exhaustive solver. Every other solver is tested against this one.

use alloc::vec::Vec;
use core::fmt;

use crate::domination::{check_minimal, UpperDomSolution};
use crate::graph::Graph;

pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Subsets are bitmasks, so no limit can go past this.
pub const HARD_ORACLE_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    LimitExceeded { n: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::LimitExceeded { n, limit } => {
                write!(f, "graph has {n} vertices, oracle limit is {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// A maximum minimal dominating set of `g`, found by trying all `2^n`
/// subsets. Among maximum solutions the lexicographically smallest sorted
/// vertex list wins.
pub fn brute_force_uds(g: &Graph, limit: usize) -> Result<UpperDomSolution, OracleError> {
    let n = g.n();
    let limit = limit.min(HARD_ORACLE_LIMIT);
    if n > limit {
        return Err(OracleError::LimitExceeded { n, limit });
    }
    let best = best_mask(g);
    let set: Vec<usize> = (0..n).filter(|&v| best >> v & 1 == 1).collect();
    Ok(check_minimal(g, &set).expect("oracle picked a non-minimal set"))
}

/// Size of a maximum minimal dominating set, `Γ(g)`.
pub fn upper_domination_number(g: &Graph, limit: usize) -> Result<usize, OracleError> {
    brute_force_uds(g, limit).map(|s| s.size())
}

fn best_mask(g: &Graph) -> u64 {
    let n = g.n();
    let closed: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut best: Option<(u32, u64)> = None;
    for mask in 0..=all {
        let size = mask.count_ones();
        if matches!(best, Some((s, _)) if size < s) {
            continue;
        }
        if !is_minimal_dominating(&closed, mask, all) {
            continue;
        }
        best = match best {
            Some((s, b)) if s == size && !lex_less(mask, b) => Some((s, b)),
            _ => Some((size, mask)),
        };
    }
    best.map_or(0, |(_, m)| m)
}

fn is_minimal_dominating(closed: &[u64], mask: u64, all: u64) -> bool {
    let mut once = 0u64;
    let mut twice = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        twice |= once & closed[v];
        once |= closed[v];
    }
    if once != all {
        return false;
    }
    let exactly_once = once & !twice;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if closed[v] & exactly_once == 0 {
            return false;
        }
    }
    true
}

/// Lexicographic order of the sorted member lists of two equal-size masks.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    // the smallest differing vertex belongs to the lexicographically smaller list
    let v = diff.trailing_zeros();
    a >> v & 1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gamma(g: &Graph) -> usize {
        upper_domination_number(g, DEFAULT_ORACLE_LIMIT).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(gamma(&Graph::complete(3)), 1);
        assert_eq!(gamma(&Graph::empty(5)), 5);
        assert_eq!(gamma(&Graph::path(4)), 2);
        assert_eq!(gamma(&Graph::cycle(5)), 2);
        let star = brute_force_uds(&Graph::star(4), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(star.set, vec![1, 2, 3, 4]);
    }

    #[test]
    fn ties_break_lexicographically() {
        // K3: every singleton is optimal
        let s = brute_force_uds(&Graph::complete(3), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(s.set, vec![0]);
        // P4: {0,2}, {0,3}, {1,2}, {1,3} are all optimal
        let s = brute_force_uds(&Graph::path(4), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(s.set, vec![0, 2]);
    }

    #[test]
    fn lex_order_on_masks() {
        assert!(lex_less(0b0011, 0b0101));
        assert!(lex_less(0b1001, 0b1010));
        assert!(!lex_less(0b0110, 0b0101));
    }

    #[test]
    fn empty_graph() {
        assert_eq!(brute_force_uds(&Graph::empty(0), 20).unwrap().size(), 0);
    }

    #[test]
    fn limit_enforced() {
        assert_eq!(
            brute_force_uds(&Graph::empty(21), DEFAULT_ORACLE_LIMIT),
            Err(OracleError::LimitExceeded { n: 21, limit: 20 })
        );
    }
}
