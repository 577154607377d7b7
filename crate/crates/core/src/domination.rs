//! Domination and minimality.
//!
//! A minimal dominating set `D` splits into `I`, the members with no neighbor
//! in `D` (each is its own private vertex), and `S`, the remaining members,
//! each of which has a private neighbor outside `D` that no other member
//! dominates.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// A minimal dominating set together with its S/I split and a private
/// neighbor for every supported member.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UpperDomSolution {
    /// All members, sorted.
    pub set: Vec<usize>,
    /// Members without a neighbor in the set, sorted.
    pub independent: Vec<usize>,
    /// Members that rely on a private neighbor, sorted.
    pub supported: Vec<usize>,
    /// Private neighbor of each supported member.
    pub witness: BTreeMap<usize, usize>,
}

impl UpperDomSolution {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// Re-checks every structural invariant of the solution against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), MinimalityError> {
        let n = g.n();
        let mut member = vec![false; n];
        for &v in &self.set {
            if v >= n {
                return Err(MinimalityError::VertexOutOfRange(v));
            }
            member[v] = true;
        }
        let mut split: Vec<usize> = self.independent.iter().chain(&self.supported).copied().collect();
        split.sort_unstable();
        if split != self.set {
            return Err(MinimalityError::InconsistentSplit);
        }
        if let Some(v) = first_undominated(g, &member) {
            return Err(MinimalityError::NotDominating(v));
        }
        for &u in &self.independent {
            if g.neighbors(u).iter().any(|&w| member[w]) {
                return Err(MinimalityError::NoPrivate(u));
            }
        }
        for &u in &self.supported {
            let p = *self.witness.get(&u).ok_or(MinimalityError::NoPrivate(u))?;
            let private = p < n
                && !member[p]
                && g.has_edge(u, p)
                && g.neighbors(p).iter().all(|&w| w == u || !member[w]);
            if !private {
                return Err(MinimalityError::NoPrivate(u));
            }
        }
        if self.witness.len() != self.supported.len() {
            return Err(MinimalityError::InconsistentSplit);
        }
        Ok(())
    }
}

/// Why a vertex set is not a minimal dominating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityError {
    /// This vertex is neither in the set nor adjacent to it.
    NotDominating(usize),
    /// This member has neither a private neighbor nor is its own private vertex.
    NoPrivate(usize),
    VertexOutOfRange(usize),
    /// Independent and supported parts do not partition the set.
    InconsistentSplit,
}

impl fmt::Display for MinimalityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinimalityError::NotDominating(v) => write!(f, "NotDominating({v})"),
            MinimalityError::NoPrivate(v) => write!(f, "NoPrivate({v})"),
            MinimalityError::VertexOutOfRange(v) => write!(f, "VertexOutOfRange({v})"),
            MinimalityError::InconsistentSplit => write!(f, "InconsistentSplit"),
        }
    }
}

impl core::error::Error for MinimalityError {}

fn first_undominated(g: &Graph, member: &[bool]) -> Option<usize> {
    g.vertices()
        .find(|&v| !member[v] && g.neighbors(v).iter().all(|&w| !member[w]))
}

/// `true` iff every vertex is in `d` or adjacent to a vertex of `d`.
pub fn is_dominating(g: &Graph, d: &[usize]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in d {
        member[v] = true;
    }
    first_undominated(g, &member).is_none()
}

/// Decides whether `d` is a minimal dominating set and, if so, returns its
/// S/I split. Each supported member gets its lowest-index private neighbor.
/// A member without a private vertex is reported by largest coverage count.
///
/// Runs in `O(n + m)`. Duplicates in `d` are ignored.
pub fn check_minimal(g: &Graph, d: &[usize]) -> Result<UpperDomSolution, MinimalityError> {
    let n = g.n();
    let mut member = vec![false; n];
    for &v in d {
        if v >= n {
            return Err(MinimalityError::VertexOutOfRange(v));
        }
        member[v] = true;
    }
    // number of members in the closed neighborhood of every vertex
    let mut cover = vec![0u32; n];
    for v in g.vertices().filter(|&v| member[v]) {
        cover[v] += 1;
        for &w in g.neighbors(v) {
            cover[w] += 1;
        }
    }
    if let Some(v) = cover.iter().position(|&c| c == 0) {
        return Err(MinimalityError::NotDominating(v));
    }

    let mut solution = UpperDomSolution::default();
    // among members without a private vertex, report the most redundantly
    // dominated one (lowest index on ties)
    let mut worst: Option<(u32, usize)> = None;
    for u in g.vertices().filter(|&u| member[u]) {
        solution.set.push(u);
        if cover[u] == 1 {
            solution.independent.push(u);
            continue;
        }
        match g.neighbors(u).iter().find(|&&w| !member[w] && cover[w] == 1) {
            Some(&p) => {
                solution.supported.push(u);
                solution.witness.insert(u, p);
            }
            None => {
                if worst.is_none_or(|(c, _)| cover[u] > c) {
                    worst = Some((cover[u], u));
                }
            }
        }
    }
    match worst {
        Some((_, u)) => Err(MinimalityError::NoPrivate(u)),
        None => Ok(solution),
    }
}

/// Minimality by definition: `d` dominates and no `d \ {u}` does.
/// Quadratic; used to cross-check [`check_minimal`].
pub fn is_minimal_by_removal(g: &Graph, d: &[usize]) -> bool {
    let mut set: Vec<usize> = d.to_vec();
    set.sort_unstable();
    set.dedup();
    if !is_dominating(g, &set) {
        return false;
    }
    (0..set.len()).all(|i| {
        let mut rest = set.clone();
        rest.remove(i);
        !is_dominating(g, &rest)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // a=0, b=1, c=2, d=3
    fn p4() -> Graph {
        Graph::path(4)
    }

    #[test]
    fn domination_on_small_graphs() {
        assert!(is_dominating(&p4(), &[1, 2]));
        assert!(!is_dominating(&p4(), &[0, 1]));
        for v in 0..3 {
            assert!(is_dominating(&Graph::complete(3), &[v]));
        }
    }

    #[test]
    fn p4_middle_pair_is_supported() {
        let s = check_minimal(&p4(), &[1, 2]).unwrap();
        assert_eq!(s.supported, vec![1, 2]);
        assert!(s.independent.is_empty());
        assert_eq!(s.witness.get(&1), Some(&0));
        assert_eq!(s.witness.get(&2), Some(&3));
        s.verify(&p4()).unwrap();
    }

    #[test]
    fn p4_three_vertices_not_minimal() {
        assert_eq!(check_minimal(&p4(), &[0, 1, 2]), Err(MinimalityError::NoPrivate(1)));
    }

    #[test]
    fn edgeless_all_independent() {
        let s = check_minimal(&Graph::empty(3), &[0, 1, 2]).unwrap();
        assert_eq!(s.independent, vec![0, 1, 2]);
        assert!(s.supported.is_empty());
    }

    #[test]
    fn reports_undominated_vertex() {
        assert_eq!(check_minimal(&p4(), &[0]), Err(MinimalityError::NotDominating(2)));
    }

    #[test]
    fn verify_rejects_bad_witness() {
        let mut s = check_minimal(&p4(), &[1, 2]).unwrap();
        s.witness.insert(1, 2);
        assert_eq!(s.verify(&p4()), Err(MinimalityError::NoPrivate(1)));
    }
}
