//! Hardness gadgets with forward witnesses.
//!
//! * [`gen_is_reduction`] blows every vertex of a clique-partitioned
//!   Independent Set instance up into an independent block of `a` vertices
//!   and adds one apex per clique. An independent set hitting every clique
//!   maps to a minimal dominating set of size `a·k`.
//! * [`gen_csp_reduction`] encodes a q-CSP-6 instance as `n` long paths whose
//!   four-vertex sections select one of six patterns, plus one verification
//!   gadget per section. A satisfying assignment maps to a minimal dominating
//!   set of size at least `F·m·(2n + A) + 2n`.
//!
//! Vertex labels are deterministic; see [`IsReductionOutput`] and
//! [`CspReductionOutput`] for the layout.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::domination::{check_minimal, MinimalityError, UpperDomSolution};
use crate::graph::Graph;

pub const DEFAULT_BLOCK_SIZE: usize = 5;
pub const DOMAIN_SIZE: u8 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    InvalidCliquePartition(&'static str),
    InvalidParameter(&'static str),
    VertexOutOfRange(usize),
    NotIndependent(usize, usize),
    WrongSize { expected: usize, actual: usize },
    InvalidCsp { constraint: Option<usize>, reason: &'static str },
    WrongAssignmentLength { expected: usize, actual: usize },
    ValueOutOfDomain { variable: usize, value: u8 },
    AssignmentUnsatisfying(usize),
    AmbiguousAcceptedTuple(usize),
    WitnessRejected(MinimalityError),
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ReductionError::*;
        match self {
            InvalidCliquePartition(why) => write!(f, "InvalidCliquePartition: {why}"),
            InvalidParameter(why) => write!(f, "InvalidParameter: {why}"),
            VertexOutOfRange(v) => write!(f, "VertexOutOfRange({v})"),
            NotIndependent(u, v) => write!(f, "NotIndependent({u},{v})"),
            WrongSize { expected, actual } => write!(f, "WrongSize: expected {expected}, got {actual}"),
            InvalidCsp { constraint: Some(c), reason } => write!(f, "InvalidCsp: constraint {c}: {reason}"),
            InvalidCsp { constraint: None, reason } => write!(f, "InvalidCsp: {reason}"),
            WrongAssignmentLength { expected, actual } => {
                write!(f, "WrongAssignmentLength: expected {expected}, got {actual}")
            }
            ValueOutOfDomain { variable, value } => {
                write!(f, "ValueOutOfDomain: variable {variable} has value {value}")
            }
            AssignmentUnsatisfying(c) => write!(f, "AssignmentUnsatisfying({c})"),
            AmbiguousAcceptedTuple(c) => write!(f, "AmbiguousAcceptedTuple({c})"),
            WitnessRejected(e) => write!(f, "WitnessRejected: {e}"),
        }
    }
}

impl core::error::Error for ReductionError {}

// ---------------------------------------------------------------------------
// Independent Set
// ---------------------------------------------------------------------------

/// Independent Set instance whose vertices are partitioned into `k` cliques;
/// the target is an independent set with one vertex per clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartitionedIsInstance {
    pub graph: Graph,
    pub cliques: Vec<Vec<usize>>,
}

impl CliquePartitionedIsInstance {
    pub fn k(&self) -> usize {
        self.cliques.len()
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        let n = self.graph.n();
        let mut owner = vec![usize::MAX; n];
        for (c, clique) in self.cliques.iter().enumerate() {
            if clique.is_empty() {
                return Err(ReductionError::InvalidCliquePartition("empty clique"));
            }
            for &v in clique {
                if v >= n {
                    return Err(ReductionError::VertexOutOfRange(v));
                }
                if owner[v] != usize::MAX {
                    return Err(ReductionError::InvalidCliquePartition("vertex in two cliques"));
                }
                owner[v] = c;
            }
            for (x, &u) in clique.iter().enumerate() {
                if clique[x + 1..].iter().any(|&v| !self.graph.has_edge(u, v)) {
                    return Err(ReductionError::InvalidCliquePartition("clique edge missing"));
                }
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(ReductionError::InvalidCliquePartition("cliques do not cover every vertex"));
        }
        Ok(())
    }
}

/// Target of [`gen_is_reduction`].
///
/// Layout: block `Z_u` of source vertex `u` is `u·a .. (u+1)·a`; the apex
/// `z_i` of clique `i` is `a·n + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsReductionOutput {
    pub graph: Graph,
    pub budget: usize,
    pub a: usize,
    pub source_n: usize,
    pub apexes: Vec<usize>,
}

impl IsReductionOutput {
    pub fn block(&self, u: usize) -> Range<usize> {
        u * self.a..(u + 1) * self.a
    }
}

pub fn gen_is_reduction(inst: &CliquePartitionedIsInstance, a: usize) -> Result<IsReductionOutput, ReductionError> {
    inst.validate()?;
    if a < 2 {
        return Err(ReductionError::InvalidParameter("block size a must be at least 2"));
    }
    let n = inst.graph.n();
    let k = inst.k();
    let mut edges = Vec::new();
    for (u, v) in inst.graph.edges() {
        for x in u * a..(u + 1) * a {
            for y in v * a..(v + 1) * a {
                edges.push((x, y));
            }
        }
    }
    let apexes: Vec<usize> = (0..k).map(|i| a * n + i).collect();
    for (i, clique) in inst.cliques.iter().enumerate() {
        for &u in clique {
            for x in u * a..(u + 1) * a {
                edges.push((apexes[i], x));
            }
        }
    }
    let graph = Graph::from_edges(a * n + k, edges).expect("reduction emits a simple graph");
    Ok(IsReductionOutput {
        graph,
        budget: a * k,
        a,
        source_n: n,
        apexes,
    })
}

/// Maps an independent set with one vertex per clique to the union of the
/// corresponding blocks, which is an independent dominating set of size `a·k`.
pub fn is_reduction_witness(
    inst: &CliquePartitionedIsInstance,
    a: usize,
    independent_set: &[usize],
) -> Result<UpperDomSolution, ReductionError> {
    let out = gen_is_reduction(inst, a)?;
    let mut set = independent_set.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= inst.graph.n()) {
        return Err(ReductionError::VertexOutOfRange(v));
    }
    for (i, &u) in set.iter().enumerate() {
        if let Some(&v) = set[i + 1..].iter().find(|&&v| inst.graph.has_edge(u, v)) {
            return Err(ReductionError::NotIndependent(u, v));
        }
    }
    if set.len() != inst.k() {
        return Err(ReductionError::WrongSize {
            expected: inst.k(),
            actual: set.len(),
        });
    }
    let members: Vec<usize> = set.iter().flat_map(|&u| out.block(u)).collect();
    check_minimal(&out.graph, &members).map_err(ReductionError::WitnessRejected)
}

// ---------------------------------------------------------------------------
// q-CSP-6
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspConstraint {
    /// The `q` distinct variables, 0-indexed.
    pub vars: Vec<usize>,
    /// Accepted value tuples, aligned with `vars`.
    pub accepted: Vec<Vec<u8>>,
}

impl CspConstraint {
    pub fn accepts(&self, assignment: &[u8]) -> impl Iterator<Item = usize> + '_ {
        let values: Vec<u8> = self.vars.iter().map(|&x| assignment[x]).collect();
        self.accepted
            .iter()
            .enumerate()
            .filter(move |(_, t)| **t == values)
            .map(|(l, _)| l)
    }
}

/// Constraint satisfaction instance over the domain `{0, …, 5}` where every
/// constraint lists its accepted assignments explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspInstance {
    pub n: usize,
    pub q: usize,
    pub constraints: Vec<CspConstraint>,
}

impl CspInstance {
    pub fn m(&self) -> usize {
        self.constraints.len()
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        let bad = |c: Option<usize>, reason| Err(ReductionError::InvalidCsp { constraint: c, reason });
        if self.q == 0 {
            return bad(None, "arity must be positive");
        }
        if self.constraints.is_empty() {
            return bad(None, "at least one constraint is required");
        }
        let max_tuples = (DOMAIN_SIZE as u128).checked_pow(self.q as u32).unwrap_or(u128::MAX);
        for (c, constraint) in self.constraints.iter().enumerate() {
            let c = Some(c);
            if constraint.vars.len() != self.q {
                return bad(c, "constraint must name exactly q variables");
            }
            for (x, &v) in constraint.vars.iter().enumerate() {
                if v >= self.n {
                    return bad(c, "variable out of range");
                }
                if constraint.vars[..x].contains(&v) {
                    return bad(c, "variable repeated");
                }
            }
            if constraint.accepted.is_empty() {
                return bad(c, "accepted list is empty");
            }
            if constraint.accepted.len() as u128 > max_tuples {
                return bad(c, "more accepted tuples than assignments");
            }
            for (l, tuple) in constraint.accepted.iter().enumerate() {
                if tuple.len() != self.q {
                    return bad(c, "accepted tuple has wrong length");
                }
                if tuple.iter().any(|&x| x >= DOMAIN_SIZE) {
                    return bad(c, "value outside {0..5}");
                }
                if constraint.accepted[..l].contains(tuple) {
                    return bad(c, "accepted tuple repeated");
                }
            }
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, assignment: &[u8]) -> bool {
        assignment.len() == self.n && self.constraints.iter().all(|c| c.accepts(assignment).next().is_some())
    }

    /// Random instance with a planted satisfying assignment, which is returned
    /// alongside. Every constraint accepts `accepted` tuples (clamped to
    /// `[1, 6^q]`), one of which matches the planted assignment.
    pub fn random_satisfiable<R: Rng + ?Sized>(
        n: usize,
        q: usize,
        m: usize,
        accepted: usize,
        rng: &mut R,
    ) -> (CspInstance, Vec<u8>) {
        assert!(q >= 1 && q <= n && m >= 1, "need 1 <= q <= n and m >= 1");
        let assignment: Vec<u8> = (0..n).map(|_| rng.gen_range(0..DOMAIN_SIZE)).collect();
        let total = (DOMAIN_SIZE as usize).saturating_pow(q as u32);
        let accepted = accepted.clamp(1, total);
        let mut variables: Vec<usize> = (0..n).collect();
        let constraints = (0..m)
            .map(|_| {
                variables.shuffle(rng);
                let vars = variables[..q].to_vec();
                let planted: Vec<u8> = vars.iter().map(|&x| assignment[x]).collect();
                let mut tuples = vec![planted];
                while tuples.len() < accepted {
                    let t: Vec<u8> = (0..q).map(|_| rng.gen_range(0..DOMAIN_SIZE)).collect();
                    if !tuples.contains(&t) {
                        tuples.push(t);
                    }
                }
                tuples.shuffle(rng);
                CspConstraint { vars, accepted: tuples }
            })
            .collect();
        (CspInstance { n, q, constraints }, assignment)
    }
}

/// Path offsets inside a section that are adjacent to `K_j^l` when the
/// accepted tuple gives the variable value `x`. The same pair is left out of
/// the witness, so the two members kept in that section are exactly the
/// complementary pair.
pub const VALUE_OFFSETS: [(usize, usize); 6] = [(2, 3), (3, 0), (0, 1), (1, 2), (1, 3), (0, 2)];

/// Vertex ranges of the verification gadget `H_j` of one section.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetSection {
    /// `j mod m`
    pub constraint: usize,
    /// `C_{j'}`, the number of accepted tuples
    pub accepted: usize,
    pub k_start: usize,
    pub l_start: usize,
    pub apex: usize,
    pub a: usize,
}

impl GadgetSection {
    /// `K_j^l`
    pub fn k_block(&self, l: usize) -> Range<usize> {
        self.k_start + l * self.a..self.k_start + (l + 1) * self.a
    }

    /// `L_j^l`
    pub fn l_block(&self, l: usize) -> Range<usize> {
        self.l_start + l * self.a..self.l_start + (l + 1) * self.a
    }

    /// All `2·A·C + 1` gadget vertices; they are contiguous.
    pub fn vertices(&self) -> Range<usize> {
        self.k_start..self.apex + 1
    }
}

/// Target of [`gen_csp_reduction`].
///
/// Layout: path `P_i` (variable `i`, 0-indexed) occupies
/// `i·(4Fm+6) .. (i+1)·(4Fm+6)`, with `u_{i,j}` at offset `j + 3` for
/// `j ∈ [-3, 4Fm+2]`. Then, section by section, come `K_j` (blocks
/// `K_j^1..K_j^C`), `L_j` (same block order) and the apex `w_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspReductionOutput {
    pub instance: CspInstance,
    pub graph: Graph,
    /// `A = 4q + 2`
    pub a: usize,
    /// `F = (2n+1)(4n+1)`
    pub f: usize,
    /// `k = F·m·(2n + A) + 2n`
    pub budget: usize,
    /// `4Fm + 6`
    pub path_len: usize,
    pub sections: Vec<GadgetSection>,
}

impl CspReductionOutput {
    /// `u_{i,j}` for variable `i` (0-indexed) and path position `j ∈ [-3, 4Fm+2]`.
    pub fn path_vertex(&self, i: usize, j: isize) -> usize {
        debug_assert!(j >= -3 && ((j + 3) as usize) < self.path_len);
        i * self.path_len + (j + 3) as usize
    }

    pub fn main_part_size(&self) -> usize {
        self.instance.n * self.path_len
    }

    /// Checks the bookkeeping against the graph; used before trusting the
    /// section layout of an output that may have been edited or deserialized.
    pub fn check_structure(&self) -> Result<(), &'static str> {
        let inst = &self.instance;
        let (n, q, m) = (inst.n, inst.q, inst.m());
        if self.a != 4 * q + 2 || self.f != (2 * n + 1) * (4 * n + 1) {
            return Err("A or F inconsistent with the instance");
        }
        if self.budget != self.f * m * (2 * n + self.a) + 2 * n {
            return Err("budget inconsistent with the instance");
        }
        if self.path_len != 4 * self.f * m + 6 || self.sections.len() != self.f * m {
            return Err("section count inconsistent with the instance");
        }
        let mut next = self.main_part_size();
        for (j, s) in self.sections.iter().enumerate() {
            let c = inst.constraints.get(s.constraint).map(|c| c.accepted.len());
            if s.constraint != j % m || c != Some(s.accepted) || s.a != self.a {
                return Err("section metadata inconsistent with the instance");
            }
            if s.k_start != next || s.l_start != next + self.a * s.accepted || s.apex != s.l_start + self.a * s.accepted {
                return Err("section vertex ranges are not contiguous");
            }
            next = s.apex + 1;
        }
        if next != self.graph.n() {
            return Err("vertex count does not match the graph");
        }
        Ok(())
    }

    /// Closed-form edge count of the construction.
    pub fn expected_edge_count(&self) -> usize {
        let (n, q, a) = (self.instance.n, self.instance.q, self.a);
        let paths = n * (self.path_len - 1);
        let gadgets: usize = self
            .sections
            .iter()
            .map(|s| {
                let c = s.accepted;
                let clique = a * c * (a * c - 1) / 2;
                let path_to_k = q * c * 2 * a;
                let k_to_l = a * c + a * a * c * (c - 1);
                let apex = a * c;
                2 * clique + path_to_k + k_to_l + apex
            })
            .sum();
        paths + gadgets
    }
}

pub fn gen_csp_reduction(inst: &CspInstance) -> Result<CspReductionOutput, ReductionError> {
    inst.validate()?;
    let (n, q, m) = (inst.n, inst.q, inst.m());
    let a = 4 * q + 2;
    let f = (2 * n + 1) * (4 * n + 1);
    let section_count = f * m;
    let path_len = 4 * section_count + 6;
    let budget = f * m * (2 * n + a) + 2 * n;

    let mut sections = Vec::with_capacity(section_count);
    let mut next = n * path_len;
    for j in 0..section_count {
        let constraint = j % m;
        let c = inst.constraints[constraint].accepted.len();
        let k_start = next;
        let l_start = k_start + a * c;
        let apex = l_start + a * c;
        next = apex + 1;
        sections.push(GadgetSection {
            constraint,
            accepted: c,
            k_start,
            l_start,
            apex,
            a,
        });
    }
    let total = next;

    let path_vertex = |i: usize, j: usize| i * path_len + j + 3;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        let start = i * path_len;
        edges.extend((start..start + path_len - 1).map(|v| (v, v + 1)));
    }
    for (j, s) in sections.iter().enumerate() {
        let constraint = &inst.constraints[s.constraint];
        let c = s.accepted;
        for clique in [s.k_start..s.l_start, s.l_start..s.apex] {
            for x in clique.clone() {
                edges.extend((x + 1..clique.end).map(|y| (x, y)));
            }
        }
        for (pos, &var) in constraint.vars.iter().enumerate() {
            for l in 0..c {
                let (o1, o2) = VALUE_OFFSETS[constraint.accepted[l][pos] as usize];
                for off in [o1, o2] {
                    let u = path_vertex(var, 4 * j + off);
                    edges.extend(s.k_block(l).map(|x| (u, x)));
                }
            }
        }
        for l in 0..c {
            edges.extend(s.k_block(l).zip(s.l_block(l)));
            for l2 in (0..c).filter(|&l2| l2 != l) {
                for x in s.k_block(l) {
                    edges.extend(s.l_block(l2).map(|y| (x, y)));
                }
            }
        }
        edges.extend((s.l_start..s.apex).map(|y| (s.apex, y)));
    }
    let graph = Graph::from_edges(total, edges).expect("gadget construction emits a simple graph");

    Ok(CspReductionOutput {
        instance: inst.clone(),
        graph,
        a,
        f,
        budget,
        path_len,
        sections,
    })
}

/// Builds the minimal dominating set of size at least `k` induced by a
/// satisfying assignment (values in `0..6`, one per variable).
///
/// Every constraint must accept the assignment through exactly one tuple.
pub fn csp_reduction_witness(out: &CspReductionOutput, assignment: &[u8]) -> Result<UpperDomSolution, ReductionError> {
    let inst = &out.instance;
    if assignment.len() != inst.n {
        return Err(ReductionError::WrongAssignmentLength {
            expected: inst.n,
            actual: assignment.len(),
        });
    }
    if let Some((variable, &value)) = assignment.iter().enumerate().find(|(_, &x)| x >= DOMAIN_SIZE) {
        return Err(ReductionError::ValueOutOfDomain { variable, value });
    }
    let mut chosen = Vec::with_capacity(inst.m());
    for (c, constraint) in inst.constraints.iter().enumerate() {
        let mut hits = constraint.accepts(assignment);
        match (hits.next(), hits.next()) {
            (None, _) => return Err(ReductionError::AssignmentUnsatisfying(c)),
            (Some(_), Some(_)) => return Err(ReductionError::AmbiguousAcceptedTuple(c)),
            (Some(l), None) => chosen.push(l),
        }
    }

    let sections = out.sections.len() as isize;
    let last = 4 * sections;
    let mut members = Vec::new();
    for (i, &value) in assignment.iter().enumerate() {
        let (skip1, skip2) = VALUE_OFFSETS[value as usize];
        for j in 0..sections {
            for off in (0..4).filter(|&o| o != skip1 && o != skip2) {
                members.push(out.path_vertex(i, 4 * j + off as isize));
            }
        }
        let ends: &[isize] = match value {
            0 => &[-3, last, last + 1],
            1 => &[-2, last + 1],
            2 => &[-2, -1, last + 2],
            3 => &[-3, last + 2],
            4 => &[-3, last + 1],
            _ => &[-2, last + 2],
        };
        members.extend(ends.iter().map(|&j| out.path_vertex(i, j)));
    }
    for s in &out.sections {
        members.extend(s.l_block(chosen[s.constraint]));
    }
    members.sort_unstable();
    check_minimal(&out.graph, &members).map_err(ReductionError::WitnessRejected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_instance() -> CliquePartitionedIsInstance {
        CliquePartitionedIsInstance {
            graph: Graph::complete(3),
            cliques: vec![vec![0, 1, 2]],
        }
    }

    fn two_edges() -> CliquePartitionedIsInstance {
        CliquePartitionedIsInstance {
            graph: Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
            cliques: vec![vec![0, 1], vec![2, 3]],
        }
    }

    fn single_value_csp(value: u8) -> CspInstance {
        CspInstance {
            n: 1,
            q: 1,
            constraints: vec![CspConstraint {
                vars: vec![0],
                accepted: vec![vec![value]],
            }],
        }
    }

    #[test]
    fn is_reduction_sizes() {
        let out = gen_is_reduction(&k3_instance(), 5).unwrap();
        assert_eq!(out.graph.n(), 16);
        assert_eq!(out.budget, 5);
        // three blocks pairwise complete plus the apex
        assert_eq!(out.graph.edge_count(), 3 * 25 + 15);
        let out = gen_is_reduction(&two_edges(), 5).unwrap();
        assert_eq!(out.graph.n(), 22);
        assert_eq!(out.budget, 10);
    }

    #[test]
    fn is_reduction_rejects_missing_clique_edge() {
        let inst = CliquePartitionedIsInstance {
            graph: Graph::path(3),
            cliques: vec![vec![0, 1, 2]],
        };
        assert!(matches!(
            gen_is_reduction(&inst, 5),
            Err(ReductionError::InvalidCliquePartition(_))
        ));
    }

    #[test]
    fn is_witnesses() {
        let s = is_reduction_witness(&k3_instance(), 5, &[0]).unwrap();
        assert_eq!(s.set, vec![0, 1, 2, 3, 4]);
        assert_eq!(s.independent.len(), 5);
        let s = is_reduction_witness(&two_edges(), 5, &[1, 2]).unwrap();
        assert_eq!(s.size(), 10);
        assert_eq!(
            is_reduction_witness(&two_edges(), 5, &[0, 1]),
            Err(ReductionError::NotIndependent(0, 1))
        );
        assert_eq!(
            is_reduction_witness(&two_edges(), 5, &[0]),
            Err(ReductionError::WrongSize { expected: 2, actual: 1 })
        );
    }

    #[test]
    fn csp_reduction_counts() {
        let out = gen_csp_reduction(&single_value_csp(0)).unwrap();
        assert_eq!((out.a, out.f, out.budget), (6, 15, 122));
        assert_eq!(out.main_part_size(), 66);
        assert_eq!(out.sections.len(), 15);
        assert!(out.sections.iter().all(|s| s.vertices().len() == 13));
        assert_eq!(out.graph.n(), 261);
        assert_eq!(out.graph.edge_count(), out.expected_edge_count());
        out.check_structure().unwrap();
    }

    #[test]
    fn value_zero_rule_connects_offsets_two_and_three() {
        let out = gen_csp_reduction(&single_value_csp(0)).unwrap();
        let k0 = out.sections[0].k_block(0);
        for off in 0..4 {
            let u = out.path_vertex(0, off);
            let adjacent = k0.clone().filter(|&x| out.graph.has_edge(u, x)).count();
            assert_eq!(adjacent, if off >= 2 { 6 } else { 0 }, "offset {off}");
        }
    }

    #[test]
    fn csp_rejects_repeated_variable() {
        let inst = CspInstance {
            n: 2,
            q: 2,
            constraints: vec![CspConstraint {
                vars: vec![1, 1],
                accepted: vec![vec![0, 0]],
            }],
        };
        assert!(matches!(gen_csp_reduction(&inst), Err(ReductionError::InvalidCsp { .. })));
    }

    #[test]
    fn csp_witness_every_value() {
        for value in 0..6 {
            let out = gen_csp_reduction(&single_value_csp(value)).unwrap();
            let s = csp_reduction_witness(&out, &[value]).unwrap();
            assert!(s.size() >= out.budget, "value {value}: {} < {}", s.size(), out.budget);
            s.verify(&out.graph).unwrap();
        }
    }

    #[test]
    fn csp_witness_two_variables() {
        let inst = CspInstance {
            n: 2,
            q: 2,
            constraints: vec![CspConstraint {
                vars: vec![0, 1],
                accepted: vec![vec![0, 0]],
            }],
        };
        let out = gen_csp_reduction(&inst).unwrap();
        assert_eq!((out.a, out.f), (10, 45));
        assert_eq!(out.budget, 45 * (4 + 10) + 4);
        let s = csp_reduction_witness(&out, &[0, 0]).unwrap();
        assert!(s.size() >= out.budget);
    }

    #[test]
    fn csp_witness_rejects_unsatisfying() {
        let out = gen_csp_reduction(&single_value_csp(0)).unwrap();
        assert_eq!(csp_reduction_witness(&out, &[1]), Err(ReductionError::AssignmentUnsatisfying(0)));
    }
}
