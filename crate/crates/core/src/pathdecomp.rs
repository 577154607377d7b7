//! Nice path decompositions, stored as the sequence of introduce / forget
//! events that produce the bags.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::reductions::CspReductionOutput;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    Introduce(usize),
    Forget(usize),
}

impl Event {
    pub fn vertex(self) -> usize {
        match self {
            Event::Introduce(v) | Event::Forget(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    VertexOutOfRange { vertex: usize, position: usize },
    DoubleIntroduce { vertex: usize, position: usize },
    ForgetBeforeIntroduce { vertex: usize, position: usize },
    DoubleForget { vertex: usize, position: usize },
    NeverIntroduced(usize),
    EdgeUncovered(usize, usize),
    NonEmptyEnd,
    StructureMismatch(&'static str),
}

impl fmt::Display for DecompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DecompositionError::*;
        match self {
            VertexOutOfRange { vertex, position } => {
                write!(f, "VertexOutOfRange({vertex}) at event {position}")
            }
            DoubleIntroduce { vertex, position } => {
                write!(f, "DoubleIntroduce({vertex}) at event {position}")
            }
            ForgetBeforeIntroduce { vertex, position } => {
                write!(f, "ForgetBeforeIntroduce({vertex}) at event {position}")
            }
            DoubleForget { vertex, position } => write!(f, "DoubleForget({vertex}) at event {position}"),
            NeverIntroduced(v) => write!(f, "NeverIntroduced({v})"),
            EdgeUncovered(u, v) => write!(f, "EdgeUncovered({u},{v})"),
            NonEmptyEnd => write!(f, "NonEmptyEnd"),
            StructureMismatch(what) => write!(f, "StructureMismatch: {what}"),
        }
    }
}

impl core::error::Error for DecompositionError {}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NicePathDecomposition {
    pub events: Vec<Event>,
}

impl NicePathDecomposition {
    pub fn new(events: Vec<Event>) -> Self {
        NicePathDecomposition { events }
    }

    /// The bag after every event, preceded by the initial empty bag. Each bag
    /// is sorted. Assumes the event list is well formed.
    pub fn bags(&self) -> Vec<Vec<usize>> {
        let mut bag: Vec<usize> = Vec::new();
        let mut out = vec![bag.clone()];
        for &event in &self.events {
            match event {
                Event::Introduce(v) => {
                    let at = bag.binary_search(&v).unwrap_or_else(|i| i);
                    bag.insert(at, v);
                }
                Event::Forget(v) => {
                    if let Ok(at) = bag.binary_search(&v) {
                        bag.remove(at);
                    }
                }
            }
            out.push(bag.clone());
        }
        out
    }

    /// Largest bag size minus one (zero for an empty decomposition).
    pub fn width(&self) -> usize {
        let mut size = 0usize;
        let mut max = 0usize;
        for e in &self.events {
            match e {
                Event::Introduce(_) => {
                    size += 1;
                    max = max.max(size);
                }
                Event::Forget(_) => size = size.saturating_sub(1),
            }
        }
        max.saturating_sub(1)
    }

    /// Checks that this is a nice path decomposition of `g` and returns its width.
    ///
    /// Every vertex must be introduced once and later forgotten once, the last
    /// bag must be empty, and both ends of every edge must share a bag.
    pub fn validate(&self, g: &Graph) -> Result<usize, DecompositionError> {
        let n = g.n();
        const UNSEEN: usize = usize::MAX;
        let mut introduced = vec![UNSEEN; n];
        let mut forgotten = vec![UNSEEN; n];
        for (position, &event) in self.events.iter().enumerate() {
            let vertex = event.vertex();
            if vertex >= n {
                return Err(DecompositionError::VertexOutOfRange { vertex, position });
            }
            match event {
                Event::Introduce(_) => {
                    if introduced[vertex] != UNSEEN {
                        return Err(DecompositionError::DoubleIntroduce { vertex, position });
                    }
                    introduced[vertex] = position;
                }
                Event::Forget(_) => {
                    if introduced[vertex] == UNSEEN {
                        return Err(DecompositionError::ForgetBeforeIntroduce { vertex, position });
                    }
                    if forgotten[vertex] != UNSEEN {
                        return Err(DecompositionError::DoubleForget { vertex, position });
                    }
                    forgotten[vertex] = position;
                }
            }
        }
        if let Some(v) = introduced.iter().position(|&p| p == UNSEEN) {
            return Err(DecompositionError::NeverIntroduced(v));
        }
        if forgotten.iter().any(|&p| p == UNSEEN) {
            return Err(DecompositionError::NonEmptyEnd);
        }
        // live intervals [introduced, forgotten) must overlap for every edge
        for (u, v) in g.edges() {
            if introduced[u].max(introduced[v]) >= forgotten[u].min(forgotten[v]) {
                return Err(DecompositionError::EdgeUncovered(u, v));
            }
        }
        Ok(self.width())
    }
}

/// Introduces all vertices in index order, then forgets them in index order.
pub fn trivial_decomposition(g: &Graph) -> NicePathDecomposition {
    let events = g
        .vertices()
        .map(Event::Introduce)
        .chain(g.vertices().map(Event::Forget))
        .collect();
    NicePathDecomposition::new(events)
}

/// Greedy vertex ordering: repeatedly introduce the vertex that leaves the
/// smallest bag once every vertex whose neighbors are all introduced has been
/// forgotten. Ties go to the smaller peak bag, then the smaller index.
///
/// No width guarantee beyond `n - 1`.
pub fn heuristic_decomposition(g: &Graph) -> NicePathDecomposition {
    let n = g.n();
    let mut placed = vec![false; n];
    // neighbors of v not introduced yet
    let mut pending: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut in_bag = vec![false; n];
    let mut bag_size = 0usize;
    let mut events = Vec::with_capacity(2 * n);

    for _ in 0..n {
        let mut best: Option<((usize, usize), usize)> = None;
        for v in g.vertices().filter(|&v| !placed[v]) {
            // v leaves immediately if it has no pending neighbors; each bag
            // neighbor whose last pending neighbor is v leaves too
            let released = g
                .neighbors(v)
                .iter()
                .filter(|&&w| in_bag[w] && pending[w] == 1)
                .count();
            let unplaced_neighbors = g.neighbors(v).iter().filter(|&&w| !placed[w]).count();
            let stays = usize::from(unplaced_neighbors > 0);
            let key = (bag_size + stays - released, bag_size + 1);
            if best.is_none_or(|(k, _)| key < k) {
                best = Some((key, v));
            }
        }
        let (_, v) = best.expect("an unplaced vertex remains");
        placed[v] = true;
        in_bag[v] = true;
        bag_size += 1;
        events.push(Event::Introduce(v));
        let mut leaving: Vec<usize> = Vec::new();
        for &w in g.neighbors(v) {
            pending[w] -= 1;
            if in_bag[w] && pending[w] == 0 {
                leaving.push(w);
            }
        }
        if g.neighbors(v).iter().all(|&w| placed[w]) {
            leaving.push(v);
        }
        leaving.sort_unstable();
        for w in leaving {
            in_bag[w] = false;
            bag_size -= 1;
            events.push(Event::Forget(w));
        }
    }
    NicePathDecomposition::new(events)
}

/// Path decomposition of a q-CSP-6 gadget graph of width at most
/// `n + 2·A·C_max + 3`, where `C_max` is the longest accepted-tuple list.
///
/// Section `j` keeps its whole verification gadget in every bag while the
/// four path vertices of each variable pass through; consecutive sections
/// are joined by transition bags that swap `u_{i,4j+3}` for `u_{i,4(j+1)}`
/// one path at a time. The three extra vertices at each end of every path
/// are handled in a prologue and an epilogue.
pub fn gadget_decomposition(out: &CspReductionOutput) -> Result<NicePathDecomposition, DecompositionError> {
    out.check_structure().map_err(DecompositionError::StructureMismatch)?;
    let n = out.instance.n;
    let sections = out.sections.len();
    let last = 4 * sections as isize;
    let u = |i: usize, j: isize| out.path_vertex(i, j);
    let mut events = Vec::new();

    for i in 0..n {
        for j in -3..=0 {
            events.push(Event::Introduce(u(i, j)));
        }
        for j in -3..0 {
            events.push(Event::Forget(u(i, j)));
        }
    }
    for (j, section) in out.sections.iter().enumerate() {
        let base = 4 * j as isize;
        let gadget = section.vertices();
        events.extend(gadget.clone().map(Event::Introduce));
        for i in 0..n {
            for off in 1..4 {
                events.push(Event::Introduce(u(i, base + off)));
            }
            for off in 0..3 {
                events.push(Event::Forget(u(i, base + off)));
            }
        }
        events.extend(gadget.map(Event::Forget));
        if j + 1 < sections {
            for i in 0..n {
                events.push(Event::Introduce(u(i, base + 4)));
                events.push(Event::Forget(u(i, base + 3)));
            }
        }
    }
    for i in 0..n {
        for j in last..last + 3 {
            events.push(Event::Introduce(u(i, j)));
        }
        for j in last - 1..last + 3 {
            events.push(Event::Forget(u(i, j)));
        }
    }
    Ok(NicePathDecomposition::new(events))
}
