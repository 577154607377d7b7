//! Exact Upper Dominating Set over a nice path decomposition in
//! `O(6^pw · pw)` time.
//!
//! Every bag vertex carries one of six colors:
//!
//! | color   | in the set | meaning                                         |
//! |---------|------------|-------------------------------------------------|
//! | `I`     | yes        | no neighbor in the set (its own private vertex) |
//! | `F`     | yes        | already matched to a private neighbor           |
//! | `FStar` | yes        | still waiting for a private neighbor            |
//! | `OStar` | no         | not dominated yet                               |
//! | `O`     | no         | dominated, not anyone's private neighbor        |
//! | `P`     | no         | dominated, private neighbor of exactly one `F`  |
//!
//! A coloring of a bag is encoded in mixed radix: the bag is kept sorted and
//! the vertex at position `i` contributes `color · 6^i`. The table at every
//! position maps codings to the best partial solution size, with `NEG`
//! standing for infeasible, plus the source coding it came from so the
//! solution can be replayed backwards.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::domination::UpperDomSolution;
use crate::graph::Graph;
use crate::pathdecomp::{DecompositionError, Event, NicePathDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Color {
    I = 0,
    F = 1,
    FStar = 2,
    OStar = 3,
    O = 4,
    P = 5,
}

impl Color {
    pub const ALL: [Color; 6] = [Color::I, Color::F, Color::FStar, Color::OStar, Color::O, Color::P];

    pub fn from_digit(d: u64) -> Color {
        Color::ALL[d as usize]
    }

    pub fn in_set(self) -> bool {
        matches!(self, Color::I | Color::F | Color::FStar)
    }
}

/// Infeasible entry.
pub const NEG: i32 = i32::MIN;

/// Largest bag whose colorings fit a `u64` code.
pub const MAX_BAG: usize = 24;

/// Bags up to this size get a dense table of all `6^|bag|` codings.
pub const DEFAULT_DENSE_MAX_BAG: usize = 8;

/// Which `P` introductions are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrivateRule {
    /// The new `P` vertex must see exactly one `FStar` neighbor in the bag.
    #[default]
    Unique,
    /// Any `FStar` neighbor may be matched, even if others are present. This
    /// can certify sets whose "private" neighbor is dominated twice; kept
    /// for comparison only.
    AnyFStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpOptions {
    pub dense_max_bag: usize,
    pub private_rule: PrivateRule,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions {
            dense_max_bag: DEFAULT_DENSE_MAX_BAG,
            private_rule: PrivateRule::Unique,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DpError {
    InvalidDecomposition(DecompositionError),
    BagTooLarge { size: usize, max: usize },
    CorruptTable(&'static str),
}

impl fmt::Display for DpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DpError::InvalidDecomposition(e) => write!(f, "invalid decomposition: {e}"),
            DpError::BagTooLarge { size, max } => write!(f, "bag of size {size} exceeds the supported {max}"),
            DpError::CorruptTable(what) => write!(f, "corrupt table: {what}"),
        }
    }
}

impl core::error::Error for DpError {}

impl From<DecompositionError> for DpError {
    fn from(e: DecompositionError) -> Self {
        DpError::InvalidDecomposition(e)
    }
}

/// Instrumentation collected during one run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpStats {
    pub width: usize,
    /// Sum of table sizes over all positions, the initial empty bag included.
    /// In dense mode this is `Σ_t 6^{|X_t|}`.
    pub table_entries: u64,
    /// `(source coloring, color, matched neighbor)` triples examined.
    pub transitions: u64,
    /// For every introduce event: size of the bag before it and the number
    /// of triples examined there.
    pub introduce_work: Vec<(usize, u64)>,
}

/// Table of one bag.
#[derive(Debug, Clone)]
pub enum DpTable {
    Dense { value: Vec<i32>, source: Vec<u64> },
    Sparse(BTreeMap<u64, (i32, u64)>),
}

impl DpTable {
    fn new(bag_size: usize, dense_max_bag: usize) -> DpTable {
        if bag_size <= dense_max_bag {
            let len = 6usize.pow(bag_size as u32);
            DpTable::Dense {
                value: vec![NEG; len],
                source: vec![0; len],
            }
        } else {
            DpTable::Sparse(BTreeMap::new())
        }
    }

    /// Allocated entries (dense) or stored entries (sparse).
    pub fn len(&self) -> usize {
        match self {
            DpTable::Dense { value, .. } => value.len(),
            DpTable::Sparse(map) => map.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Value and source coding of `code`, if feasible.
    pub fn get(&self, code: u64) -> Option<(i32, u64)> {
        let entry = match self {
            DpTable::Dense { value, source } => {
                let i = code as usize;
                (i < value.len()).then(|| (value[i], source[i]))
            }
            DpTable::Sparse(map) => map.get(&code).copied(),
        };
        entry.filter(|&(v, _)| v != NEG)
    }

    /// Keeps the larger value; equal values keep the smaller source coding.
    fn update(&mut self, code: u64, val: i32, src: u64) {
        let better = |cur: i32, cur_src: u64| val > cur || (val == cur && src < cur_src);
        match self {
            DpTable::Dense { value, source } => {
                let i = code as usize;
                if value[i] == NEG || better(value[i], source[i]) {
                    value[i] = val;
                    source[i] = src;
                }
            }
            DpTable::Sparse(map) => {
                let slot = map.entry(code).or_insert((NEG, src));
                if slot.0 == NEG || better(slot.0, slot.1) {
                    *slot = (val, src);
                }
            }
        }
    }

    /// Calls `f(code, value)` on every feasible entry in ascending code order.
    pub fn for_each_feasible<F: FnMut(u64, i32)>(&self, mut f: F) {
        match self {
            DpTable::Dense { value, .. } => {
                for (code, &v) in value.iter().enumerate() {
                    if v != NEG {
                        f(code as u64, v);
                    }
                }
            }
            DpTable::Sparse(map) => {
                for (&code, &(v, _)) in map {
                    if v != NEG {
                        f(code, v);
                    }
                }
            }
        }
    }
}

/// Completed forward pass: one table per position (`tables[0]` is the empty
/// bag before the first event) together with the bags themselves.
#[derive(Debug, Clone)]
pub struct DpRun {
    pub events: Vec<Event>,
    pub bags: Vec<Vec<usize>>,
    pub tables: Vec<DpTable>,
    pub stats: DpStats,
}

impl DpRun {
    /// Value at the final empty bag.
    pub fn best(&self) -> Option<i32> {
        self.tables.last().and_then(|t| t.get(0)).map(|(v, _)| v)
    }
}

#[inline]
fn pow6(e: usize) -> u64 {
    6u64.pow(e as u32)
}

#[inline]
fn digit(code: u64, pos: usize) -> u64 {
    code / pow6(pos) % 6
}

/// Inserts `d` as the digit at `pos`, shifting higher digits up.
#[inline]
fn insert_digit(code: u64, pos: usize, d: u64) -> u64 {
    let p = pow6(pos);
    code % p + d * p + code / p * p * 6
}

/// Removes the digit at `pos`, shifting higher digits down.
#[inline]
fn remove_digit(code: u64, pos: usize) -> u64 {
    let p = pow6(pos);
    code % p + code / (p * 6) * p
}

/// Runs the forward pass of the dynamic program.
pub fn run_tables(g: &Graph, d: &NicePathDecomposition, opts: &DpOptions) -> Result<DpRun, DpError> {
    let width = d.validate(g)?;
    let bags = d.bags();
    if let Some(size) = bags.iter().map(Vec::len).max().filter(|&s| s > MAX_BAG) {
        return Err(DpError::BagTooLarge { size, max: MAX_BAG });
    }
    let mut stats = DpStats {
        width,
        ..DpStats::default()
    };
    let mut first = DpTable::new(0, opts.dense_max_bag);
    first.update(0, 0, 0);
    let mut tables = Vec::with_capacity(bags.len());
    stats.table_entries += first.len() as u64;
    tables.push(first);

    for (t, &event) in d.events.iter().enumerate() {
        let before = &bags[t];
        let after = &bags[t + 1];
        let prev = &tables[t];
        let mut next = DpTable::new(after.len(), opts.dense_max_bag);
        match event {
            Event::Introduce(v) => {
                let work = introduce(g, v, before, prev, &mut next, opts.private_rule);
                stats.transitions += work;
                stats.introduce_work.push((before.len(), work));
            }
            Event::Forget(v) => {
                let pos = before.binary_search(&v).expect("forgotten vertex is in the bag");
                prev.for_each_feasible(|code, val| {
                    stats.transitions += 1;
                    match Color::from_digit(digit(code, pos)) {
                        // an undominated vertex or one still lacking a private
                        // neighbor cannot leave
                        Color::FStar | Color::OStar => {}
                        _ => next.update(remove_digit(code, pos), val, code),
                    }
                });
            }
        }
        stats.table_entries += next.len() as u64;
        tables.push(next);
    }
    Ok(DpRun {
        events: d.events.clone(),
        bags,
        tables,
        stats,
    })
}

fn introduce(g: &Graph, v: usize, bag: &[usize], prev: &DpTable, next: &mut DpTable, rule: PrivateRule) -> u64 {
    let at = bag.binary_search(&v).unwrap_err();
    let neighbor_pos: Vec<usize> = bag
        .iter()
        .enumerate()
        .filter(|&(_, &w)| g.has_edge(v, w))
        .map(|(i, _)| i)
        .collect();
    let mut work = 0u64;
    let mut colors: Vec<Color> = Vec::with_capacity(neighbor_pos.len());

    prev.for_each_feasible(|code, val| {
        colors.clear();
        colors.extend(neighbor_pos.iter().map(|&q| Color::from_digit(digit(code, q))));
        let mut count = [0usize; 6];
        for &c in &colors {
            count[c as usize] += 1;
        }
        let has = |c: Color| count[c as usize] > 0;
        // neighbors that become dominated when v joins the set
        let dominate_all = || {
            neighbor_pos
                .iter()
                .zip(&colors)
                .filter(|&(_, &c)| c == Color::OStar)
                .fold(code, |acc, (&q, _)| acc + (Color::O as u64 - Color::OStar as u64) * pow6(q))
        };
        let mut emit = |target: u64, color: Color, gain: i32| {
            next.update(insert_digit(target, at, color as u64), val + gain, code);
        };

        // I
        work += 1;
        if !(has(Color::I) || has(Color::F) || has(Color::FStar) || has(Color::P)) {
            emit(dominate_all(), Color::I, 1);
        }
        // F: one undominated neighbor becomes v's private neighbor
        let ostar: Vec<usize> = neighbor_pos
            .iter()
            .zip(&colors)
            .filter(|&(_, &c)| c == Color::OStar)
            .map(|(&q, _)| q)
            .collect();
        if ostar.is_empty() || has(Color::I) || has(Color::P) {
            work += 1;
        } else {
            let dominated = dominate_all();
            for &w in &ostar {
                work += 1;
                let target = dominated + (Color::P as u64 - Color::O as u64) * pow6(w);
                emit(target, Color::F, 1);
            }
        }
        // F*
        work += 1;
        if !(has(Color::I) || has(Color::P)) {
            emit(dominate_all(), Color::FStar, 1);
        }
        // O*
        work += 1;
        if !(has(Color::I) || has(Color::F) || has(Color::FStar)) {
            emit(code, Color::OStar, 0);
        }
        // O
        work += 1;
        if has(Color::I) || has(Color::F) || has(Color::FStar) {
            emit(code, Color::O, 0);
        }
        // P: v becomes the private neighbor of an F* neighbor
        let fstar = count[Color::FStar as usize];
        let allowed = match rule {
            PrivateRule::Unique => fstar == 1,
            PrivateRule::AnyFStar => fstar >= 1,
        };
        if !allowed || has(Color::I) || has(Color::F) {
            work += 1;
        } else {
            for (&q, _) in neighbor_pos.iter().zip(&colors).filter(|&(_, &c)| c == Color::FStar) {
                work += 1;
                let target = code - (Color::FStar as u64 - Color::F as u64) * pow6(q);
                emit(target, Color::P, 0);
            }
        }
    });
    work
}

/// Replays the stored source codings from the final empty bag and rebuilds
/// the optimal set with its S/I split. The private neighbor of every
/// supported vertex is the `P` vertex it was matched with.
pub fn reconstruct_solution(run: &DpRun, g: &Graph) -> Result<UpperDomSolution, DpError> {
    let best = run.best().ok_or(DpError::CorruptTable("final bag has no feasible entry"))?;
    let mut solution = UpperDomSolution::default();
    let mut code = 0u64;
    for t in (0..run.events.len()).rev() {
        let (_, src) = run.tables[t + 1]
            .get(code)
            .ok_or(DpError::CorruptTable("source pointer leads to an infeasible entry"))?;
        if run.tables[t].get(src).is_none() {
            return Err(DpError::CorruptTable("source pointer leads to an infeasible entry"));
        }
        if let Event::Introduce(v) = run.events[t] {
            let before = &run.bags[t];
            let at = before.binary_search(&v).unwrap_err();
            let color = Color::from_digit(digit(code, at));
            // positions of the old bag inside the new one
            let moved = |q: usize| if q < at { q } else { q + 1 };
            let changed_to = |from: Color, to: Color| {
                (0..before.len()).find(|&q| {
                    Color::from_digit(digit(src, q)) == from && Color::from_digit(digit(code, moved(q))) == to
                })
            };
            match color {
                Color::I => {
                    solution.set.push(v);
                    solution.independent.push(v);
                }
                Color::F => {
                    let q = changed_to(Color::OStar, Color::P).ok_or(DpError::CorruptTable("F without a private"))?;
                    solution.set.push(v);
                    solution.supported.push(v);
                    solution.witness.insert(v, before[q]);
                }
                Color::FStar => {
                    solution.set.push(v);
                    solution.supported.push(v);
                }
                Color::P => {
                    let q = changed_to(Color::FStar, Color::F).ok_or(DpError::CorruptTable("P without a match"))?;
                    solution.witness.insert(before[q], v);
                }
                Color::OStar | Color::O => {}
            }
        }
        code = src;
    }
    solution.set.sort_unstable();
    solution.independent.sort_unstable();
    solution.supported.sort_unstable();
    if solution.size() as i32 != best {
        return Err(DpError::CorruptTable("replayed set size differs from the table value"));
    }
    solution
        .verify(g)
        .map_err(|_| DpError::CorruptTable("replayed set is not a minimal dominating set"))?;
    Ok(solution)
}

/// Maximum minimal dominating set of `g` using the decomposition `d`.
pub fn solve_pathwidth_dp(g: &Graph, d: &NicePathDecomposition) -> Result<UpperDomSolution, DpError> {
    solve_pathwidth_dp_with(g, d, &DpOptions::default()).map(|(s, _)| s)
}

/// As [`solve_pathwidth_dp`], with options and instrumentation.
pub fn solve_pathwidth_dp_with(
    g: &Graph,
    d: &NicePathDecomposition,
    opts: &DpOptions,
) -> Result<(UpperDomSolution, DpStats), DpError> {
    let run = run_tables(g, d, opts)?;
    let solution = reconstruct_solution(&run, g)?;
    Ok((solution, run.stats))
}
