//! Algorithms for the Upper Dominating Set problem: find a minimal dominating
//! set of maximum size.
//!
//! The crate is `no_std` and only needs `alloc`. It contains
//!
//! * [`graph`]: simple undirected graphs with sorted adjacency lists,
//! * [`domination`]: domination / minimality checks and the S/I split of a
//!   minimal dominating set,
//! * [`mis`]: maximal independent set enumeration and greedy extension,
//! * [`oracle`]: an exhaustive solver used as ground truth,
//! * [`pathdecomp`]: nice path decompositions and their builders,
//! * [`dp`]: the six-color dynamic program over a nice path decomposition,
//! * [`approx`]: the partition-based sub-exponential r-approximation,
//! * [`reductions`]: generators for the Independent Set and q-CSP-6 gadget
//!   constructions together with forward witnesses.
//!
//! File formats, JSON and the command line front end live in the `updom`
//! crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod approx;
pub mod domination;
pub mod dp;
pub mod graph;
pub mod mis;
pub mod oracle;
pub mod pathdecomp;
pub mod reductions;

pub use approx::{approximate_uds, ApproxStats};
pub use domination::{check_minimal, is_dominating, MinimalityError, UpperDomSolution};
pub use dp::{solve_pathwidth_dp, DpError, DpStats};
pub use graph::{Graph, GraphError};
pub use mis::{enumerate_maximal_independent_sets, greedy_extend_independent};
pub use oracle::{brute_force_uds, OracleError, DEFAULT_ORACLE_LIMIT};
pub use pathdecomp::{DecompositionError, Event, NicePathDecomposition};
