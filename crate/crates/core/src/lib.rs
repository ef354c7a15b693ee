//! Anti-Ramsey and Turán machinery for loose paths and cycles in uniform
//! hypergraphs.
//!
//! The crate is organized around one pipeline:
//!
//! * [`hypergraph`] — r-set ranking, hypergraph storage, shadows, pair degrees;
//! * [`pattern`] / [`search`] — loose/linear path and cycle recognition plus a
//!   pruned backtracking search with explicit node budgets;
//! * [`coloring`] — edge colorings of the complete r-graph, rainbow tests and
//!   rainbow-copy search;
//! * [`formulas`] — exact big-integer evaluators for the closed forms and the
//!   cross-formula consistency audit;
//! * [`construct`] — the lower-bound colorings and Turán-extremal hypergraphs,
//!   with search-backed certificates;
//! * [`oracle`] — exact desk-scale brute-force Turán and anti-Ramsey oracles,
//!   independent of every closed form;
//! * [`structure`] — crossing/missing accounting, shadow-degree splits and the
//!   constructive rainbow extension;
//! * [`audit`] — the full acceptance suite as a library call.

pub mod audit;
pub mod binom;
pub mod coloring;
pub mod construct;
pub mod error;
pub mod formulas;
pub mod hypergraph;
pub mod instances;
pub mod naive;
pub mod oracle;
pub mod pattern;
pub mod search;
pub mod structure;

pub use error::Error;
pub use hypergraph::{Hypergraph, RSet, Vertex};
pub use pattern::{CopyWitness, PatternSpec, Shape, Tightness};
pub use search::{SearchReport, SearchStatus};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
