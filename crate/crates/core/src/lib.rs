//! Exact verification engines for square-graph coloring claims.
//!
//! The crate is organized around three computational pillars and one
//! bookkeeping layer:
//!
//! * [`graph`] — small simple graphs on at most 64 vertices with bitset
//!   adjacency, plus the constructions (powers, joins, named families)
//!   and invariants (girth, clique number, chromatic number, Moore-ness)
//!   the claim registry needs.
//! * [`circulate`] — orientations of those graphs, exact even/odd
//!   circulation counting, restricted difference sums, and the
//!   orientation search that turns a nonvanishing difference into a
//!   coloring certificate.
//! * [`paint`] — the Lister/Painter online list-coloring game, solved
//!   exactly by memoized minimax, with extractable winning strategies,
//!   a strategy combinator, and a brute-force choosability check.
//! * [`claims`] — a registry of published numeric claims, each re-derived
//!   from scratch and reported as a pass/fail certificate.
//!
//! Everything is exact integer arithmetic; nothing here samples or
//! approximates. Budgets are deliberate: every engine refuses inputs
//! beyond the size it can settle exhaustively.

pub mod circulate;
pub mod claims;
pub mod error;
pub mod graph;
pub mod named;
pub mod paint;
#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use graph::{Graph, HighLowMarking, TokenFn};

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
