//! Exact combinatorics of flag, balanced and color-shifted simplicial complexes.
//!
//! The crate has three layers:
//!
//! * value-level kernels: Turán coefficients ([`turan`]), canonical
//!   representations and shadow operators ([`canon`]);
//! * object-level constructions: simplicial complexes ([`complex`]), graphs and
//!   clique complexes ([`graph`]), colored/balanced/revlex machinery
//!   ([`colored`]), and reduced homology over prime fields ([`homology`]);
//! * a verification [`harness`] that runs one executable check per theorem or
//!   conjecture over exhaustive small-graph corpora and seeded balanced
//!   corpora, writing deterministic JSONL ledgers.
//!
//! All arithmetic is exact: big integers for coefficient computations, prime
//! fields for homology ranks. No floating point participates in any verdict.

pub mod canon;
pub mod colored;
pub mod complex;
pub mod error;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod report;
pub mod turan;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
