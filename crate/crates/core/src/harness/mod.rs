//! Exhaustive and randomized corpora plus one executable check per theorem
//! and conjecture, with persisted, resumable results.

pub mod balanced;
pub mod checks;
pub mod corpus;
pub mod ledger;
pub mod suite;

pub use balanced::{random_color_shifted, BalancedConfig};
pub use checks::CheckId;
pub use corpus::{canonical_form, enumerate_graphs, Corpus};
pub use suite::{run_suite, Summary, SuiteConfig};
