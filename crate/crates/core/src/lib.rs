//! Canonical orderings of 4-connected planar triangulations and the drawings
//! they induce.
//!
//! The crate is organized around a pipeline:
//!
//! * [`graph`] — combinatorial embeddings (rotation systems) with face
//!   tracing and brute-force connectivity oracles,
//! * [`disk`] — triangulated disks and internal 4-connectivity,
//! * [`order`] — the peeling construction of a canonical ordering whose
//!   prefixes stay 3-connected and whose suffixes stay connected, plus an
//!   independent verifier,
//! * [`rectdual`] — rectangular duals built from such an ordering,
//! * [`ri`] — weak closed rectangle-of-influence drawings,
//! * [`gen`] — deterministic generators for test corpora.
//!
//! All geometry is exact rational arithmetic ([`rat::Rat`]); every
//! construction has a verifier that checks the defining properties from
//! scratch.

pub mod disk;
pub mod error;
pub mod gen;
pub mod graph;
pub mod order;
pub mod rat;
pub mod rectdual;
pub mod ri;
pub mod svg;

mod chain;
mod report;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
pub use graph::{Embedding, VertexSet};
pub use report::VerifyReport;
