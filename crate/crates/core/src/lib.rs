//! Exact invariants, structural searches and certificates for P5-free graphs.

pub mod bitset;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod graph;
pub mod experiments;
pub mod graph6;
pub mod invariants;
pub mod rational;
pub mod structure;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, PairRelation, SparsityClass, WeightFunction, MAX_BLOWUP_VERTICES};
pub use rational::Rational;
