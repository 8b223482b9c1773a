//! Exact character tables of small finite groups, and the statistics of how often
//! character values are zero or roots of unity.

pub mod analysis;
pub mod chartab;
pub mod cli;
pub mod cyclotomic;
pub mod dixon;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod permgroup;

pub use chartab::{CharacterTable, Violation};
pub use cyclotomic::{Cyclotomic, ValueClass, ValueKind};
pub use error::{Error, Result};
pub use permgroup::{GeneratorSet, GroupData, Permutation};
