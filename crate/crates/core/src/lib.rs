//! Uniseriality of two-part Specht and Young modules for symmetric groups in
//! characteristic 2, and the decomposition of odd hook Specht modules into
//! two-part Young modules.

pub mod arith;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod hook;
pub mod partition;
pub mod render;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{HookShape, SimpleLabel, TwoPartPartition};
