//! Partitions, skew standard Young tableaux, excitation factors, and the
//! reconstruction of partitions from their minors.

pub mod excitation;
pub mod lab;
pub mod partition;
pub mod sonar;
pub mod syt;

pub use partition::{Cell, HookGrid, Partition, PartitionError};
