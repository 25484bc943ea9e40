//! Partition and multipartition combinatorics: Young diagrams, nodes,
//! hook lengths, beta numbers, symbols, and deterministic enumeration.

mod enumerate;
mod multipartition;
mod partition;

pub use enumerate::{enumerate_multipartitions, enumerate_partitions, MultiPartitions, Partitions};
pub use multipartition::{BetaSet, MultiPartition, Symbol};
pub use partition::{Node, Partition};

/// Errors raised by constructors and node-addressed operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatoricsError {
    #[error("partition parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("node ({0},{1}) not in diagram")]
    NodeNotInDiagram(usize, usize),
    #[error("L smaller than length: L={l} < {len}")]
    LTooSmall { l: usize, len: usize },
    #[error("multipartition must have at least one component")]
    EmptyMultiPartition,
}
