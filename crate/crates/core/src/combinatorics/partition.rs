//! Single partitions and their Young diagrams.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CombinatoricsError;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped at construction, so equality is structural
/// and `len()` is the number of nonzero parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell (i, j) of a Young diagram, with 1-based row and column.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    /// The content j - i of the node.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence.
    /// Trailing zeros are stripped; interior zeros or increases are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::InvalidPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, i.e. the length of the partition.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part with 1-based index; 0 beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 {
            self.parts.get(i - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// The nodes of the Young diagram in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Node::new(i + 1, j)))
    }

    /// Whether `x` lies in the diagram.
    pub fn contains(&self, x: Node) -> bool {
        x.row >= 1 && x.col >= 1 && x.col <= self.part(x.row)
    }

    fn check_node(&self, x: Node) -> Result<(), CombinatoricsError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(CombinatoricsError::NodeNotInDiagram(x.row, x.col))
        }
    }

    /// Whether removing `x` leaves a partition diagram.
    pub fn is_removable(&self, x: Node) -> Result<bool, CombinatoricsError> {
        self.check_node(x)?;
        Ok(x.col == self.part(x.row) && self.part(x.row + 1) < self.part(x.row))
    }

    /// The classical hook length of `x` in this partition; always >= 1.
    pub fn classical_hook(&self, x: Node) -> Result<i64, CombinatoricsError> {
        self.check_node(x)?;
        let conj = self.conjugate();
        Ok(hook_term(self.part(x.row), x.row, conj.part(x.col), x.col))
    }

    /// The generalized hook length of `x` (a node of `self`) with respect to
    /// `mu`: `lambda_i - i + mu'_j - j + 1`. May be zero or negative.
    pub fn generalized_hook(&self, mu: &Partition, x: Node) -> Result<i64, CombinatoricsError> {
        self.check_node(x)?;
        let mu_conj = mu.conjugate();
        Ok(hook_term(self.part(x.row), x.row, mu_conj.part(x.col), x.col))
    }

    /// The statistic n(lambda) = sum_i (i-1) lambda_i.
    pub fn n_value(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }
}

/// lambda_i - i + mu'_j - j + 1, shared by the classical and generalized hooks.
pub(crate) fn hook_term(lambda_i: usize, i: usize, mu_conj_j: usize, j: usize) -> i64 {
    lambda_i as i64 - i as i64 + mu_conj_j as i64 - j as i64 + 1
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PartsVisitor;

        impl<'de> Visitor<'de> for PartsVisitor {
            type Value = Partition;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of positive, weakly decreasing integers")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<u64>()? {
                    if p == 0 {
                        return Err(serde::de::Error::custom("partition parts must be positive"));
                    }
                    parts.push(p as usize);
                }
                Partition::new(parts).map_err(serde::de::Error::custom)
            }
        }

        deserializer.deserialize_seq(PartsVisitor)
    }
}
