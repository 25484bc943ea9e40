//! Multipartitions, beta numbers, and symbols.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CombinatoricsError, Partition};

/// An ordered d-tuple of partitions, d >= 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self, CombinatoricsError> {
        if components.is_empty() {
            return Err(CombinatoricsError::EmptyMultiPartition);
        }
        Ok(MultiPartition { components })
    }

    /// The empty d-tuple (all components empty).
    pub fn empty(d: usize) -> Result<Self, CombinatoricsError> {
        Self::new(vec![Partition::empty(); d])
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, s: usize) -> &Partition {
        &self.components[s]
    }

    /// Number of components.
    pub fn d(&self) -> usize {
        self.components.len()
    }

    /// Total number of boxes r.
    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// The length of the multipartition: max component length.
    pub fn length(&self) -> usize {
        self.components.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// All parts of all components, reordered into a single partition of r.
    pub fn bar_partition(&self) -> Partition {
        let mut parts: Vec<usize> = self
            .components
            .iter()
            .flat_map(|c| c.parts().iter().copied())
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts form a partition")
    }

    /// The L-symbol: one beta set per component, all with the same L.
    pub fn symbol(&self, l: usize) -> Result<Symbol, CombinatoricsError> {
        let rows = self
            .components
            .iter()
            .map(|c| c.beta_set(l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Symbol { l, rows })
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (s, c) in self.components.iter().enumerate() {
            if s > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPartition{self}")
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.components.len()))?;
        for c in &self.components {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ComponentsVisitor;

        impl<'de> Visitor<'de> for ComponentsVisitor {
            type Value = MultiPartition;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-empty array of partitions")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<MultiPartition, A::Error> {
                let mut components = Vec::new();
                while let Some(c) = seq.next_element::<Partition>()? {
                    components.push(c);
                }
                MultiPartition::new(components).map_err(serde::de::Error::custom)
            }
        }

        deserializer.deserialize_seq(ComponentsVisitor)
    }
}

/// The L-beta numbers of a partition: beta_i = lambda_i + L - i, strictly
/// decreasing, for i = 1..=L.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaSet {
    betas: Vec<u64>,
}

impl BetaSet {
    pub fn betas(&self) -> &[u64] {
        &self.betas
    }

    pub fn l(&self) -> usize {
        self.betas.len()
    }
}

impl Partition {
    /// The L-beta numbers for this partition. Requires L >= len().
    pub fn beta_set(&self, l: usize) -> Result<BetaSet, CombinatoricsError> {
        if l < self.len() || l == 0 {
            return Err(CombinatoricsError::LTooSmall { l, len: self.len() });
        }
        let betas = (1..=l)
            .map(|i| (self.part(i) + l - i) as u64)
            .collect();
        Ok(BetaSet { betas })
    }
}

/// The L-symbol of a multipartition: d beta sets sharing the same L.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Symbol {
    l: usize,
    rows: Vec<BetaSet>,
}

impl Symbol {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn rows(&self) -> &[BetaSet] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(components: &[&[usize]]) -> MultiPartition {
        MultiPartition::new(components.iter().map(|c| p(c)).collect()).unwrap()
    }

    #[test]
    fn rejects_zero_components() {
        assert_eq!(
            MultiPartition::new(vec![]),
            Err(CombinatoricsError::EmptyMultiPartition)
        );
    }

    #[test]
    fn bar_partition_examples() {
        // worked example from the source definition
        assert_eq!(mp(&[&[4, 1], &[], &[2, 1]]).bar_partition(), p(&[4, 2, 1, 1]));
        assert_eq!(mp(&[&[1], &[1]]).bar_partition(), p(&[1, 1]));
        assert_eq!(mp(&[&[], &[]]).bar_partition(), Partition::empty());
    }

    #[test]
    fn size_and_length() {
        let lam = mp(&[&[4, 1], &[], &[2, 1]]);
        assert_eq!(lam.size(), 8);
        assert_eq!(lam.d(), 3);
        assert_eq!(lam.length(), 2);
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(p(&[3, 1]).beta_set(2).unwrap().betas(), &[4, 1]);
        assert_eq!(Partition::empty().beta_set(3).unwrap().betas(), &[2, 1, 0]);
        assert_eq!(p(&[2]).beta_set(1).unwrap().betas(), &[2]);
        assert_eq!(
            p(&[3, 1]).beta_set(1),
            Err(CombinatoricsError::LTooSmall { l: 1, len: 2 })
        );
    }

    #[test]
    fn beta_set_shift() {
        // beta_set(lambda, L+1) = increment all entries of beta_set(lambda, L), append 0
        for lam in [p(&[3, 1]), p(&[2, 2, 1]), Partition::empty()] {
            for l in lam.len().max(1)..lam.len() + 4 {
                let small = lam.beta_set(l).unwrap();
                let big = lam.beta_set(l + 1).unwrap();
                let mut expected: Vec<u64> = small.betas().iter().map(|b| b + 1).collect();
                expected.push(0);
                assert_eq!(big.betas(), expected.as_slice());
            }
        }
    }

    #[test]
    fn symbol_examples() {
        let sym = mp(&[&[1], &[]]).symbol(1).unwrap();
        assert_eq!(sym.rows()[0].betas(), &[1]);
        assert_eq!(sym.rows()[1].betas(), &[0]);

        let sym = mp(&[&[], &[]]).symbol(2).unwrap();
        assert_eq!(sym.rows()[0].betas(), &[1, 0]);
        assert_eq!(sym.rows()[1].betas(), &[1, 0]);

        let sym = mp(&[&[2, 1], &[1]]).symbol(2).unwrap();
        assert_eq!(sym.rows()[0].betas(), &[3, 1]);
        assert_eq!(sym.rows()[1].betas(), &[2, 0]);

        assert!(mp(&[&[2, 1], &[1]]).symbol(1).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let lam: MultiPartition = serde_json::from_str("[[4,1],[],[2,1]]").unwrap();
        assert_eq!(lam, mp(&[&[4, 1], &[], &[2, 1]]));
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[[4,1],[],[2,1]]");
        assert!(serde_json::from_str::<MultiPartition>("[]").is_err());
        assert!(serde_json::from_str::<MultiPartition>("[[1,2]]").is_err());
    }
}
