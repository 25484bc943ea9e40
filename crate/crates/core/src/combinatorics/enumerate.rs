//! Streamed enumeration of partitions and multipartitions in a fixed,
//! reproducible order: partitions lexicographically decreasing, components
//! varied rightmost-fastest.

use super::{MultiPartition, Partition};

/// All partitions of `m`, lexicographically decreasing, starting at (m).
pub fn enumerate_partitions(m: usize) -> Partitions {
    Partitions {
        current: Some(if m == 0 { Vec::new() } else { vec![m] }),
    }
}

pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::new(cur.clone()).expect("enumeration yields valid partitions");
        // successor in decreasing lex order: shrink the last part > 1 and
        // refill greedily with parts bounded by the new value
        if let Some(k) = cur.iter().rposition(|&x| x > 1) {
            let mut rem = cur[k] + (cur.len() - 1 - k);
            let cap = cur[k] - 1;
            let mut next = cur[..k].to_vec();
            while rem > 0 {
                let part = cap.min(rem);
                next.push(part);
                rem -= part;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All d-tuples of partitions with total size `r`, exactly once.
///
/// Component sizes run through compositions of `r` in decreasing lex order
/// and, for a fixed composition, the rightmost component varies fastest.
pub fn enumerate_multipartitions(d: usize, r: usize) -> MultiPartitions {
    assert!(d >= 1, "multipartitions need d >= 1");
    let mut it = MultiPartitions {
        d,
        r,
        sizes: {
            let mut sizes = vec![0; d];
            sizes[0] = r;
            Some(sizes)
        },
        choices: Vec::new(),
        index: vec![0; d],
    };
    it.load_composition();
    it
}

pub struct MultiPartitions {
    d: usize,
    r: usize,
    /// Current composition of r into d parts; None when exhausted.
    sizes: Option<Vec<usize>>,
    /// Partitions of each current component size.
    choices: Vec<Vec<Partition>>,
    /// Odometer into `choices`, rightmost digit fastest.
    index: Vec<usize>,
}

impl MultiPartitions {
    fn load_composition(&mut self) {
        if let Some(sizes) = &self.sizes {
            self.choices = sizes
                .iter()
                .map(|&m| enumerate_partitions(m).collect())
                .collect();
            self.index = vec![0; self.d];
        }
    }

    fn advance(&mut self) {
        // odometer step over the per-component partition lists
        for s in (0..self.d).rev() {
            self.index[s] += 1;
            if self.index[s] < self.choices[s].len() {
                return;
            }
            self.index[s] = 0;
        }
        // odometer wrapped: move to the next composition in decreasing lex order
        let sizes = self.sizes.as_mut().expect("advance called while live");
        match sizes[..self.d - 1].iter().rposition(|&m| m > 0) {
            Some(i) => {
                sizes[i] -= 1;
                let moved: usize = 1 + sizes[i + 1..].iter().sum::<usize>();
                sizes[i + 1..].iter_mut().for_each(|m| *m = 0);
                sizes[i + 1] = moved;
                self.load_composition();
            }
            None => self.sizes = None,
        }
    }
}

impl Iterator for MultiPartitions {
    type Item = MultiPartition;

    fn next(&mut self) -> Option<MultiPartition> {
        self.sizes.as_ref()?;
        let components: Vec<Partition> = self
            .index
            .iter()
            .enumerate()
            .map(|(s, &i)| self.choices[s][i].clone())
            .collect();
        self.advance();
        Some(MultiPartition::new(components).expect("d >= 1"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        if self.sizes.is_none() {
            (0, Some(0))
        } else {
            (1, None)
        }
    }
}

impl MultiPartitions {
    /// Total size r of every yielded multipartition.
    pub fn r(&self) -> usize {
        self.r
    }
}
