//! Partitions and bipartitions.

use std::fmt;

use crate::error::{Error, Result};

/// A partition with its zero parts stripped.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Partition> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if !ok {
            return Err(Error::InvalidPartition { parts });
        }
        Ok(Partition { parts })
    }

    /// Keeps the positive entries of an already weakly decreasing sequence.
    pub(crate) fn from_decreasing(parts: impl IntoIterator<Item = u64>) -> Partition {
        let parts: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Every partition obtained by adding one box, one per addable row
    /// (the last one opens a new row).
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let cur = self.parts.get(i).copied().unwrap_or(0);
            if i == 0 || self.parts[i - 1] > cur {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Inserts a part, keeping the order. Zero is a no-op.
    pub fn with_part(&self, part: u64) -> Partition {
        let mut parts = self.parts.clone();
        if part > 0 {
            let at = parts.iter().position(|&p| p < part).unwrap_or(parts.len());
            parts.insert(at, part);
        }
        Partition { parts }
    }

    /// Removes one copy of `part`; `None` if it is not a part. Removing 0 is a no-op.
    pub fn without_part(&self, part: u64) -> Option<Partition> {
        if part == 0 {
            return Some(self.clone());
        }
        let at = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(at);
        Some(Partition { parts })
    }

    /// `self` contains `other` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: u64) -> Vec<Partition> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered pair of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub top: Partition,
    pub bottom: Partition,
}

impl Bipartition {
    pub fn new(top: Partition, bottom: Partition) -> Bipartition {
        Bipartition { top, bottom }
    }

    pub fn empty() -> Bipartition {
        Bipartition::default()
    }

    pub fn size(&self) -> u64 {
        self.top.size() + self.bottom.size()
    }

    /// Exchanges the two rows.
    pub fn swap(&self) -> Bipartition {
        Bipartition { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    /// One-box extensions, top row first.
    pub fn add_box(&self) -> Vec<Bipartition> {
        let mut out: Vec<Bipartition> =
            self.top.add_box().into_iter().map(|top| Bipartition { top, bottom: self.bottom.clone() }).collect();
        out.extend(self.bottom.add_box().into_iter().map(|bottom| Bipartition { top: self.top.clone(), bottom }));
        out
    }

    pub fn contains(&self, other: &Bipartition) -> bool {
        self.top.contains(&other.top) && self.bottom.contains(&other.bottom)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.top, self.bottom)
    }
}

/// All bipartitions of `n`, sorted.
pub fn bipartitions(n: u64) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        let tops = partitions(k);
        let bottoms = partitions(n - k);
        for t in &tops {
            for b in &bottoms {
                out.push(Bipartition { top: t.clone(), bottom: b.clone() });
            }
        }
    }
    out.sort();
    out
}

/// Number of partitions of each integer up to `n`.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            p[total] += p[total - part];
        }
    }
    p
}

/// Number of bipartitions of `n`.
pub fn bipartition_count(n: u64) -> u64 {
    let p = partition_counts(n as usize);
    (0..=n as usize).map(|k| p[k] * p[n as usize - k]).sum()
}
