use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A partition, stored as its positive parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts the input, so any multiset of nonnegative integers is accepted.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i`, 1-indexed, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.part(1)
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.largest() <= k
    }

    pub fn conjugate(&self) -> Self {
        let mut conj = Vec::with_capacity(self.largest());
        for c in 1..=self.largest() {
            conj.push(self.parts.iter().filter(|&&p| p >= c).count());
        }
        Partition { parts: conj }
    }

    /// `other ⊂ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Parts of both, merged and re-sorted.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_multiset(parts)
    }

    /// The parts padded with zeros to length `ell`, as signed integers.
    pub fn padded(&self, ell: usize) -> Vec<i64> {
        (1..=ell.max(self.len())).map(|i| self.part(i) as i64).collect()
    }

    /// All partitions contained in `self`, including the empty one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.sub_rec(0, usize::MAX, &mut cur, &mut out);
        out
    }

    fn sub_rec(&self, row: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == self.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            return;
        }
        let top = self.parts[row].min(cap);
        for v in 0..=top {
            cur.push(v);
            self.sub_rec(row + 1, v, cur, out);
            cur.pop();
        }
    }

    /// Row index (1-based) of every corner from which a box can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .collect()
    }

    pub fn with_box_added(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 || (row > 1 && self.part(row - 1) <= self.part(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Partitions of `n` with every part at most `max_part`, in lexicographically
    /// decreasing order.
    pub fn all_of_size(n: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for v in (1..=cap.min(rest)).rev() {
                cur.push(v);
                rec(rest - v, v, cur, out);
                cur.pop();
            }
        }
        rec(n, max_part, &mut cur, &mut out);
        out
    }

    /// Partitions of size at most `max_size` with parts at most `max_part`, by size.
    pub fn all_up_to(max_size: usize, max_part: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(|n| Partition::all_of_size(n, max_part)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `2,1,1`, `(2,1,1)`, and `()` or the empty string for ∅.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_and_union() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).union(&p(&[2, 2])), p(&[2, 2, 2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 0, 0]).unwrap(), p(&[2]));
    }

    #[test]
    fn subpartitions_of_21() {
        let subs = p(&[2, 1]).subpartitions();
        assert_eq!(subs.len(), 5);
        assert!(subs.contains(&Partition::empty()));
        assert!(subs.iter().all(|m| p(&[2, 1]).contains(m)));
    }

    #[test]
    fn counts() {
        assert_eq!(Partition::all_of_size(8, 8).len(), 22);
        assert_eq!(Partition::all_of_size(8, 4).len(), 15);
        assert_eq!(Partition::all_up_to(3, 3).len(), 7);
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["(2,1,1)", "()", "(5)"] {
            let q: Partition = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert_eq!("3, 2".parse::<Partition>().unwrap(), p(&[3, 2]));
    }
}
