//! Integer partitions and skew shapes.
//!
//! Diagrams are drawn in French notation: row 0 is the bottom (longest) row,
//! rows and columns are 0-based, and the cell in row `r`, column `c` has
//! content `r - c`.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary row lengths into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length of row `r`, zero past the last row.
    pub fn row(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col < self.row(row)
    }

    /// Cell-wise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All cells as `(row, col)` pairs, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of every cell, as a sorted multiset.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.transpose();
        let mut hooks: Vec<usize> = self
            .cells()
            .map(|(r, c)| (self.parts[r] - c - 1) + (conj.parts[c] - r - 1) + 1)
            .collect();
        hooks.sort_unstable();
        hooks
    }

    /// Dominance order `self ⊵ other` (both assumed to have the same size).
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.row(i);
            b += other.row(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
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
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// A skew shape `outer \ inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts,
                inner: inner.parts,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.outer.contains_cell(row, col) && !self.inner.contains_cell(row, col)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer.cells().filter(|&(r, c)| !self.inner.contains_cell(r, c))
    }
}
