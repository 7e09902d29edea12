//! Beta-sets (Maya diagrams) and single ribbon moves on the abacus.
//!
//! A partition `λ` corresponds to the set `M(λ) = { r + 1 - λ_r : r ≥ 0 }`,
//! the contents of the cells just left of the vertical boundary steps. The
//! empty partition gives `Z_{>0}`. Adding an `m`-ribbon moves one element
//! `x` to `x - m`; removing one moves it back up.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A subset of `Z` containing all large integers and no very small ones,
/// stored as its symmetric difference with `Z_{>0}`.
///
/// Always balanced: as many non-positive members as positive non-members.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BetaSet {
    low_members: BTreeSet<i64>,
    high_gaps: BTreeSet<i64>,
}

/// Record of one `m`-jump `x -> x - m`, i.e. one added ribbon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RibbonMove {
    pub element: i64,
    pub ribbon_length: u32,
    pub height: u32,
    pub content: i64,
}

impl RibbonMove {
    pub fn spin(&self) -> u32 {
        self.height - 1
    }
}

impl BetaSet {
    /// `Z_{>0}`, the beta-set of the empty partition.
    pub fn positive() -> Self {
        BetaSet::default()
    }

    /// Builds the set that agrees with `pred` on `[lo, hi)`, contains every
    /// integer `≥ hi` and nothing below `lo`.
    pub fn from_window(lo: i64, hi: i64, pred: impl Fn(i64) -> bool) -> Result<Self> {
        let mut set = BetaSet::default();
        for x in lo.min(1)..hi.max(1) {
            let member = x >= lo && (x >= hi || pred(x));
            if x <= 0 && member {
                set.low_members.insert(x);
            } else if x > 0 && !member {
                set.high_gaps.insert(x);
            }
        }
        set.check_balanced()?;
        Ok(set)
    }

    /// Builds the set generated by `gens` under `+step`.
    pub fn from_generators(gens: &[i64], step: i64) -> Result<Self> {
        let lo = gens.iter().copied().min().unwrap_or(1);
        let hi = gens.iter().copied().max().unwrap_or(1) + 1;
        BetaSet::from_window(lo, hi, |x| {
            gens.iter().any(|&g| x >= g && (x - g) % step == 0)
        })
    }

    fn check_balanced(&self) -> Result<()> {
        if self.low_members.len() != self.high_gaps.len() {
            return Err(Error::Unbalanced {
                members: self.low_members.len(),
                gaps: self.high_gaps.len(),
            });
        }
        Ok(())
    }

    pub fn low_members(&self) -> &BTreeSet<i64> {
        &self.low_members
    }

    pub fn high_gaps(&self) -> &BTreeSet<i64> {
        &self.high_gaps
    }

    pub fn contains(&self, x: i64) -> bool {
        if x <= 0 {
            self.low_members.contains(&x)
        } else {
            !self.high_gaps.contains(&x)
        }
    }

    pub fn smallest(&self) -> i64 {
        if let Some(&x) = self.low_members.first() {
            return x;
        }
        // no low members means no gaps either
        1
    }

    /// Smallest `u` such that every integer `≥ u` is a member.
    pub fn upper(&self) -> i64 {
        self.high_gaps.last().map_or(1, |g| g + 1)
    }

    /// Members in `[min, upper)`; everything from `upper` on is implied.
    pub fn finite_members(&self) -> Vec<i64> {
        (self.smallest()..self.upper()).filter(|&x| self.contains(x)).collect()
    }

    pub fn is_invariant(&self, step: u32) -> bool {
        let step = step as i64;
        (self.smallest()..self.upper()).all(|x| !self.contains(x) || self.contains(x + step))
    }

    fn insert(&mut self, x: i64) {
        if x <= 0 {
            self.low_members.insert(x);
        } else {
            self.high_gaps.remove(&x);
        }
    }

    fn remove(&mut self, x: i64) {
        if x <= 0 {
            self.low_members.remove(&x);
        } else {
            self.high_gaps.insert(x);
        }
    }

    pub fn from_partition(lam: &Partition) -> Self {
        let len = lam.len() as i64;
        let beads: BTreeSet<i64> = (0..lam.len())
            .map(|r| r as i64 + 1 - lam.row(r) as i64)
            .collect();
        BetaSet {
            low_members: beads.iter().copied().filter(|&x| x <= 0).collect(),
            high_gaps: (1..=len).filter(|x| !beads.contains(x)).collect(),
        }
    }

    /// Each member contributes a row whose length is the number of
    /// non-members above it.
    pub fn to_partition(&self) -> Partition {
        let upper = self.upper();
        let mut parts = Vec::new();
        let mut gaps_above = 0usize;
        for x in (self.smallest()..upper).rev() {
            if self.contains(x) {
                if gaps_above > 0 {
                    parts.push(gaps_above);
                }
            } else {
                gaps_above += 1;
            }
        }
        parts.reverse();
        Partition::from_unsorted(parts)
    }

    /// Moves `x` to `x - m`, adding one `m`-ribbon to the partition.
    pub fn apply_jump(&self, x: i64, m: u32) -> Result<(BetaSet, RibbonMove)> {
        if m == 0 {
            return Err(Error::NonPositive("ribbon length"));
        }
        if !self.contains(x) {
            return Err(Error::InvalidJump { element: x, step: m, reason: "element not in set" });
        }
        let target = x - m as i64;
        if self.contains(target) {
            return Err(Error::InvalidJump { element: x, step: m, reason: "target occupied" });
        }
        let jumped = ((target + 1)..x).filter(|&y| self.contains(y)).count() as u32;
        let mut next = self.clone();
        next.remove(x);
        next.insert(target);
        let mv = RibbonMove {
            element: x,
            ribbon_length: m,
            height: jumped + 1,
            content: x - 1,
        };
        Ok((next, mv))
    }

    /// Moves `x` to `x + m`, removing one `m`-ribbon from the partition.
    pub fn retract(&self, x: i64, m: u32) -> Result<BetaSet> {
        if !self.contains(x) {
            return Err(Error::InvalidJump { element: x, step: m, reason: "element not in set" });
        }
        if self.contains(x + m as i64) {
            return Err(Error::InvalidJump { element: x, step: m, reason: "target occupied" });
        }
        let mut next = self.clone();
        next.remove(x);
        next.insert(x + m as i64);
        Ok(next)
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.finite_members().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}} ∪ Z≥{}", self.upper())
    }
}
