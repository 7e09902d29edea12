//! `m`-cores and `m`-quotients on the abacus.

use crate::beta::BetaSet;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Hook-length test, cross-checked against invariance of the beta-set.
pub fn is_m_core(lam: &Partition, m: u32) -> bool {
    let by_hooks = !lam.hook_lengths().contains(&(m as usize));
    debug_assert_eq!(by_hooks, BetaSet::from_partition(lam).is_invariant(m));
    by_hooks
}

/// Pushes every bead as far right as it can go in steps of `m`, always
/// moving the leftmost movable bead first.
pub fn m_core(lam: &Partition, m: u32) -> Partition {
    let mut set = BetaSet::from_partition(lam);
    let step = m as i64;
    loop {
        let movable = (set.smallest()..set.upper()).find(|&x| set.contains(x) && !set.contains(x + step));
        match movable {
            Some(x) => set = set.retract(x, m).expect("movable bead"),
            None => return set.to_partition(),
        }
    }
}

/// Partition of a set given by its members below `upper` (everything at or
/// above `upper` is a member). The set need not be balanced.
fn partition_of_charged(members: &[i64], upper: i64) -> Partition {
    let mut parts = Vec::with_capacity(members.len());
    for &a in members {
        let above = (a + 1..upper).filter(|y| members.binary_search(y).is_err()).count();
        parts.push(above);
    }
    Partition::from_unsorted(parts)
}

/// The `m` partitions read off the residue classes of the beta-set; entry `i`
/// comes from the beads `≡ i (mod m)`, rescaled by `(x - i) / m`.
pub fn m_quotient(lam: &Partition, m: u32) -> Vec<Partition> {
    let set = BetaSet::from_partition(lam);
    let step = m as i64;
    let lo = set.smallest().div_euclid(step) - 1;
    let hi = set.upper().div_euclid(step) + 1;
    (0..step)
        .map(|i| {
            let members: Vec<i64> = (lo..hi).filter(|k| set.contains(i + step * k)).collect();
            partition_of_charged(&members, hi)
        })
        .collect()
}

/// Inverse of `(m_core, m_quotient)`.
pub fn from_core_and_quotient(core: &Partition, quots: &[Partition], m: u32) -> Result<Partition> {
    if m == 0 {
        return Err(Error::NonPositive("m"));
    }
    if quots.len() != m as usize {
        return Err(Error::QuotientLength { expected: m as usize, got: quots.len() });
    }
    if !is_m_core(core, m) {
        return Err(Error::NotACore(core.parts().to_vec(), m));
    }
    let set = BetaSet::from_partition(core);
    let step = m as i64;
    // lowest core bead in each residue class
    let firsts: Vec<i64> = (0..step)
        .map(|i| {
            (set.smallest()..)
                .find(|&x| x.rem_euclid(step) == i && set.contains(x))
                .expect("beta-set is cofinite upward")
        })
        .collect();
    let mut beads = std::collections::BTreeSet::new();
    let mut hi = set.upper();
    for (q, &first) in quots.iter().zip(&firsts) {
        for r in 0..q.len() {
            beads.insert(first + step * (r as i64 - q.row(r) as i64));
        }
        hi = hi.max(first + step * q.len() as i64 + 1);
    }
    let lo = beads.first().copied().unwrap_or(hi).min(set.smallest());
    let result = BetaSet::from_window(lo, hi, |x| {
        let i = x.rem_euclid(step) as usize;
        beads.contains(&x) || x >= firsts[i] + step * quots[i].len() as i64
    })?;
    Ok(result.to_partition())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn running_core() -> Partition {
        p(&[7, 3, 2, 1, 1, 1, 1])
    }

    /// Removes rim hooks greedily from the rightmost movable bead: a
    /// different order from `m_core`.
    fn m_core_rightmost_first(lam: &Partition, m: u32) -> Partition {
        let mut set = BetaSet::from_partition(lam);
        let step = m as i64;
        while let Some(x) = (set.smallest()..set.upper())
            .rev()
            .find(|&x| set.contains(x) && !set.contains(x + step))
        {
            set = set.retract(x, m).unwrap();
        }
        set.to_partition()
    }

    #[test]
    fn core_examples() {
        for m in 1..6 {
            assert!(is_m_core(&Partition::empty(), m));
        }
        assert!(is_m_core(&running_core(), 7));
        assert!(is_m_core(&running_core(), 5));
        assert!(!is_m_core(&p(&[2, 1]), 3));
        assert_eq!(m_core(&p(&[7]), 7), Partition::empty());
        assert_eq!(m_core(&running_core(), 7), running_core());
        assert_eq!(m_core(&p(&[2, 1]), 3), Partition::empty());
    }

    #[test]
    fn quotient_examples() {
        assert!(m_quotient(&Partition::empty(), 4).iter().all(Partition::is_empty));
        for m in 1..7u32 {
            let q = m_quotient(&p(&[m as usize]), m);
            let nonempty: Vec<_> = q.iter().filter(|x| !x.is_empty()).collect();
            assert_eq!(nonempty, vec![&p(&[1])]);
            assert_eq!(from_core_and_quotient(&Partition::empty(), &q, m).unwrap(), p(&[m as usize]));
        }
        let empties = vec![Partition::empty(); 7];
        assert_eq!(from_core_and_quotient(&running_core(), &empties, 7).unwrap(), running_core());
        assert_eq!(
            from_core_and_quotient(&Partition::empty(), &empties, 7).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn rebuild_rejects_non_core() {
        let q = vec![Partition::empty(); 3];
        assert!(matches!(from_core_and_quotient(&p(&[2, 1]), &q, 3), Err(Error::NotACore(..))));
        assert!(matches!(
            from_core_and_quotient(&Partition::empty(), &q, 2),
            Err(Error::QuotientLength { .. })
        ));
    }

    #[test]
    fn exhaustive_small_partitions() {
        for size in 0..=20 {
            for lam in Partition::all_of_size(size) {
                for m in 1..=8 {
                    // is_m_core cross-checks hooks against invariance internally
                    let hooks = !lam.hook_lengths().contains(&(m as usize));
                    assert_eq!(hooks, BetaSet::from_partition(&lam).is_invariant(m));
                    let core = m_core(&lam, m);
                    assert!(is_m_core(&core, m));
                    assert_eq!(core, m_core_rightmost_first(&lam, m));
                    let quots = m_quotient(&lam, m);
                    let weight: usize = quots.iter().map(Partition::size).sum();
                    assert_eq!(lam.size(), core.size() + m as usize * weight);
                    assert_eq!(from_core_and_quotient(&core, &quots, m).unwrap(), lam);
                }
            }
        }
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..=max, 0..=max).prop_filter_map("size", move |v| {
            let lam = Partition::from_unsorted(v);
            (lam.size() <= 20).then_some(lam)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn core_quotient_roundtrip(lam in arb_partition(20), m in 1u32..=8) {
            let core = m_core(&lam, m);
            let quots = m_quotient(&lam, m);
            prop_assert_eq!(from_core_and_quotient(&core, &quots, m).unwrap(), lam);
        }

        #[test]
        fn beta_roundtrip(lam in arb_partition(20)) {
            let set = BetaSet::from_partition(&lam);
            prop_assert_eq!(set.low_members().len(), set.high_gaps().len());
            prop_assert_eq!(set.to_partition(), lam);
        }

        #[test]
        fn jump_adds_one_ribbon(lam in arb_partition(12), m in 1u32..=6, pick in 0usize..64) {
            let set = BetaSet::from_partition(&lam);
            let movable: Vec<i64> = (set.smallest()..set.upper() + m as i64)
                .filter(|&x| set.contains(x) && !set.contains(x - m as i64))
                .collect();
            let x = movable[pick % movable.len()];
            let (next, mv) = set.apply_jump(x, m).unwrap();
            prop_assert_eq!(next.low_members().len(), next.high_gaps().len());
            let mu = next.to_partition();
            prop_assert_eq!(mu.size(), lam.size() + m as usize);
            prop_assert!(mu.contains(&lam));
            // the added cells span exactly `height` rows
            let rows: std::collections::BTreeSet<usize> =
                mu.cells().filter(|&(r, c)| !lam.contains_cell(r, c)).map(|(r, _)| r).collect();
            prop_assert_eq!(rows.len() as u32, mv.height);
            prop_assert_eq!(mv.spin(), mv.height - 1);
            prop_assert_eq!(mv.content, x - 1);
        }
    }
}
