//! Kostka numbers, memoized.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::Partition;

type Cache = RwLock<HashMap<(Partition, Vec<usize>), u64>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Number of semistandard tableaux of shape `lam` with content `mu`.
///
/// `mu` may be any composition; the count does not depend on its order.
pub fn kostka(lam: &Partition, mu: &[usize]) -> Result<u64> {
    let total: usize = mu.iter().sum();
    if total != lam.size() {
        return Err(Error::SizeMismatch(lam.parts().to_vec(), mu.to_vec()));
    }
    let mut key: Vec<usize> = mu.iter().copied().filter(|&x| x > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    Ok(kostka_sorted(lam, &key))
}

fn kostka_sorted(lam: &Partition, mu: &[usize]) -> u64 {
    if mu.is_empty() {
        return u64::from(lam.is_empty());
    }
    if let Some(&k) = cache().read().expect("kostka cache").get(&(lam.clone(), mu.to_vec())) {
        return k;
    }
    // the largest label fills a horizontal strip of size mu.last()
    let (&last, rest) = mu.split_last().expect("non-empty");
    let mut total = 0u64;
    for_each_strip_removal(lam, last, &mut |nu| total += kostka_sorted(nu, rest));
    cache().write().expect("kostka cache").insert((lam.clone(), mu.to_vec()), total);
    total
}

/// Calls `f` on every `ν ⊆ λ` such that `λ / ν` is a horizontal strip of
/// `size` cells.
fn for_each_strip_removal(lam: &Partition, size: usize, f: &mut dyn FnMut(&Partition)) {
    fn go(lam: &Partition, r: usize, left: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&Partition)) {
        if r == lam.len() {
            if left == 0 {
                f(&Partition::new(cur.clone()).expect("strip removal keeps a partition"));
            }
            return;
        }
        let hi = lam.row(r);
        let lo = lam.row(r + 1);
        for keep in (lo..=hi).rev() {
            let take = hi - keep;
            if take > left {
                break;
            }
            cur.push(keep);
            go(lam, r + 1, left - take, cur, f);
            cur.pop();
        }
    }
    go(lam, 0, size, &mut Vec::with_capacity(lam.len()), f);
}
