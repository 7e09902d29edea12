//! Affine permutations in window notation, `m`-stability, the set
//! `Δ_ω = { x : ω(x) > 0 }`, and the `area` / `dinv` statistics.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::beta::BetaSet;
use crate::error::{Error, Result};

pub(crate) fn check_coprime(m: u32, n: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::NonPositive("m"));
    }
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    Ok(())
}

/// `(m - 1)(n - 1) / 2`, the maximal area.
pub fn delta(m: u32, n: u32) -> u32 {
    (m - 1) * (n - 1) / 2
}

/// A bijection `ω : Z -> Z` with `ω(x + n) = ω(x) + n`, stored as its
/// window `(ω(1), ..., ω(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    /// Validates distinct residues mod `n` and window sum `n(n+1)/2`.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::InvalidWindow { window, reason: "empty window" });
        }
        let residues: BTreeSet<i64> = window.iter().map(|v| v.rem_euclid(n)).collect();
        if residues.len() as i64 != n {
            return Err(Error::InvalidWindow { window, reason: "values collide modulo n" });
        }
        if window.iter().sum::<i64>() != n * (n + 1) / 2 {
            return Err(Error::InvalidWindow { window, reason: "window sum is not n(n+1)/2" });
        }
        Ok(AffinePermutation { window })
    }

    pub fn identity(n: u32) -> Self {
        AffinePermutation { window: (1..=n as i64).collect() }
    }

    /// The permutation taking each generator `gens[k]` to `values[k]`,
    /// where the generators cover every residue class mod `n` once.
    pub fn from_assignment(gens: &[i64], values: &[i64]) -> Result<Self> {
        let n = gens.len() as i64;
        let mut window = vec![0i64; gens.len()];
        let mut seen = vec![false; gens.len()];
        for (&g, &v) in gens.iter().zip(values) {
            let slot = (g - 1).rem_euclid(n);
            let shift = (g - 1).div_euclid(n);
            if std::mem::replace(&mut seen[slot as usize], true) {
                return Err(Error::InvalidWindow { window: gens.to_vec(), reason: "repeated residue" });
            }
            window[slot as usize] = v - shift * n;
        }
        AffinePermutation::new(window)
    }

    pub fn n(&self) -> u32 {
        self.window.len() as u32
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn evaluate(&self, x: i64) -> i64 {
        let n = self.window.len() as i64;
        self.window[(x - 1).rem_euclid(n) as usize] + (x - 1).div_euclid(n) * n
    }

    pub fn invert(&self) -> AffinePermutation {
        let n = self.window.len() as i64;
        let mut inv = vec![0i64; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            let k = (v - 1).div_euclid(n);
            inv[r as usize] = i as i64 + 1 - k * n;
        }
        AffinePermutation { window: inv }
    }

    /// The word `(ω⁻¹(1), ..., ω⁻¹(n))`.
    pub fn inverse_word(&self) -> Vec<i64> {
        self.invert().window
    }

    /// No inversions of height `m`: `ω(x + m) > ω(x)` for all `x`.
    pub fn is_m_stable(&self, m: u32) -> bool {
        let n = self.window.len() as i64;
        (1..=n).all(|x| self.evaluate(x + m as i64) > self.evaluate(x))
    }

    fn require_stable(&self, m: u32) -> Result<()> {
        check_coprime(m, self.n())?;
        if !self.is_m_stable(m) {
            return Err(Error::NotStable(m));
        }
        Ok(())
    }

    /// `Δ_ω`, generated under `+n` by `ω⁻¹(1), ..., ω⁻¹(n)`.
    pub fn delta_set(&self) -> BetaSet {
        BetaSet::from_generators(&self.inverse_word(), self.n() as i64)
            .expect("Δ_ω of an affine permutation is balanced")
    }

    /// `1 - min Δ_ω`.
    pub fn area(&self, m: u32) -> Result<u32> {
        self.require_stable(m)?;
        let area = 1 - self.delta_set().smallest();
        debug_assert_eq!(
            area,
            delta(m, self.n()) as i64
                - crate::parking::anderson(self, m)
                    .expect("stable")
                    .values()
                    .iter()
                    .map(|&v| v as i64)
                    .sum::<i64>()
        );
        Ok(area as u32)
    }

    /// Pairs `1 ≤ i ≤ n`, `i < j < i + m` with `ω(i) > ω(j)`.
    pub fn short_inversions(&self, m: u32) -> Vec<(i64, i64)> {
        let n = self.window.len() as i64;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..i + m as i64 {
                if self.evaluate(i) > self.evaluate(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `δ` minus the number of inversions of height less than `m`.
    pub fn dinv(&self, m: u32) -> Result<u32> {
        self.require_stable(m)?;
        let count = self.short_inversions(m).len() as u32;
        let d = delta(m, self.n());
        debug_assert!(count <= d);
        Ok(d - count)
    }

    /// `{ k : ω⁻¹(k) > ω⁻¹(k + 1) }`.
    pub fn descents_of_inverse(&self) -> BTreeSet<usize> {
        descents(&self.inverse_word())
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// 1-based descent positions of a word.
pub fn descents<T: Ord>(word: &[T]) -> BTreeSet<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(k, _)| k + 1)
        .collect()
}

/// Minimal element of `set` in each residue class mod `n`, sorted.
pub fn n_generators(set: &BetaSet, n: u32) -> Result<Vec<i64>> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    if !set.is_invariant(n) {
        return Err(Error::NotInvariant(n));
    }
    let step = n as i64;
    let mut gens: Vec<i64> = (set.smallest()..set.upper() + step)
        .filter(|&x| set.contains(x) && !set.contains(x - step))
        .collect();
    gens.sort_unstable();
    debug_assert_eq!(gens.len(), n as usize);
    Ok(gens)
}

/// All `m`-stable `ω` with `Δ_ω = set`, in lexicographic order of the
/// values assigned to the sorted generators.
///
/// A generator `a` with `a - m` also a generator must receive the larger
/// value of the two; that is the whole constraint.
pub fn enumerate_m_stable_fiber(set: &BetaSet, m: u32, n: u32) -> Result<Vec<AffinePermutation>> {
    check_coprime(m, n)?;
    if !set.is_invariant(m) {
        return Err(Error::NotInvariant(m));
    }
    let gens = n_generators(set, n)?;
    let len = gens.len();
    // below[k] = index of the generator gens[k] - m, if any
    let below: Vec<Option<usize>> = gens
        .iter()
        .map(|&g| gens.binary_search(&(g - m as i64)).ok())
        .collect();
    let above: Vec<Option<usize>> = gens
        .iter()
        .map(|&g| gens.binary_search(&(g + m as i64)).ok())
        .collect();

    fn go(
        k: usize,
        values: &mut Vec<i64>,
        used: &mut [bool],
        below: &[Option<usize>],
        above: &[Option<usize>],
        gens: &[i64],
        out: &mut Vec<AffinePermutation>,
    ) {
        let len = gens.len();
        if k == len {
            out.push(AffinePermutation::from_assignment(gens, values).expect("balanced fiber"));
            return;
        }
        for v in 1..=len as i64 {
            if used[v as usize - 1] {
                continue;
            }
            if let Some(b) = below[k] {
                if b < k && values[b] > v {
                    continue;
                }
            }
            if let Some(a) = above[k] {
                if a < k && values[a] < v {
                    continue;
                }
            }
            used[v as usize - 1] = true;
            values.push(v);
            go(k + 1, values, used, below, above, gens, out);
            values.pop();
            used[v as usize - 1] = false;
        }
    }

    let mut out = Vec::new();
    go(0, &mut Vec::with_capacity(len), &mut vec![false; len], &below, &above, &gens, &mut out);
    for w in &out {
        assert!(w.is_m_stable(m), "fiber element {w:?} is not {m}-stable");
        debug_assert_eq!(&w.delta_set(), set);
    }
    Ok(out)
}
