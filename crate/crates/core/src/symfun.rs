//! Quasisymmetric and symmetric functions of fixed degree `n` with
//! polynomial coefficients: Gessel fundamentals, monomial expansions, the
//! Schur basis and the `Ω` involution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kostka::kostka;
use crate::partition::Partition;
use crate::poly::CoeffPoly;

/// A subset of `{1, ..., n - 1}`.
pub type DescentSet = BTreeSet<usize>;

/// `Σ c_α z^α` over exponent vectors `α` of length `vars` and sum `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialVector {
    n: usize,
    vars: usize,
    coeffs: BTreeMap<Vec<u32>, CoeffPoly>,
}

impl MonomialVector {
    pub fn new(n: usize, vars: usize) -> Self {
        MonomialVector { n, vars, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn coeff(&self, exponents: &[u32]) -> CoeffPoly {
        self.coeffs.get(exponents).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &CoeffPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · z^exponents`.
    pub fn add_term(&mut self, exponents: Vec<u32>, c: &CoeffPoly) {
        assert_eq!(exponents.len(), self.vars, "exponent vector length");
        assert_eq!(exponents.iter().sum::<u32>() as usize, self.n, "exponent vector degree");
        let slot = self.coeffs.entry(exponents).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    /// Adds `c · other`.
    pub fn add_scaled(&mut self, other: &MonomialVector, c: &CoeffPoly) {
        assert_eq!((self.n, self.vars), (other.n, other.vars));
        for (e, v) in &other.coeffs {
            self.add_term(e.clone(), &(v * c));
        }
    }
}

/// Visits every weakly increasing `i_1 ≤ ... ≤ i_n` in `1..=vars` with
/// `i_k < i_{k+1}` whenever `k ∈ desc`, as an exponent vector.
fn for_each_fundamental_monomial(desc: &DescentSet, n: usize, vars: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(k: usize, prev: usize, n: usize, vars: usize, desc: &DescentSet, e: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if k == n {
            f(e);
            return;
        }
        let lo = match k {
            0 => 0,
            _ if desc.contains(&k) => prev + 1,
            _ => prev,
        };
        for v in lo..vars {
            e[v] += 1;
            go(k + 1, v, n, vars, desc, e, f);
            e[v] -= 1;
        }
    }
    go(0, 0, n, vars, desc, &mut vec![0; vars], f);
}

/// `Q_S` in `vars` variables.
pub fn gessel_fundamental(desc: &DescentSet, n: usize, vars: usize) -> MonomialVector {
    let mut v = MonomialVector::new(n, vars);
    let one = CoeffPoly::one();
    for_each_fundamental_monomial(desc, n, vars, &mut |e| v.add_term(e.to_vec(), &one));
    v
}

/// Coefficients constant on every permutation orbit of exponent vectors.
pub fn is_symmetric(v: &MonomialVector) -> bool {
    let mut orbits: BTreeMap<Vec<u32>, (CoeffPoly, u64)> = BTreeMap::new();
    for (e, c) in &v.coeffs {
        let mut key = e.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let entry = orbits.entry(key).or_insert_with(|| (c.clone(), 0));
        if &entry.0 != c {
            return false;
        }
        entry.1 += 1;
    }
    orbits.iter().all(|(key, (_, seen))| *seen == orbit_size(key))
}

/// Number of distinct rearrangements of `key`.
fn orbit_size(key: &[u32]) -> u64 {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &x in key {
        *counts.entry(x).or_default() += 1;
    }
    let mut size = 1u64;
    let mut placed = 0u64;
    for c in counts.values() {
        for k in 1..=*c {
            placed += 1;
            size = size * placed / k;
        }
    }
    size
}

fn padded(lam: &Partition, vars: usize) -> Vec<u32> {
    let mut e: Vec<u32> = lam.parts().iter().map(|&p| p as u32).collect();
    e.resize(vars, 0);
    e
}

/// `Σ a_λ s_λ` expanded into monomials through Kostka numbers.
pub fn schur_to_monomials(e: &SchurExpansion, vars: usize) -> MonomialVector {
    let mut out = MonomialVector::new(e.n, vars);
    let mut sorted = Vec::new();
    // each orbit of a dominant weight μ with at most `vars` parts
    for mu in Partition::all_of_size(e.n).into_iter().filter(|mu| mu.len() <= vars) {
        let mut c = CoeffPoly::zero();
        for (lam, a) in &e.coeffs {
            let k = kostka(lam, mu.parts()).expect("same size");
            if k > 0 {
                c += &(a * &BigInt::from(k));
            }
        }
        if !c.is_zero() {
            sorted.push((padded(&mu, vars), c));
        }
    }
    for (mut e, c) in sorted {
        // every distinct rearrangement, starting from the increasing one
        e.sort_unstable();
        loop {
            out.add_term(e.clone(), &c);
            if !next_permutation(&mut e) {
                break;
            }
        }
    }
    out
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Solves `c_μ = Σ_λ a_λ K_{λμ}` along decreasing lexicographic order,
/// which refines dominance.
fn solve_unitriangular(n: usize, dominant: impl Fn(&Partition) -> CoeffPoly) -> SchurExpansion {
    let parts = Partition::all_of_size(n);
    let mut out = SchurExpansion::new(n);
    for mu in &parts {
        let mut a = dominant(mu);
        for (lam, c) in &out.coeffs {
            if lam > mu {
                let k = kostka(lam, mu.parts()).expect("same size");
                if k > 0 {
                    a = &a - &(c * &BigInt::from(k));
                }
            }
        }
        if !a.is_zero() {
            out.coeffs.insert(mu.clone(), a);
        }
    }
    out
}

/// Schur expansion of a symmetric monomial vector in at least `n` variables.
/// Re-expands the result and requires an exact match.
pub fn to_schur(v: &MonomialVector) -> Result<SchurExpansion> {
    if v.vars < v.n {
        return Err(Error::TooFewVariables { needed: v.n, got: v.vars });
    }
    if !is_symmetric(v) {
        return Err(Error::NotSymmetric);
    }
    let out = solve_unitriangular(v.n, |mu| v.coeff(&padded(mu, v.vars)));
    if &schur_to_monomials(&out, v.vars) != v {
        return Err(Error::NotSymmetric);
    }
    Ok(out)
}

/// `Σ_S c_S Q_S` over descent sets `S ⊆ {1, ..., n - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalExpansion {
    n: usize,
    coeffs: BTreeMap<DescentSet, CoeffPoly>,
}

impl FundamentalExpansion {
    pub fn new(n: usize) -> Self {
        FundamentalExpansion { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DescentSet, &CoeffPoly)> {
        self.coeffs.iter()
    }

    pub fn add(&mut self, desc: DescentSet, c: &CoeffPoly) {
        assert!(desc.iter().all(|&d| d >= 1 && d < self.n.max(1)), "descent out of range");
        let slot = self.coeffs.entry(desc.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&desc);
        }
    }

    /// Monomial expansion in `vars` variables.
    pub fn to_monomials(&self, vars: usize) -> MonomialVector {
        let mut v = MonomialVector::new(self.n, vars);
        for (s, c) in &self.coeffs {
            let mut acc: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
            for_each_fundamental_monomial(s, self.n, vars, &mut |e| {
                acc.insert(e.to_vec(), ());
            });
            for e in acc.into_keys() {
                v.add_term(e, c);
            }
        }
        v
    }

    /// Coefficient of the monomial quasisymmetric function `M_α` for every
    /// composition `α` of `n`, indexed by the bitmask of its partial sums.
    ///
    /// `Q_S = Σ_{T ⊇ S} M_T`, so this is a subset-sum transform.
    fn quasi_monomial_coeffs(&self) -> Vec<CoeffPoly> {
        let bits = self.n.saturating_sub(1);
        let mut table = vec![CoeffPoly::zero(); 1 << bits];
        for (s, c) in &self.coeffs {
            table[mask_of(s)] += c;
        }
        for b in 0..bits {
            for mask in 0..table.len() {
                if mask & (1 << b) != 0 {
                    let lower = table[mask ^ (1 << b)].clone();
                    table[mask] += &lower;
                }
            }
        }
        table
    }

    /// Quasisymmetric functions are symmetric exactly when the coefficient
    /// of `M_α` depends only on the sorted parts of `α`.
    pub fn is_symmetric(&self) -> bool {
        let table = self.quasi_monomial_coeffs();
        (0..table.len()).all(|mask| {
            let lam = Partition::from_unsorted(composition_of(mask, self.n));
            table[mask] == table[mask_of_composition(lam.parts())]
        })
    }

    /// Schur expansion, verified against every `M_α` coefficient.
    pub fn to_schur(&self) -> Result<SchurExpansion> {
        let table = self.quasi_monomial_coeffs();
        let out = solve_unitriangular(self.n, |mu| table[mask_of_composition(mu.parts())].clone());
        for (mask, expected) in table.iter().enumerate() {
            let comp = composition_of(mask, self.n);
            let mut got = CoeffPoly::zero();
            for (lam, a) in &out.coeffs {
                let k = kostka(lam, &comp).expect("same size");
                if k > 0 {
                    got += &(a * &BigInt::from(k));
                }
            }
            if &got != expected {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(out)
    }

    /// `Ω`: complements every descent set.
    pub fn omega(&self) -> FundamentalExpansion {
        let mut out = FundamentalExpansion::new(self.n);
        for (s, c) in &self.coeffs {
            out.add(omega_on_descents(s, self.n), c);
        }
        out
    }
}

fn mask_of(s: &DescentSet) -> usize {
    s.iter().fold(0, |acc, &d| acc | 1 << (d - 1))
}

fn mask_of_composition(parts: &[usize]) -> usize {
    let mut mask = 0;
    let mut sum = 0;
    for &p in &parts[..parts.len().saturating_sub(1)] {
        sum += p;
        mask |= 1 << (sum - 1);
    }
    mask
}

fn composition_of(mask: usize, n: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut start = 0;
    for k in 1..n {
        if mask & (1 << (k - 1)) != 0 {
            parts.push(k - start);
            start = k;
        }
    }
    if n > 0 {
        parts.push(n - start);
    }
    parts
}

/// Complement of `desc` in `{1, ..., n - 1}`.
pub fn omega_on_descents(desc: &DescentSet, n: usize) -> DescentSet {
    (1..n).filter(|d| !desc.contains(d)).collect()
}

/// `Σ_λ a_λ s_λ` over partitions `λ` of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, CoeffPoly>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        SchurExpansion { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, lam: Partition, c: &CoeffPoly) -> Result<()> {
        if lam.size() != self.n {
            return Err(Error::SizeMismatch(lam.parts().to_vec(), vec![self.n]));
        }
        let slot = self.coeffs.entry(lam.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lam);
        }
        Ok(())
    }

    pub fn coeff(&self, lam: &Partition) -> CoeffPoly {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    /// Terms in decreasing lexicographic order of the partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &CoeffPoly)> {
        self.coeffs.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `c · self`.
    pub fn scaled(&self, c: &CoeffPoly) -> SchurExpansion {
        let mut out = SchurExpansion::new(self.n);
        for (lam, a) in &self.coeffs {
            out.add(lam.clone(), &(a * c)).expect("same degree");
        }
        out
    }

    pub fn add_expansion(&mut self, other: &SchurExpansion) -> Result<()> {
        for (lam, a) in &other.coeffs {
            self.add(lam.clone(), a)?;
        }
        Ok(())
    }

    pub fn swap_qt(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new(self.n);
        for (lam, a) in &self.coeffs {
            out.add(lam.clone(), &a.swap_qt()).expect("same degree");
        }
        out
    }

    /// `Ω(s_λ) = s_{λ'}`.
    pub fn omega_involution(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new(self.n);
        for (lam, a) in &self.coeffs {
            out.add(lam.transpose(), a).expect("same degree");
        }
        out
    }

    pub fn is_schur_positive(&self) -> bool {
        self.coeffs.values().all(CoeffPoly::is_nonnegative)
    }

    /// Sum of all coefficients at `q = t = 1`, weighted by nothing.
    pub fn coefficient_sum_at_one(&self) -> BigInt {
        self.coeffs.values().map(CoeffPoly::at_one).sum()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let parts: Vec<String> = lam.parts().iter().map(ToString::to_string).collect();
            let basis = format!("s[{}]", parts.join(","));
            if c == &CoeffPoly::one() {
                f.write_str(&basis)?;
            } else if c.len() == 1 && !c.to_text().starts_with('-') {
                write!(f, "{c}*{basis}")?;
            } else {
                write!(f, "({c})*{basis}")?;
            }
        }
        Ok(())
    }
}
