//! The ribbon side of the construction: for an `(m, n)`-invariant set `Δ`
//! with `n`-generators `a_1 < ... < a_n`, moving every generator down by `m`
//! turns the core `λ = M⁻¹(Δ)` into a larger partition `μ`. Each order of
//! the `n` jumps is a standard `m`-ribbon tableau of `ν = μ \ λ`, and the
//! `m`-stable permutations with `Δ_ω = Δ` are exactly these orders.

use std::collections::{BTreeMap, BTreeSet};

use crate::affine::{self, check_coprime, AffinePermutation};
use crate::beta::{BetaSet, RibbonMove};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};

/// One ribbon together with its cells `(row, col)`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ribbon {
    pub mv: RibbonMove,
    pub cells: Vec<(usize, usize)>,
}

impl Ribbon {
    /// Number of distinct rows the ribbon meets.
    pub fn height(&self) -> u32 {
        self.cells.iter().map(|&(r, _)| r).collect::<BTreeSet<_>>().len() as u32
    }

    /// The cell of largest content `row - col`: leftmost cell of the top row.
    pub fn head(&self) -> (usize, usize) {
        *self
            .cells
            .iter()
            .max_by_key(|&&(r, c)| r as i64 - c as i64)
            .expect("ribbons are non-empty")
    }
}

/// A skew shape `ν = μ \ λ` tiled by `m`-ribbons added in a fixed order,
/// every prefix being a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardRibbonTableau {
    base: Partition,
    shape: SkewShape,
    ribbons: Vec<RibbonMove>,
}

impl StandardRibbonTableau {
    /// Replays `elements` as `m`-jumps starting from `base`.
    pub fn from_jumps(base: &Partition, elements: &[i64], m: u32) -> Result<Self> {
        let mut set = BetaSet::from_partition(base);
        let mut ribbons = Vec::with_capacity(elements.len());
        for &x in elements {
            let (next, mv) = set.apply_jump(x, m)?;
            ribbons.push(mv);
            set = next;
        }
        let shape = SkewShape::new(set.to_partition(), base.clone())?;
        Ok(StandardRibbonTableau { base: base.clone(), shape, ribbons })
    }

    /// Validates a list of move records against a replay from `base`.
    pub fn new(base: Partition, ribbons: Vec<RibbonMove>) -> Result<Self> {
        let m = match ribbons.first() {
            Some(mv) => mv.ribbon_length,
            None => {
                let shape = SkewShape::new(base.clone(), base.clone())?;
                return Ok(StandardRibbonTableau { base, shape, ribbons });
            }
        };
        let elements: Vec<i64> = ribbons.iter().map(|mv| mv.element).collect();
        let replayed = StandardRibbonTableau::from_jumps(&base, &elements, m)
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        if replayed.ribbons != ribbons {
            return Err(Error::InvalidTableau(format!(
                "move records {ribbons:?} disagree with replay {:?}",
                replayed.ribbons
            )));
        }
        Ok(replayed)
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn ribbons(&self) -> &[RibbonMove] {
        &self.ribbons
    }

    pub fn len(&self) -> usize {
        self.ribbons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ribbons.is_empty()
    }

    /// `c(T)`: ribbon contents in tableau order.
    pub fn contents(&self) -> Vec<i64> {
        self.ribbons.iter().map(|mv| mv.content).collect()
    }

    pub fn content_descents(&self) -> BTreeSet<usize> {
        affine::descents(&self.contents())
    }

    /// Number of beads each jump passed over.
    pub fn jump_counts(&self) -> Vec<u32> {
        self.ribbons.iter().map(RibbonMove::spin).collect()
    }

    /// Total spin from the jump counts.
    pub fn spin(&self) -> u32 {
        self.jump_counts().iter().sum()
    }

    /// Total spin from the row counts of the actual cells.
    pub fn spin_geometric(&self) -> u32 {
        self.ribbon_cells().iter().map(|r| r.height() - 1).sum()
    }

    /// Cells of each ribbon, reconstructed by replaying the jumps.
    pub fn ribbon_cells(&self) -> Vec<Ribbon> {
        let mut set = BetaSet::from_partition(&self.base);
        let mut before = self.base.clone();
        let mut out = Vec::with_capacity(self.ribbons.len());
        for mv in &self.ribbons {
            let (next, _) = set.apply_jump(mv.element, mv.ribbon_length).expect("validated tableau");
            let after = next.to_partition();
            let cells = after.cells().filter(|&(r, c)| !before.contains_cell(r, c)).collect();
            out.push(Ribbon { mv: *mv, cells });
            set = next;
            before = after;
        }
        out
    }
}

/// `(λ, μ, ν)` for an `(m, n)`-invariant set.
pub fn construct_shapes(set: &BetaSet, m: u32, n: u32) -> Result<(Partition, Partition, SkewShape)> {
    check_coprime(m, n)?;
    if !set.is_invariant(m) {
        return Err(Error::NotInvariant(m));
    }
    let gens = affine::n_generators(set, n)?;
    let lam = set.to_partition();
    // increasing order is always a valid jump order
    let t = StandardRibbonTableau::from_jumps(&lam, &gens, m)?;
    let mu = t.shape.outer().clone();
    debug_assert_eq!(crate::cores::m_core(&mu, m), lam);
    debug_assert_eq!(t.shape.size(), (m * n) as usize);
    let nu = t.shape;
    Ok((lam, mu, nu))
}

/// `T(ω)`: jump `ω⁻¹(1)`, then `ω⁻¹(2)`, and so on.
pub fn tableau_of(w: &AffinePermutation, m: u32) -> Result<StandardRibbonTableau> {
    check_coprime(m, w.n())?;
    if !w.is_m_stable(m) {
        return Err(Error::NotStable(m));
    }
    let set = w.delta_set();
    let t = StandardRibbonTableau::from_jumps(&set.to_partition(), &w.inverse_word(), m)
        .expect("m-stable permutations give valid jump orders");
    Ok(t)
}

/// Inverse of [`tableau_of`]: the `k`-th jump is `ω⁻¹(k)`.
pub fn permutation_of(t: &StandardRibbonTableau, m: u32, n: u32) -> Result<AffinePermutation> {
    check_coprime(m, n)?;
    if t.len() != n as usize {
        return Err(Error::InvalidTableau(format!("expected {n} ribbons, got {}", t.len())));
    }
    if t.ribbons.iter().any(|mv| mv.ribbon_length != m) {
        return Err(Error::InvalidTableau(format!("ribbons must have length {m}")));
    }
    let elements: Vec<i64> = t.ribbons.iter().map(|mv| mv.element).collect();
    let values: Vec<i64> = (1..=n as i64).collect();
    let w = AffinePermutation::from_assignment(&elements, &values)?;
    if w.delta_set() != BetaSet::from_partition(&t.base) {
        return Err(Error::InvalidTableau("jumped elements are not the generators of the base".into()));
    }
    debug_assert!(w.is_m_stable(m));
    Ok(w)
}

/// Every standard tableau of `ν`, i.e. every valid order of the `n` jumps,
/// in lexicographic order of the jumped elements.
pub fn enumerate_srt(set: &BetaSet, m: u32, n: u32) -> Result<Vec<StandardRibbonTableau>> {
    let (lam, _, nu) = construct_shapes(set, m, n)?;
    let gens = affine::n_generators(set, n)?;
    let step = m as i64;

    fn go(
        state: &BetaSet,
        pending: &mut Vec<i64>,
        order: &mut Vec<i64>,
        step: i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        if pending.is_empty() {
            out.push(order.clone());
            return;
        }
        for k in 0..pending.len() {
            let x = pending[k];
            if state.contains(x - step) {
                continue;
            }
            let (next, _) = state.apply_jump(x, step as u32).expect("vacant target");
            pending.remove(k);
            order.push(x);
            go(&next, pending, order, step, out);
            order.pop();
            pending.insert(k, x);
        }
    }

    let mut orders = Vec::new();
    go(set, &mut gens.clone(), &mut Vec::new(), step, &mut orders);
    orders
        .iter()
        .map(|o| {
            let t = StandardRibbonTableau::from_jumps(&lam, o, m)?;
            debug_assert_eq!(&t.shape, &nu);
            Ok(t)
        })
        .collect()
}

/// The fiber element whose jumps happen in increasing order.
pub fn omega0_of(set: &BetaSet, m: u32, n: u32) -> Result<AffinePermutation> {
    check_coprime(m, n)?;
    if !set.is_invariant(m) {
        return Err(Error::NotInvariant(m));
    }
    let gens = affine::n_generators(set, n)?;
    let values: Vec<i64> = (1..=n as i64).collect();
    let w = AffinePermutation::from_assignment(&gens, &values)?;
    debug_assert!(w.is_m_stable(m));
    Ok(w)
}

/// Every ribbon starts at the leftmost box of a row of the strip.
pub fn is_official_vertical_strip(t: &StandardRibbonTableau) -> bool {
    let inner = t.shape.inner();
    t.ribbon_cells().iter().all(|rb| {
        let (r, c) = rb.head();
        c == inner.row(r)
    })
}

/// Counts `(N1, N2, N3)` of beads passed over while building `T(ω)`:
/// already-moved generators, not-yet-moved generators, and elements of
/// `Δ + n`.
pub fn jump_pair_counts(w: &AffinePermutation, m: u32) -> (u32, u32, u32) {
    let inv = w.inverse_word();
    let set = w.delta_set();
    let n = inv.len();
    let m = m as i64;
    let (mut n1, mut n2, mut n3) = (0, 0, 0);
    for a in 0..n {
        let x = inv[a];
        for (b, &y) in inv.iter().enumerate() {
            if b < a && 0 < y - x && y - x < m {
                n1 += 1;
            }
            if b > a && 0 < x - y && x - y < m {
                n2 += 1;
            }
        }
        n3 += (x - m + 1..x).filter(|&k| set.contains(k - n as i64)).count() as u32;
    }
    (n1, n2, n3)
}

/// A ribbon tiling with a positive label on each ribbon.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemistandardRibbonTableau {
    base: Partition,
    tiling: Vec<Ribbon>,
    tau: Vec<u32>,
}

impl SemistandardRibbonTableau {
    /// `tau[i]` labels `tiling[i]`. Validity is checked by [`standardize`].
    ///
    /// [`standardize`]: SemistandardRibbonTableau::standardize
    pub fn new(base: Partition, tiling: Vec<Ribbon>, tau: Vec<u32>) -> Result<Self> {
        if tiling.len() != tau.len() {
            return Err(Error::InvalidTableau("one label per ribbon is required".into()));
        }
        if tau.contains(&0) {
            return Err(Error::InvalidTableau("labels must be positive".into()));
        }
        let s = SemistandardRibbonTableau { base, tiling, tau };
        s.standardize()?;
        Ok(s)
    }

    pub fn tiling(&self) -> &[Ribbon] {
        &self.tiling
    }

    pub fn labels(&self) -> &[u32] {
        &self.tau
    }

    /// Orders ribbons by label, then by content, and checks that this order
    /// rebuilds the same tiling with every prefix a Young diagram.
    pub fn standardize(&self) -> Result<StandardRibbonTableau> {
        let mut idx: Vec<usize> = (0..self.tiling.len()).collect();
        idx.sort_by_key(|&i| (self.tau[i], self.tiling[i].mv.content));
        if idx.windows(2).any(|w| {
            (self.tau[w[0]], self.tiling[w[0]].mv.content) == (self.tau[w[1]], self.tiling[w[1]].mv.content)
        }) {
            return Err(Error::InvalidTableau("refined order is not total".into()));
        }
        let Some(m) = self.tiling.first().map(|r| r.mv.ribbon_length) else {
            return StandardRibbonTableau::new(self.base.clone(), Vec::new());
        };
        let elements: Vec<i64> = idx.iter().map(|&i| self.tiling[i].mv.element).collect();
        let t = StandardRibbonTableau::from_jumps(&self.base, &elements, m)
            .map_err(|e| Error::InvalidTableau(format!("refined order is not a valid jump order: {e}")))?;
        for (rb, &i) in t.ribbon_cells().iter().zip(&idx) {
            if rb.cells != self.tiling[i].cells {
                return Err(Error::InvalidTableau("refined order produces a different tiling".into()));
            }
        }
        Ok(t)
    }

    /// Exponent vector of `z^S` in `vars` variables.
    pub fn monomial(&self, vars: usize) -> Vec<u32> {
        let mut e = vec![0u32; vars];
        for &v in &self.tau {
            e[v as usize - 1] += 1;
        }
        e
    }
}

/// All semistandard tableaux with labels in `1..=vars` standardizing to `t`.
pub fn enumerate_fiber_ssrt(t: &StandardRibbonTableau, vars: u32) -> Vec<SemistandardRibbonTableau> {
    let tiling = t.ribbon_cells();
    let contents = t.contents();
    let n = tiling.len();
    let mut out = Vec::new();

    fn go(
        k: usize,
        labels: &mut Vec<u32>,
        contents: &[i64],
        vars: u32,
        emit: &mut dyn FnMut(&[u32]),
    ) {
        if k == contents.len() {
            emit(labels);
            return;
        }
        let lo = match k {
            0 => 1,
            _ if contents[k - 1] > contents[k] => labels[k - 1] + 1,
            _ => labels[k - 1],
        };
        for v in lo..=vars {
            labels.push(v);
            go(k + 1, labels, contents, vars, emit);
            labels.pop();
        }
    }

    let mut emit = |labels: &[u32]| {
        let s = SemistandardRibbonTableau {
            base: t.base.clone(),
            tiling: tiling.clone(),
            tau: labels.to_vec(),
        };
        debug_assert_eq!(s.standardize().as_ref(), Ok(t));
        out.push(s);
    };
    go(0, &mut Vec::with_capacity(n), &contents, vars, &mut emit);
    out
}

/// Monomials `z^S` summed over a fiber of the standardization map.
pub fn fiber_monomials(t: &StandardRibbonTableau, vars: u32) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    for s in enumerate_fiber_ssrt(t, vars) {
        *out.entry(s.monomial(vars as usize)).or_insert(0) += 1;
    }
    out
}
