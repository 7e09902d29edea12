//! `F(D; t)` and `F_{m/n}(q, t)`, each computed two ways, plus the full
//! identity sweep.
//!
//! Route A sums `t^{dinv(ω)} Q_{des(ω⁻¹)}` over the `m`-stable fiber of
//! `Δ_D`. Route B sums `t^{(δ + dinv(ω₀) - spin T) / 2} Q_{des(c(T))}` over
//! standard ribbon tableaux of `ν`, and separately the monomials `z^S` over
//! semistandard tableaux. Any disagreement is an error.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::affine::{check_coprime, delta, enumerate_m_stable_fiber, AffinePermutation};
use crate::cores::m_core;
use crate::error::{Error, Result};
use crate::parking::{
    anderson, anderson_inverse, delta_from_path, enumerate_dyck_paths, enumerate_parking_functions,
    restrict_to_path, DyckPath,
};
use crate::partition::Partition;
use crate::poly::CoeffPoly;
use crate::ribbon::{
    construct_shapes, enumerate_srt, fiber_monomials, is_official_vertical_strip, jump_pair_counts,
    omega0_of, permutation_of, tableau_of,
};
use crate::symfun::{gessel_fundamental, is_symmetric, FundamentalExpansion, MonomialVector, SchurExpansion};

/// Default cap on `m^{n-1}`, the total number of parking functions.
pub const DEFAULT_BUDGET: u128 = 20_000;

/// Largest `n` for which the two routes are also compared monomial by
/// monomial in `n` variables.
pub const MONOMIAL_CHECK_MAX_N: u32 = 8;

/// `F(D; t)` with the data used to build it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathReport {
    pub path: DyckPath,
    pub area: u32,
    /// `(δ + dinv(ω₀)) / 2`; may be a half-integer.
    pub e_of_d: Ratio<i64>,
    pub dinv0: u32,
    pub spin0: u32,
    pub fundamentals: FundamentalExpansion,
    pub f: SchurExpansion,
    pub fiber_size: usize,
}

/// Fails with [`Error::BudgetExceeded`] when `m^{n-1}` is above `budget`.
pub fn check_budget(m: u32, n: u32, budget: u128) -> Result<()> {
    check_coprime(m, n)?;
    let size = (m as u128).checked_pow(n - 1).unwrap_or(u128::MAX);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(())
}

fn route_a(fiber: &[AffinePermutation], m: u32, n: u32) -> FundamentalExpansion {
    let mut out = FundamentalExpansion::new(n as usize);
    for w in fiber {
        let dinv = w.dinv(m).expect("fiber elements are m-stable");
        out.add(w.descents_of_inverse(), &CoeffPoly::t_power(dinv));
    }
    out
}

fn path_shape(path: &DyckPath) -> Vec<usize> {
    path.shape().parts().to_vec()
}

/// Exponent `(δ + dinv(ω₀) - spin) / 2`, which must be a non-negative
/// integer.
fn ribbon_exponent(path: &DyckPath, d: u32, dinv0: u32, spin: u32) -> Result<u32> {
    let twice = (d + dinv0) as i64 - spin as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::RouteMismatch {
            path: path_shape(path),
            detail: format!("ribbon exponent ({d} + {dinv0} - {spin}) / 2 is not a natural number"),
        });
    }
    Ok((twice / 2) as u32)
}

/// Computes `F(D; t)` by both routes and checks that they agree.
pub fn f_of_path(path: &DyckPath) -> Result<PathReport> {
    let (m, n) = (path.m(), path.n());
    check_coprime(m, n)?;
    let set = delta_from_path(path);
    let d = delta(m, n);
    let fiber = enumerate_m_stable_fiber(&set, m, n)?;
    let a = route_a(&fiber, m, n);

    let w0 = omega0_of(&set, m, n)?;
    let dinv0 = w0.dinv(m)?;
    let spin0 = tableau_of(&w0, m)?.spin();
    let tableaux = enumerate_srt(&set, m, n)?;
    let mut b = FundamentalExpansion::new(n as usize);
    let check_monomials = n <= MONOMIAL_CHECK_MAX_N;
    let mut b_monomials = MonomialVector::new(n as usize, n as usize);
    for t in &tableaux {
        let k = ribbon_exponent(path, d, dinv0, t.spin())?;
        let tk = CoeffPoly::t_power(k);
        b.add(t.content_descents(), &tk);
        if check_monomials {
            for (e, count) in fiber_monomials(t, n) {
                b_monomials.add_term(e, &CoeffPoly::monomial(0, k, count));
            }
        }
    }
    if a != b {
        return Err(Error::RouteMismatch {
            path: path_shape(path),
            detail: format!("fundamental expansions differ: {a:?} vs {b:?}"),
        });
    }
    if check_monomials && a.to_monomials(n as usize) != b_monomials {
        return Err(Error::RouteMismatch {
            path: path_shape(path),
            detail: "monomial expansions differ".into(),
        });
    }
    let f = a.to_schur()?;
    Ok(PathReport {
        path: path.clone(),
        area: path.area(),
        e_of_d: Ratio::new((d + dinv0) as i64, 2),
        dinv0,
        spin0,
        fundamentals: a,
        f,
        fiber_size: fiber.len(),
    })
}

/// `F(D; t)` for every path, in path-enumeration order.
pub fn path_reports(m: u32, n: u32) -> Result<Vec<PathReport>> {
    let paths = enumerate_dyck_paths(m, n)?;
    paths.par_iter().map(f_of_path).collect()
}

/// `Σ_D q^{area(D)} F(D; t)`.
pub fn f_of_mn(m: u32, n: u32) -> Result<SchurExpansion> {
    Ok(sum_over_paths(n, &path_reports(m, n)?))
}

/// Deterministic fold of per-path results into `F_{m/n}(q, t)`.
pub fn sum_over_paths(n: u32, reports: &[PathReport]) -> SchurExpansion {
    let mut total = SchurExpansion::new(n as usize);
    for r in reports {
        total
            .add_expansion(&r.f.scaled(&CoeffPoly::monomial(r.area, 0, 1)))
            .expect("same degree");
    }
    total
}

/// Pass and fail counts of one check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub passed: u64,
    pub failed: u64,
}

/// Outcome of the identity checks on one path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub path: DyckPath,
    pub fiber_size: usize,
    pub spin0: u32,
    pub dinv0: u32,
    pub checks: BTreeMap<&'static str, CheckTally>,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.failed == 0)
    }
}

/// Aggregated verification results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub m: u32,
    pub n: u32,
    pub per_path: Vec<DeltaReport>,
    pub checks: BTreeMap<&'static str, CheckTally>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.failed == 0)
    }

    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.failed).sum()
    }
}

/// Names of the per-path checks.
pub const CHECK_NAMES: [&str; 18] = [
    "dinv_spin_sum",
    "spin_omega0",
    "spin_from_dinv",
    "content_descents",
    "ides",
    "anderson_roundtrip",
    "tableau_roundtrip",
    "cardinality",
    "official_tiling",
    "spin_parity",
    "spin_routes",
    "pair_counts",
    "exponent_nonnegative",
    "core_check",
    "semistandard_fiber",
    "route_agreement",
    "symmetric",
    "schur_positive",
];

struct Tallies(BTreeMap<&'static str, CheckTally>);

impl Tallies {
    fn new() -> Self {
        Tallies(CHECK_NAMES.iter().map(|&k| (k, CheckTally::default())).collect())
    }

    fn record(&mut self, name: &'static str, ok: bool) {
        let t = self.0.get_mut(name).expect("known check");
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
    }
}

/// Runs every identity on one path. Failures are counted, never thrown.
pub fn verify_path(path: &DyckPath) -> DeltaReport {
    let (m, n) = (path.m(), path.n());
    let d = delta(m, n);
    let set = delta_from_path(path);
    let mut tally = Tallies::new();
    let fiber = enumerate_m_stable_fiber(&set, m, n).expect("valid path");
    let srt = enumerate_srt(&set, m, n).expect("valid path");
    let pfs = restrict_to_path(path);
    let w0 = omega0_of(&set, m, n).expect("valid path");
    let t0 = tableau_of(&w0, m).expect("ω₀ is m-stable");
    let dinv0 = w0.dinv(m).expect("ω₀ is m-stable");
    let spin0 = t0.spin();

    tally.record("cardinality", fiber.len() == srt.len() && srt.len() == pfs.len());
    tally.record("official_tiling", is_official_vertical_strip(&t0));
    tally.record("spin_omega0", spin0 + dinv0 == d);
    let (lam, mu, nu) = construct_shapes(&set, m, n).expect("valid path");
    tally.record("core_check", m_core(&mu, m) == lam && nu.size() == (m * n) as usize);

    let srt_set: BTreeSet<Vec<i64>> = srt.iter().map(|t| t.contents()).collect();
    let mut images = BTreeSet::new();
    let mut parities = BTreeSet::new();
    for w in &fiber {
        let t = tableau_of(w, m).expect("fiber elements are m-stable");
        let dinv = w.dinv(m).expect("fiber elements are m-stable");
        let spin = t.spin();
        tally.record("dinv_spin_sum", 2 * (d as i64 - dinv as i64) == (spin + spin0) as i64);
        tally.record("spin_from_dinv", spin as i64 == d as i64 + dinv0 as i64 - 2 * dinv as i64);
        let shifted: Vec<i64> = w.inverse_word().iter().map(|x| x - 1).collect();
        tally.record(
            "content_descents",
            t.contents() == shifted && t.content_descents() == w.descents_of_inverse(),
        );
        tally.record("tableau_roundtrip", permutation_of(&t, m, n).as_ref() == Ok(w));
        tally.record("spin_routes", spin == t.spin_geometric());
        let (n1, n2, n3) = jump_pair_counts(w, m);
        tally.record("pair_counts", n1 == n2 && n1 + n2 + n3 == spin && n3 == spin0);
        tally.record("exponent_nonnegative", d + dinv0 >= spin && (d + dinv0 - spin) == 2 * dinv);
        let back = anderson(w, m).map(|f| anderson_inverse(&f));
        tally.record("anderson_roundtrip", back.as_ref() == Ok(w));
        parities.insert(spin % 2);
        images.insert(t.contents());
    }
    tally.record("tableau_roundtrip", images == srt_set);
    tally.record("spin_parity", parities.len() <= 1);

    for f in &pfs {
        let w = anderson_inverse(f);
        tally.record("ides", f.ides() == w.descents_of_inverse());
        let again = anderson(&w, m);
        tally.record(
            "anderson_roundtrip",
            again.as_ref() == Ok(f) && w.delta_set() == set && w.area(m) == Ok(path.area()),
        );
    }

    for t in &srt {
        let expected = gessel_fundamental(&t.content_descents(), n as usize, n as usize);
        let got = fiber_monomials(t, n);
        let same = expected.len() == got.len()
            && expected
                .iter()
                .all(|(e, c)| got.get(e).is_some_and(|&k| c == &CoeffPoly::monomial(0, 0, k)));
        tally.record("semistandard_fiber", same);
    }

    match f_of_path(path) {
        Ok(report) => {
            tally.record("route_agreement", true);
            let symmetric = report.fundamentals.is_symmetric()
                && (n > MONOMIAL_CHECK_MAX_N || is_symmetric(&report.fundamentals.to_monomials(n as usize)));
            tally.record("symmetric", symmetric);
            tally.record("schur_positive", report.f.is_schur_positive());
        }
        Err(_) => {
            tally.record("route_agreement", false);
            tally.record("symmetric", false);
            tally.record("schur_positive", false);
        }
    }

    DeltaReport {
        path: path.clone(),
        fiber_size: fiber.len(),
        spin0,
        dinv0,
        checks: tally.0,
    }
}

/// Runs [`verify_path`] on the given paths, in parallel, keeping order.
pub fn verify_paths(m: u32, n: u32, paths: &[DyckPath]) -> Result<VerificationReport> {
    check_coprime(m, n)?;
    if let Some(p) = paths.iter().find(|p| (p.m(), p.n()) != (m, n)) {
        return Err(Error::NotADyckPath(p.shape().parts().to_vec(), m, n));
    }
    let per_path: Vec<DeltaReport> = paths.par_iter().map(verify_path).collect();
    let mut checks: BTreeMap<&'static str, CheckTally> = BTreeMap::new();
    for r in &per_path {
        for (&k, v) in &r.checks {
            let slot = checks.entry(k).or_default();
            slot.passed += v.passed;
            slot.failed += v.failed;
        }
    }
    Ok(VerificationReport { m, n, per_path, checks })
}

/// Full sweep over every path, plus the global count `|PF_{m/n}| = m^{n-1}`.
pub fn verify_identities(m: u32, n: u32, budget: u128) -> Result<VerificationReport> {
    check_budget(m, n, budget)?;
    let paths = enumerate_dyck_paths(m, n)?;
    let mut report = verify_paths(m, n, &paths)?;
    let total: usize = report.per_path.iter().map(|r| r.fiber_size).sum();
    let all_pfs = enumerate_parking_functions(m, n)?.len();
    let expected = (m as usize).pow(n - 1);
    let slot = report.checks.entry("total_cardinality").or_default();
    if total == expected && all_pfs == expected {
        slot.passed += 1;
    } else {
        slot.failed += 1;
    }
    Ok(report)
}

/// Observations on `F_{m/n}`; never part of any pass/fail decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub m: u32,
    pub n: u32,
    pub qt_symmetric: bool,
    /// Hook coefficients agree: `s_{(n-k, 1^k)}` in `F_{m/n}` against
    /// `s_{(m-k, 1^k)}` in `F_{n/m}`, for every `k`.
    pub swap_hooks_equal: bool,
    /// Literal equality; only possible when the degrees agree.
    pub swap_equal: bool,
    pub f_mn: SchurExpansion,
    pub f_nm: SchurExpansion,
}

/// Coefficient of `s_{(d-k, 1^k)}`, zero when `k ≥ d`.
pub fn hook_coefficient(e: &SchurExpansion, k: usize) -> CoeffPoly {
    let d = e.n();
    if k >= d {
        return CoeffPoly::zero();
    }
    let mut parts = vec![d - k];
    parts.extend(std::iter::repeat_n(1, k));
    e.coeff(&Partition::new(parts).expect("hook"))
}

/// Checks `q ↔ t` symmetry of `F_{m/n}` and compares it with `F_{n/m}`.
pub fn exploratory_symmetries(m: u32, n: u32, budget: u128) -> Result<SymmetryReport> {
    check_budget(m, n, budget)?;
    check_budget(n, m, budget)?;
    let f_mn = f_of_mn(m, n)?;
    let f_nm = f_of_mn(n, m)?;
    let top = m.max(n) as usize;
    Ok(SymmetryReport {
        m,
        n,
        qt_symmetric: f_mn.swap_qt() == f_mn,
        swap_hooks_equal: (0..top).all(|k| hook_coefficient(&f_mn, k) == hook_coefficient(&f_nm, k)),
        swap_equal: f_mn == f_nm,
        f_mn,
        f_nm,
    })
}
