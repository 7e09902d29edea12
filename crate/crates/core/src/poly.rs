//! Sparse polynomials in `q` and `t` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `Σ c · q^a t^b`, keyed by `(a, b)`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CoeffPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::monomial(0, 0, 1)
    }

    /// `c · q^a t^b`.
    pub fn monomial(q: u32, t: u32, c: impl Into<BigInt>) -> Self {
        let mut p = CoeffPoly::zero();
        p.add_term(q, t, c.into());
        p
    }

    /// `t^k`.
    pub fn t_power(k: u32) -> Self {
        CoeffPoly::monomial(0, k, 1)
    }

    pub fn add_term(&mut self, q: u32, t: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((q, t)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        self.terms.get(&(q, t)).cloned().unwrap_or_default()
    }

    /// Terms in increasing `(q, t)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(q, t), c)| (q, t, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        CoeffPoly {
            terms: self.terms.iter().map(|(&(q, t), c)| ((q + a, t + b), c.clone())).collect(),
        }
    }

    /// Exchanges `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        CoeffPoly {
            terms: self.terms.iter().map(|(&(q, t), c)| ((t, q), c.clone())).collect(),
        }
    }

    /// Value at `q = t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Human-readable form with explicit `*` and `^`, highest `q` first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (q, t, c)) in self.terms().rev().enumerate() {
            let mut vars = Vec::new();
            for (name, e) in [("q", q), ("t", t)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            let neg = c.is_negative();
            if i > 0 {
                out.push(if neg { '-' } else { '+' });
            } else if neg {
                out.push('-');
            }
            let mag = c.abs();
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&format!("{mag}*"));
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        for (&(q, t), c) in &rhs.terms {
            self.add_term(q, t, c.clone());
        }
    }
}

impl Add<&CoeffPoly> for &CoeffPoly {
    type Output = CoeffPoly;

    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;

    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub<&CoeffPoly> for &CoeffPoly {
    type Output = CoeffPoly;

    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        self + &(-rhs)
    }
}

impl Mul<&CoeffPoly> for &CoeffPoly {
    type Output = CoeffPoly;

    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (&(q1, t1), a) in &self.terms {
            for (&(q2, t2), b) in &rhs.terms {
                out.add_term(q1 + q2, t1 + t2, a * b);
            }
        }
        out
    }
}

impl Mul<&BigInt> for &CoeffPoly {
    type Output = CoeffPoly;

    fn mul(self, k: &BigInt) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (&(q, t), c) in &self.terms {
            out.add_term(q, t, c * k);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_form() {
        let mut p = CoeffPoly::monomial(2, 0, 1);
        p += &CoeffPoly::monomial(1, 1, 1);
        p += &CoeffPoly::monomial(0, 2, 1);
        assert_eq!(p.to_text(), "q^2+q*t+t^2");
        assert_eq!((&CoeffPoly::monomial(1, 0, 1) + &CoeffPoly::t_power(1)).to_text(), "q+t");
        assert_eq!(CoeffPoly::one().to_text(), "1");
        assert_eq!(CoeffPoly::zero().to_text(), "0");
        assert_eq!(CoeffPoly::monomial(0, 3, -2).to_text(), "-2*t^3");
        let mixed = &CoeffPoly::monomial(0, 1, 3) - &CoeffPoly::one();
        assert_eq!(mixed.to_text(), "3*t-1");
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = CoeffPoly::monomial(1, 2, 5);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).len(), 0);
    }

    fn arb_poly() -> impl Strategy<Value = CoeffPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -5i64..=5), 0..6).prop_map(|v| {
            let mut p = CoeffPoly::zero();
            for (q, t, c) in v {
                p.add_term(q, t, c.into());
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(a.swap_qt().swap_qt(), a.clone());
            prop_assert!(a.terms().all(|(_, _, c)| !c.is_zero()));
        }
    }
}
