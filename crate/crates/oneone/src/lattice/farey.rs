//! Farey neighbors inside an interval, by Stern-Brocot descent.

use super::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FareyError {
    #[error("invalid bounds: lo must be strictly less than hi")]
    InvalidBounds,
}

/// The best bounded-denominator approximations to `s` from below and above:
/// the largest fraction ≤ s and the smallest fraction ≥ s among all reduced
/// fractions with denominator ≤ `max_den`. Batched Stern-Brocot walk.
fn best_bounded(s: &Rational, max_den: &BigInt) -> (Rational, Rational) {
    if s.denom() <= max_den {
        return (s.clone(), s.clone());
    }
    let shift = s.floor();
    let frac = s - &shift; // in (0, 1): s has denominator > max_den ≥ 1
    let p = frac.numer().clone();
    let q = frac.denom().clone();

    // Walk toward p/q from l = 0/1, h = 1/0, batching runs of steps.
    let mut l = (BigInt::zero(), BigInt::one());
    let mut h = (BigInt::one(), BigInt::zero());
    loop {
        let m_den = &l.1 + &h.1;
        if m_den > *max_den {
            break;
        }
        let m_num = &l.0 + &h.0;
        let m_vs_s = (&m_num * &q).cmp(&(&p * &m_den));
        match m_vs_s {
            std::cmp::Ordering::Equal => unreachable!("s has denominator > max_den"),
            std::cmp::Ordering::Less => {
                // l += k·h keeps the value below s for k ≤ (b-1)/a where
                // a = h0 q − h1 p > 0 and b = p l1 − q l0 > 0.
                let a = &h.0 * &q - &h.1 * &p;
                let b = &p * &l.1 - &q * &l.0;
                let mut k = (&b - BigInt::one()) / &a;
                if !h.1.is_zero() {
                    let cap = (max_den - &l.1) / &h.1;
                    k = k.min(cap);
                }
                debug_assert!(k >= BigInt::one());
                l = (&l.0 + &k * &h.0, &l.1 + &k * &h.1);
            }
            std::cmp::Ordering::Greater => {
                // h += k·l keeps the value above s for k ≤ (d-1)/c where
                // c = p l1 − q l0 > 0 and d = q h0 − p h1 > 0.
                let c = &p * &l.1 - &q * &l.0;
                let d = &q * &h.0 - &p * &h.1;
                let mut k = (&d - BigInt::one()) / &c;
                let cap = (max_den - &h.1) / &l.1;
                k = k.min(cap);
                debug_assert!(k >= BigInt::one());
                h = (&h.0 + &k * &l.0, &h.1 + &k * &l.1);
            }
        }
    }
    let below = Rational::new(l.0, l.1) + &shift;
    debug_assert!(!h.1.is_zero(), "s in (0,1) bounds h after first step");
    let above = Rational::new(h.0, h.1) + &shift;
    (below, above)
}

/// The pair `(s₋, s₊)` of consecutive members of the finite increasing
/// sequence `{lo, hi} ∪ {fractions in (lo, hi) with reduced denominator ≤
/// max_den}` satisfying `s₋ ≤ s ≤ s₊`. `lo` and `hi` count as members
/// regardless of their denominators. If `s` is itself a member the gap
/// degenerates to `(s, s)`.
pub fn farey_gap(
    lo: &Rational,
    hi: &Rational,
    s: &Rational,
    max_den: u64,
) -> Result<(Rational, Rational), FareyError> {
    if lo >= hi {
        return Err(FareyError::InvalidBounds);
    }
    assert!(lo < s && s < hi, "s must lie strictly between lo and hi");
    let max_den = BigInt::from(max_den.max(1));
    let (below, above) = best_bounded(s, &max_den);
    let s_minus = if below > *lo { below } else { lo.clone() };
    let s_plus = if above < *hi { above } else { hi.clone() };
    Ok((s_minus, s_plus))
}
