//! Exact sparse multivariate polynomials with per-variable degree caps.
//!
//! All arithmetic is over arbitrary-precision integers. Every polynomial
//! carries the degree caps of its ring; any product term whose exponent
//! exceeds a cap in some variable is discarded. Discarding is a quotient by
//! the monomial ideal generated by `x_r^(cap_r + 1)`, so addition and
//! truncated multiplication still satisfy the usual ring laws exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

/// A sparse polynomial in `caps.len()` variables, truncated so that the
/// exponent of variable `r` never exceeds `caps[r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    caps: Vec<u32>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial of the ring with the given caps.
    pub fn zero(caps: &[u32]) -> Self {
        Self {
            caps: caps.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `value`.
    pub fn constant(caps: &[u32], value: impl Into<BigInt>) -> Self {
        let mut poly = Self::zero(caps);
        poly.add_term(vec![0; caps.len()], value.into());
        poly
    }

    /// A single monomial `coefficient * prod_r x_r^exponents[r]`; the zero
    /// polynomial if the exponents exceed the caps.
    pub fn monomial(caps: &[u32], exponents: &[u32], coefficient: impl Into<BigInt>) -> Self {
        assert_eq!(exponents.len(), caps.len(), "exponent arity mismatch");
        let mut poly = Self::zero(caps);
        poly.add_term(exponents.to_vec(), coefficient.into());
        poly
    }

    /// The linear form `sum_r coefficients[r] * x_r`.
    pub fn linear_form(caps: &[u32], coefficients: &[i64]) -> Self {
        assert_eq!(coefficients.len(), caps.len(), "coefficient arity mismatch");
        let mut poly = Self::zero(caps);
        for (r, &c) in coefficients.iter().enumerate() {
            let mut exps = vec![0; caps.len()];
            exps[r] = 1;
            poly.add_term(exps, BigInt::from(c));
        }
        poly
    }

    /// Number of variables of the ring.
    pub fn arity(&self) -> usize {
        self.caps.len()
    }

    /// Per-variable degree caps of the ring.
    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    /// True when no term survives.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with the given exponents (zero if the
    /// monomial is absent or exceeds the caps).
    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        assert_eq!(exponents.len(), self.caps.len(), "exponent arity mismatch");
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Sum in the same ring.
    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.caps, other.caps, "polynomials from different rings");
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            out.add_term(exps.clone(), coeff.clone());
        }
        out
    }

    /// Product in the same ring; terms exceeding any cap are dropped.
    pub fn truncated_mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.caps, other.caps, "polynomials from different rings");
        let mut out = MultiPoly::zero(&self.caps);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut exps = ea.clone();
                let mut fits = true;
                for (r, e) in exps.iter_mut().enumerate() {
                    // A sum that overflows u32 certainly exceeds the cap.
                    match e.checked_add(eb[r]) {
                        Some(sum) if sum <= self.caps[r] => *e = sum,
                        _ => {
                            fits = false;
                            break;
                        }
                    }
                }
                if fits {
                    out.add_term(exps, ca * cb);
                }
            }
        }
        out
    }

    fn add_term(&mut self, exponents: Vec<u32>, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        if exponents.iter().zip(&self.caps).any(|(&e, &cap)| e > cap) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.truncated_mul(rhs)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coeff}")?;
            for (r, &e) in exps.iter().enumerate() {
                if e == 1 {
                    write!(f, "*x{}", r + 1)?;
                } else if e > 1 {
                    write!(f, "*x{}^{}", r + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_form_powers_truncate_at_cap() {
        // (5x)^4 has degree 4, within the cap; (5x)^5 truncates to zero.
        let caps = [4];
        let line = MultiPoly::linear_form(&caps, &[5]);
        let mut power = MultiPoly::constant(&caps, 1);
        for _ in 0..4 {
            power = power.truncated_mul(&line);
        }
        assert_eq!(power.coefficient(&[4]), BigInt::from(625));
        power = power.truncated_mul(&line);
        assert!(power.is_zero());
    }

    #[test]
    fn coefficient_of_absent_monomial_is_zero() {
        let caps = [2, 2];
        let p = MultiPoly::linear_form(&caps, &[3, -3]);
        assert_eq!(p.coefficient(&[0, 0]), BigInt::zero());
        assert_eq!(p.coefficient(&[1, 0]), BigInt::from(3));
        assert_eq!(p.coefficient(&[0, 1]), BigInt::from(-3));
    }

    #[test]
    fn cancellation_removes_terms() {
        let caps = [1, 1];
        let p = MultiPoly::linear_form(&caps, &[1, 2]);
        let q = MultiPoly::linear_form(&caps, &[-1, 5]);
        let sum = p.add(&q);
        assert_eq!(sum.term_count(), 1);
        assert_eq!(sum.coefficient(&[0, 1]), BigInt::from(7));
    }

    #[test]
    fn product_distributes_over_sum() {
        let caps = [3, 3, 3];
        let a = MultiPoly::linear_form(&caps, &[1, 2, 3]);
        let b = MultiPoly::linear_form(&caps, &[4, 0, 1]);
        let c = MultiPoly::monomial(&caps, &[1, 1, 0], 7);
        let lhs = a.truncated_mul(&b.add(&c));
        let rhs = a.truncated_mul(&b).add(&a.truncated_mul(&c));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bicubic_style_expansion_matches_hand_computation() {
        // (3x + 3y)^2 truncated at caps (2, 2) keeps all terms:
        // 9x^2 + 18xy + 9y^2.
        let caps = [2, 2];
        let line = MultiPoly::linear_form(&caps, &[3, 3]);
        let square = line.truncated_mul(&line);
        assert_eq!(square.coefficient(&[2, 0]), BigInt::from(9));
        assert_eq!(square.coefficient(&[1, 1]), BigInt::from(18));
        assert_eq!(square.coefficient(&[0, 2]), BigInt::from(9));
    }

    #[test]
    #[should_panic(expected = "different rings")]
    fn mixing_rings_panics() {
        let p = MultiPoly::linear_form(&[1], &[1]);
        let q = MultiPoly::linear_form(&[2], &[1]);
        let _ = p.add(&q);
    }
}
