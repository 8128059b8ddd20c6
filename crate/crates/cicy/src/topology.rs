//! Topological invariants of a complete-intersection configuration: the
//! third Chern class, the Euler characteristic obtained by expanding it
//! against the defining linear forms, Hodge numbers, and the Betti numbers
//! of the associated product and quotient seven-manifolds.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

use crate::config::ConfigurationMatrix;
use crate::poly::MultiPoly;

/// Errors from the invariant computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    /// The top-degree expansion coefficient was not divisible by 3. This
    /// cannot happen for a well-formed computation and indicates an
    /// internal fault, not bad input.
    #[error("Euler expansion coefficient {0} is not divisible by 3")]
    NonIntegralEuler(BigInt),
    /// The Euler characteristic must be even to split into Hodge numbers.
    #[error("non-even Euler characteristic {0}")]
    OddEuler(BigInt),
    /// The supplied h11 would force a negative or oversized h21.
    #[error("inconsistent h11: h11 = {h11} with Euler characteristic {euler} forces h21 = {h21}")]
    InconsistentH11 {
        h11: u32,
        euler: BigInt,
        h21: BigInt,
    },
}

/// The coefficients of the third Chern class of the intersection, stored
/// multiplied by 3 so they stay integers. Symmetric in the three indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernCubic {
    arity: usize,
    tripled: BTreeMap<[usize; 3], i64>,
}

impl ChernCubic {
    /// Number of projective factors the indices range over.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Three times the coefficient of `x_r x_s x_t` in the third Chern
    /// class, in any index order.
    pub fn tripled(&self, r: usize, s: usize, t: usize) -> i64 {
        let mut key = [r, s, t];
        key.sort_unstable();
        self.tripled.get(&key).copied().unwrap_or(0)
    }

    /// The cubic as a polynomial: the sum over all *ordered* index triples
    /// of the tripled coefficient times `x_r x_s x_t`. Equal to nine times
    /// the third Chern class.
    pub fn as_poly(&self, caps: &[u32]) -> MultiPoly {
        assert_eq!(caps.len(), self.arity, "cap arity mismatch");
        let mut poly = MultiPoly::zero(caps);
        for r in 0..self.arity {
            for s in 0..self.arity {
                for t in 0..self.arity {
                    let value = self.tripled(r, s, t);
                    if value == 0 {
                        continue;
                    }
                    let mut exps = vec![0u32; self.arity];
                    exps[r] += 1;
                    exps[s] += 1;
                    exps[t] += 1;
                    poly = poly.add(&MultiPoly::monomial(caps, &exps, value));
                }
            }
        }
        poly
    }
}

/// Third Chern class of the intersection, tripled to stay integral:
/// `3 * c3^(rst) = (n_r + 1) [r = s = t] - sum_a q_a^r q_a^s q_a^t`.
pub fn chern_cubic(cfg: &ConfigurationMatrix) -> ChernCubic {
    let m = cfg.factor_count();
    let mut tripled = BTreeMap::new();
    for r in 0..m {
        for s in r..m {
            for t in s..m {
                let mut value: i64 = if r == s && s == t {
                    i64::from(cfg.dim(r)) + 1
                } else {
                    0
                };
                for a in 0..cfg.polynomial_count() {
                    value -= i64::from(cfg.degree(r, a))
                        * i64::from(cfg.degree(s, a))
                        * i64::from(cfg.degree(t, a));
                }
                if value != 0 {
                    tripled.insert([r, s, t], value);
                }
            }
        }
    }
    ChernCubic { arity: m, tripled }
}

/// Euler characteristic of the intersection: the coefficient of the
/// monomial `prod_r x_r^(n_r)` in the tripled Chern cubic times the product
/// of the defining linear forms `sum_r q_a^r x_r`, divided exactly by 3.
///
/// The expansion runs in the polynomial ring truncated at the factor
/// dimensions; dropped terms cannot contribute to the top coefficient, so
/// truncation is exact here.
pub fn euler_characteristic(cfg: &ConfigurationMatrix) -> Result<BigInt, TopologyError> {
    let caps = cfg.dims().to_vec();
    let mut acc = chern_cubic(cfg).as_poly(&caps);
    for a in 0..cfg.polynomial_count() {
        let coeffs: Vec<i64> = cfg.column(a).iter().map(|&q| i64::from(q)).collect();
        acc = acc.truncated_mul(&MultiPoly::linear_form(&caps, &coeffs));
    }
    let top = acc.coefficient(&caps);
    let three = BigInt::from(3);
    if (&top % &three) != BigInt::zero() {
        return Err(TopologyError::NonIntegralEuler(top));
    }
    Ok(top / three)
}

/// The two independent Hodge numbers of a Calabi-Yau threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HodgePair {
    pub h11: u32,
    pub h21: u32,
}

/// Recovers `h21` from the Euler characteristic `chi = 2 (h11 - h21)` and
/// a known `h11`. Fails if `chi` is odd or the implied `h21` is negative.
pub fn hodge_from_euler(euler: &BigInt, h11: u32) -> Result<HodgePair, TopologyError> {
    let two = BigInt::from(2);
    if (euler % &two) != BigInt::zero() {
        return Err(TopologyError::OddEuler(euler.clone()));
    }
    let h21 = BigInt::from(h11) - euler / &two;
    if h21 < BigInt::zero() || h21 > BigInt::from(u32::MAX) {
        return Err(TopologyError::InconsistentH11 {
            h11,
            euler: euler.clone(),
            h21,
        });
    }
    let h21 = u32::try_from(&h21).expect("bounds checked above");
    Ok(HodgePair { h11, h21 })
}

/// First three Betti numbers of a closed seven-manifold (b0 = 1 always).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BettiNumbers {
    pub b1: u32,
    pub b2: u32,
    pub b3: u32,
}

/// Betti numbers of the product of the Calabi-Yau threefold with a circle,
/// by the Kunneth formula.
pub fn product_betti(hodge: &HodgePair) -> BettiNumbers {
    BettiNumbers {
        b1: 1,
        b2: hodge.h11,
        b3: hodge.h11 + 2 * (hodge.h21 + 1),
    }
}

/// Betti numbers of the quotient of that product by a free involution that
/// acts antiholomorphically on the threefold and swaps `n_c` pairs of
/// ambient factors while reflecting the circle.
///
/// # Panics
///
/// Panics unless `2 * n_c <= h11`: each swapped pair consumes two ambient
/// (1,1)-classes, so more pairs than that cannot occur.
pub fn barely_betti(hodge: &HodgePair, n_c: u32) -> BettiNumbers {
    assert!(
        2 * n_c <= hodge.h11,
        "n_c = {} exceeds floor(h11 / 2) = {}",
        n_c,
        hodge.h11 / 2
    );
    BettiNumbers {
        b1: 0,
        b2: n_c,
        b3: hodge.h11 + hodge.h21 + 1 - n_c,
    }
}
