//! Slow, direct reference implementations used to cross-check the fast
//! ones on random inputs.

use std::collections::HashMap;

use cicy::ConfigurationMatrix;
use itertools::Itertools;

/// Euler characteristic by dense, untruncated polynomial expansion.
///
/// Builds the full cubic `sum over ordered (r, s, t) of
/// ((n_r + 1) [r = s = t] - sum_a q_a^r q_a^s q_a^t) x_r x_s x_t`, then
/// multiplies out every defining linear form with no degree caps at all,
/// reads off the coefficient of `prod_r x_r^(n_r)`, and divides by 3.
///
/// # Panics
///
/// Panics when the coefficient is not divisible by 3, which would mean the
/// computation itself is wrong.
pub fn euler_by_dense_expansion(cfg: &ConfigurationMatrix) -> i128 {
    let m = cfg.factor_count();
    let k = cfg.polynomial_count();

    let mut acc: HashMap<Vec<u32>, i128> = HashMap::new();
    for r in 0..m {
        for s in 0..m {
            for t in 0..m {
                let mut tripled: i128 = if r == s && s == t {
                    i128::from(cfg.dim(r)) + 1
                } else {
                    0
                };
                for a in 0..k {
                    tripled -= i128::from(cfg.degree(r, a))
                        * i128::from(cfg.degree(s, a))
                        * i128::from(cfg.degree(t, a));
                }
                if tripled != 0 {
                    let mut exps = vec![0u32; m];
                    exps[r] += 1;
                    exps[s] += 1;
                    exps[t] += 1;
                    *acc.entry(exps).or_insert(0) += tripled;
                }
            }
        }
    }

    for a in 0..k {
        let mut next: HashMap<Vec<u32>, i128> = HashMap::new();
        for (exps, coeff) in &acc {
            for r in 0..m {
                let q = i128::from(cfg.degree(r, a));
                if q == 0 {
                    continue;
                }
                let mut bumped = exps.clone();
                bumped[r] += 1;
                *next.entry(bumped).or_insert(0) += coeff * q;
            }
        }
        acc = next;
    }

    let top = acc.get(cfg.dims()).copied().unwrap_or(0);
    assert_eq!(top % 3, 0, "top coefficient {top} not divisible by 3");
    top / 3
}

/// Swap invariance by explicit search: applies the simultaneous row swaps
/// and asks whether *some* column permutation maps the result back onto
/// the original matrix, trying all `K!` of them.
pub fn swap_invariant_by_column_search(
    cfg: &ConfigurationMatrix,
    pairs: &[(usize, usize)],
) -> bool {
    let m = cfg.factor_count();
    let k = cfg.polynomial_count();
    let mut perm: Vec<usize> = (0..m).collect();
    for &(a, b) in pairs {
        perm.swap(a, b);
    }
    (0..k).permutations(k).any(|cols| {
        (0..m).all(|r| (0..k).all(|a| cfg.degree(perm[r], cols[a]) == cfg.degree(r, a)))
    })
}

/// Every admissible set of simultaneous swaps, found the slow way: all
/// bitmask subsets of the dimension-compatible row pairs, kept when the
/// pairs are disjoint and [`swap_invariant_by_column_search`] accepts the
/// whole set. Sorted pair lists, ascending.
pub fn enumerate_c_by_brute_force(cfg: &ConfigurationMatrix) -> Vec<Vec<(usize, usize)>> {
    let m = cfg.factor_count();
    let candidates: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| ((a + 1)..m).map(move |b| (a, b)))
        .filter(|&(a, b)| cfg.dim(a) == cfg.dim(b))
        .collect();
    assert!(
        candidates.len() < 64,
        "too many candidate pairs for bitmasks"
    );

    let mut out = Vec::new();
    'subsets: for mask in 0u64..(1u64 << candidates.len()) {
        let subset: Vec<(usize, usize)> = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        let mut used = vec![false; m];
        for &(a, b) in &subset {
            if used[a] || used[b] {
                continue 'subsets;
            }
            used[a] = true;
            used[b] = true;
        }
        if swap_invariant_by_column_search(cfg, &subset) {
            out.push(subset);
        }
    }
    out.sort();
    out
}

/// Freeness parity rule, restated: for each class of identical columns
/// that meets the candidate free-conjugation rows, with `r` columns in the
/// class and `Q` the per-column degree sum over those rows, the class
/// obstructs freeness iff `r * Q` is odd.
pub fn b_admissible_reference(cfg: &ConfigurationMatrix, rows: &[usize]) -> bool {
    let k = cfg.polynomial_count();
    let mut seen = vec![false; k];
    for a in 0..k {
        if seen[a] {
            continue;
        }
        let col = cfg.column(a);
        let members: Vec<usize> = (0..k).filter(|&b| cfg.column(b) == col).collect();
        for &b in &members {
            seen[b] = true;
        }
        if !rows.iter().any(|&r| col[r] > 0) {
            continue;
        }
        let per_column: u64 = rows.iter().map(|&r| u64::from(col[r])).sum();
        if (members.len() as u64 * per_column) % 2 == 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use cicy::catalog;

    #[test]
    fn dense_expansion_reproduces_known_euler_characteristics() {
        assert_eq!(euler_by_dense_expansion(&catalog::quintic()), -200);
        assert_eq!(euler_by_dense_expansion(&catalog::bicubic()), -162);
        assert_eq!(euler_by_dense_expansion(&catalog::tetraquadric()), -128);
        assert_eq!(
            euler_by_dense_expansion(&catalog::five_factor_example()),
            -56
        );
    }

    #[test]
    fn column_search_agrees_on_simple_cases() {
        let cfg = catalog::five_factor_example();
        assert!(swap_invariant_by_column_search(&cfg, &[]));
        assert!(swap_invariant_by_column_search(&cfg, &[(1, 2)]));
        assert!(!swap_invariant_by_column_search(&cfg, &[(0, 1)]));
    }

    #[test]
    fn brute_force_c_sets_for_the_five_factor_example() {
        assert_eq!(
            enumerate_c_by_brute_force(&catalog::five_factor_example()),
            vec![vec![], vec![(1, 2)]]
        );
    }

    #[test]
    fn parity_reference_matches_hand_checked_cases() {
        let cfg = catalog::five_factor_example();
        assert!(b_admissible_reference(&cfg, &[0]));
        assert!(!b_admissible_reference(&cfg, &[1]));
        assert!(b_admissible_reference(&cfg, &[1, 2]));
        assert!(b_admissible_reference(&cfg, &[0, 1, 2]));
        assert!(!b_admissible_reference(&cfg, &[4]));
    }
}
