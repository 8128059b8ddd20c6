//! Enumeration of antiholomorphic involutions acting on a configuration.
//!
//! An involution acts on each projective factor in one of three ways:
//! plain conjugation (type A, any factor), the free conjugation without
//! real fixed points (type B, only on odd-dimensional factors), or a swap
//! of two factors of equal dimension (type C). A type-C set of swaps is
//! admissible when the *simultaneous* swap of all its row pairs leaves the
//! column multiset unchanged; pairs cannot be checked one at a time because
//! two individually inadmissible swaps can compensate each other. The
//! quotient is smooth exactly when the action is free, which happens
//! exactly when at least one factor carries type B and the parity condition
//! of [`b_admissible`] holds.

use std::collections::BTreeMap;

use crate::config::ConfigurationMatrix;

/// A set of disjoint row pairs swapped by the involution (type C), stored
/// as `(low, high)` pairs in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CCombination {
    pairs: Vec<(usize, usize)>,
}

impl CCombination {
    /// The empty combination: no factors are swapped.
    pub fn empty() -> Self {
        Self { pairs: Vec::new() }
    }

    /// Builds a combination from row pairs, normalising each pair to
    /// `(low, high)` and sorting.
    ///
    /// # Panics
    ///
    /// Panics if a row appears twice or a pair repeats a row.
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort_unstable();
        let mut seen = Vec::new();
        for &(a, b) in &pairs {
            assert_ne!(a, b, "a row cannot be paired with itself");
            assert!(
                !seen.contains(&a) && !seen.contains(&b),
                "pairs must be disjoint"
            );
            seen.push(a);
            seen.push(b);
        }
        Self { pairs }
    }

    /// The swapped row pairs in ascending order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of swapped pairs (`n_c`).
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// True when no rows are swapped.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Rows covered by some pair, in ascending order.
    pub fn rows(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        rows.sort_unstable();
        rows
    }

    /// True if `row` belongs to one of the pairs.
    pub fn contains_row(&self, row: usize) -> bool {
        self.pairs.iter().any(|&(a, b)| a == row || b == row)
    }
}

/// The set of rows on which the involution acts by the free conjugation
/// (type B), stored in ascending order. Always nonempty: an empty set
/// would leave the action with fixed points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BCombination {
    rows: Vec<usize>,
}

impl BCombination {
    /// Builds a combination from a nonempty set of distinct rows.
    ///
    /// # Panics
    ///
    /// Panics if `rows` is empty or contains duplicates.
    pub fn new(mut rows: Vec<usize>) -> Self {
        assert!(!rows.is_empty(), "a type-B set must be nonempty");
        rows.sort_unstable();
        assert!(
            rows.windows(2).all(|w| w[0] != w[1]),
            "rows must be distinct"
        );
        Self { rows }
    }

    /// The rows in ascending order.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// True if `row` is in the set.
    pub fn contains(&self, row: usize) -> bool {
        self.rows.binary_search(&row).is_ok()
    }
}

/// How the involution treats one projective factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowRole {
    /// Plain conjugation.
    A,
    /// Free conjugation (no real points).
    B,
    /// Swapped with its partner; the payload numbers the pair from 1.
    C(usize),
}

/// A complete choice of involution: which pairs are swapped and which of
/// the remaining factors carry the free conjugation. Every other factor
/// implicitly carries plain conjugation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvolutionAssignment {
    pub c: CCombination,
    pub b: BCombination,
}

impl InvolutionAssignment {
    /// Number of swapped factor pairs.
    pub fn n_c(&self) -> usize {
        self.c.pair_count()
    }

    /// Role of a single row under this assignment.
    pub fn role_of(&self, row: usize) -> RowRole {
        for (index, &(a, b)) in self.c.pairs().iter().enumerate() {
            if a == row || b == row {
                return RowRole::C(index + 1);
            }
        }
        if self.b.contains(row) {
            RowRole::B
        } else {
            RowRole::A
        }
    }
}

/// All admissible type-C combinations, in lexicographic order of their
/// pair lists (the empty combination first).
///
/// Candidates are sets of disjoint row pairs with equal factor dimensions;
/// each set is kept iff the simultaneous swap of all its pairs leaves the
/// column multiset unchanged. The check is deliberately on the whole set:
/// admissibility is not monotone in the pairs.
pub fn enumerate_c_combinations(cfg: &ConfigurationMatrix) -> Vec<CCombination> {
    let m = cfg.factor_count();
    let candidates: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| ((a + 1)..m).map(move |b| (a, b)))
        .filter(|&(a, b)| cfg.dim(a) == cfg.dim(b))
        .collect();

    let mut out = Vec::new();
    let mut current: Vec<(usize, usize)> = Vec::new();
    fn walk(
        cfg: &ConfigurationMatrix,
        candidates: &[(usize, usize)],
        from: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<CCombination>,
    ) {
        if cfg.invariant_under_row_swaps(current) {
            out.push(CCombination {
                pairs: current.clone(),
            });
        }
        for i in from..candidates.len() {
            let (a, b) = candidates[i];
            if current
                .iter()
                .any(|&(x, y)| x == a || y == a || x == b || y == b)
            {
                continue;
            }
            current.push((a, b));
            walk(cfg, candidates, i + 1, current, out);
            current.pop();
        }
    }
    walk(cfg, &candidates, 0, &mut current, &mut out);
    out
}

/// Parity condition for a candidate type-B row set `rows` to give a free
/// action alongside the swaps in `c`.
///
/// Let the *involved* columns be those with a nonzero degree in some row of
/// `rows`. Group involved columns into classes of identical columns (whole
/// columns, over all rows). A class of size `r` whose total degree over the
/// rows of `rows`, summed across the class, is `Q` obstructs freeness iff
/// both `r` and `Q` are odd; the set is admissible iff no class obstructs.
///
/// # Panics
///
/// Panics if `rows` is empty, repeats a row, references a row out of
/// range or of even dimension, or overlaps the rows swapped by `c`.
pub fn b_admissible(cfg: &ConfigurationMatrix, c: &CCombination, rows: &[usize]) -> bool {
    assert!(!rows.is_empty(), "a type-B set must be nonempty");
    let m = cfg.factor_count();
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    assert!(
        sorted.windows(2).all(|w| w[0] != w[1]),
        "rows must be distinct"
    );
    for &r in rows {
        assert!(r < m, "row {r} out of range");
        assert_eq!(
            cfg.dim(r) % 2,
            1,
            "row {r} has even dimension {}",
            cfg.dim(r)
        );
        assert!(
            !c.contains_row(r),
            "row {r} is already swapped by the type-C combination"
        );
    }

    let mut classes: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for a in 0..cfg.polynomial_count() {
        if rows.iter().any(|&r| cfg.degree(r, a) > 0) {
            classes.entry(cfg.column(a)).or_default().push(a);
        }
    }

    for members in classes.values() {
        if members.len() % 2 == 0 {
            continue;
        }
        let degree_sum: u64 = members
            .iter()
            .map(|&a| {
                rows.iter()
                    .map(|&r| u64::from(cfg.degree(r, a)))
                    .sum::<u64>()
            })
            .sum();
        if degree_sum % 2 == 1 {
            return false;
        }
    }
    true
}

/// All admissible nonempty type-B row sets compatible with `c`, in
/// lexicographic order of their row lists.
pub fn enumerate_b_combinations(cfg: &ConfigurationMatrix, c: &CCombination) -> Vec<BCombination> {
    let eligible: Vec<usize> = (0..cfg.factor_count())
        .filter(|&r| cfg.dim(r) % 2 == 1 && !c.contains_row(r))
        .collect();
    assert!(
        eligible.len() < 64,
        "{} eligible rows exceed the subset enumeration limit",
        eligible.len()
    );
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << eligible.len()) {
        let rows: Vec<usize> = eligible
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &r)| r)
            .collect();
        if b_admissible(cfg, c, &rows) {
            out.push(BCombination { rows });
        }
    }
    out.sort();
    out
}

/// Every free involution assignment: each admissible type-C combination
/// paired with each compatible nonempty type-B set, in the enumeration
/// order of [`enumerate_c_combinations`] then [`enumerate_b_combinations`].
pub fn enumerate_free_assignments(cfg: &ConfigurationMatrix) -> Vec<InvolutionAssignment> {
    let mut out = Vec::new();
    for c in enumerate_c_combinations(cfg) {
        for b in enumerate_b_combinations(cfg, &c) {
            out.push(InvolutionAssignment { c: c.clone(), b });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::config::ConfigurationMatrix;

    fn pairs(combos: &[CCombination]) -> Vec<Vec<(usize, usize)>> {
        combos.iter().map(|c| c.pairs().to_vec()).collect()
    }

    fn row_sets(combos: &[BCombination]) -> Vec<Vec<usize>> {
        combos.iter().map(|b| b.rows().to_vec()).collect()
    }

    #[test]
    fn quintic_has_only_the_empty_c_combination() {
        assert_eq!(
            pairs(&enumerate_c_combinations(&catalog::quintic())),
            vec![vec![]]
        );
    }

    #[test]
    fn bicubic_c_combinations() {
        assert_eq!(
            pairs(&enumerate_c_combinations(&catalog::bicubic())),
            vec![vec![], vec![(0, 1)]]
        );
    }

    #[test]
    fn five_factor_c_combinations() {
        assert_eq!(
            pairs(&enumerate_c_combinations(&catalog::five_factor_example())),
            vec![vec![], vec![(1, 2)]]
        );
    }

    #[test]
    fn tetraquadric_c_combinations_count_all_matchings() {
        // Empty set, six single pairs, three perfect matchings.
        let combos = enumerate_c_combinations(&catalog::tetraquadric());
        assert_eq!(combos.len(), 10);
        assert_eq!(combos.iter().filter(|c| c.pair_count() == 1).count(), 6);
        assert_eq!(combos.iter().filter(|c| c.pair_count() == 2).count(), 3);
    }

    #[test]
    fn c_admissibility_is_not_monotone() {
        // Swapping rows 0 and 1 alone breaks the column multiset, but
        // swapping (0,1) and (2,3) together restores it.
        let cfg = ConfigurationMatrix::new(
            vec![1, 1, 1, 1],
            vec![vec![1, 0], vec![0, 1], vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        let combos = pairs(&enumerate_c_combinations(&cfg));
        assert!(!combos.contains(&vec![(0, 1)]));
        assert!(combos.contains(&vec![(0, 1), (2, 3)]));
        assert_eq!(
            combos,
            vec![
                vec![],
                vec![(0, 1), (2, 3)],
                vec![(0, 2)],
                vec![(0, 2), (1, 3)],
                vec![(0, 3), (1, 2)],
                vec![(1, 3)],
            ]
        );
    }

    #[test]
    fn five_factor_b_admissibility() {
        let cfg = catalog::five_factor_example();
        let none = CCombination::empty();
        let swap = CCombination::new(vec![(1, 2)]);
        // The dimension-3 factor meets a singleton column class with odd
        // degree sum, so it never carries the free conjugation.
        assert!(!b_admissible(&cfg, &swap, &[4]));
        assert!(!b_admissible(&cfg, &none, &[4]));
        assert!(b_admissible(&cfg, &none, &[0]));
        assert!(!b_admissible(&cfg, &none, &[1]));
        assert!(b_admissible(&cfg, &none, &[1, 2]));
        assert!(b_admissible(&cfg, &none, &[0, 1, 2]));
        assert!(!b_admissible(&cfg, &none, &[0, 1]));
    }

    #[test]
    #[should_panic(expected = "even dimension")]
    fn b_admissible_rejects_even_dimensional_rows() {
        let cfg = catalog::five_factor_example();
        b_admissible(&cfg, &CCombination::empty(), &[3]);
    }

    #[test]
    #[should_panic(expected = "already swapped")]
    fn b_admissible_rejects_rows_in_c() {
        let cfg = catalog::five_factor_example();
        b_admissible(&cfg, &CCombination::new(vec![(1, 2)]), &[1]);
    }

    #[test]
    fn five_factor_b_combinations() {
        let cfg = catalog::five_factor_example();
        assert_eq!(
            row_sets(&enumerate_b_combinations(&cfg, &CCombination::empty())),
            vec![vec![0], vec![0, 1, 2], vec![1, 2]]
        );
        assert_eq!(
            row_sets(&enumerate_b_combinations(
                &cfg,
                &CCombination::new(vec![(1, 2)])
            )),
            vec![vec![0]]
        );
    }

    #[test]
    fn five_factor_free_assignments() {
        let assignments = enumerate_free_assignments(&catalog::five_factor_example());
        assert_eq!(assignments.len(), 4);
        let n_c: Vec<usize> = assignments.iter().map(|a| a.n_c()).collect();
        assert_eq!(n_c, vec![0, 0, 0, 1]);
    }

    #[test]
    fn bicubic_has_no_free_assignments() {
        // Both factors are even-dimensional, so no row can carry type B.
        assert!(enumerate_free_assignments(&catalog::bicubic()).is_empty());
    }

    #[test]
    fn tetraquadric_free_assignment_census() {
        // All four rows are odd-dimensional and the single column keeps
        // every degree sum even, so every nonempty subset of unswapped rows
        // is admissible: 15 for the empty swap set, 3 for each of the six
        // single swaps, none for the perfect matchings.
        let assignments = enumerate_free_assignments(&catalog::tetraquadric());
        assert_eq!(assignments.len(), 15 + 6 * 3);
        assert_eq!(assignments.iter().filter(|a| a.n_c() == 0).count(), 15);
        assert_eq!(assignments.iter().filter(|a| a.n_c() == 1).count(), 18);
        assert_eq!(assignments.iter().filter(|a| a.n_c() == 2).count(), 0);
    }

    #[test]
    fn roles_cover_all_rows() {
        let cfg = catalog::five_factor_example();
        let assignment = InvolutionAssignment {
            c: CCombination::new(vec![(1, 2)]),
            b: BCombination::new(vec![0]),
        };
        let roles: Vec<RowRole> = (0..cfg.factor_count())
            .map(|r| assignment.role_of(r))
            .collect();
        assert_eq!(
            roles,
            vec![
                RowRole::B,
                RowRole::C(1),
                RowRole::C(1),
                RowRole::A,
                RowRole::A
            ]
        );
    }
}
