//! Splitting a projective-line factor into two.
//!
//! A dimension-1 row whose degrees sum to two can be replaced by two
//! dimension-1 rows together with one new polynomial column: the new column
//! is linear in both new factors (and absent from the rest), one new row
//! keeps a single chosen unit of degree, and the other keeps the remainder.
//! The move adds one to both the total dimension and the polynomial count
//! and keeps every row sum at dimension plus one, so it preserves both
//! Calabi-Yau conditions, and the resulting configuration describes the
//! same threefold — in particular the Euler characteristic is unchanged.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::config::ConfigurationMatrix;

/// Why a row cannot be expanded at a column.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("row {row} has dimension {dim}; only a P^1 factor can be split")]
    NotLine { row: usize, dim: u32 },
    #[error("row {row} sums to {sum}; splitting needs a degree sum of 2")]
    WrongDegreeSum { row: usize, sum: u32 },
    #[error("row {row} has degree 0 in column {column}; nothing to split off")]
    UnusedColumn { row: usize, column: usize },
    #[error("row {row} out of range")]
    RowOutOfRange { row: usize },
    #[error("column {column} out of range")]
    ColumnOutOfRange { column: usize },
}

/// One applied splitting move and its result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionStep {
    /// The row that was split (index in the source configuration).
    pub row: usize,
    /// The column whose unit of degree moved to the first new row.
    pub column: usize,
    /// The configuration after the split. The new polynomial column sits at
    /// index 0; the split row becomes rows `row` and `row + 1`.
    pub result: ConfigurationMatrix,
}

/// Splits dimension-1 row `row` of `cfg`, moving one unit of its degree in
/// `column` onto the first of the two replacement rows.
pub fn expand_row(
    cfg: &ConfigurationMatrix,
    row: usize,
    column: usize,
) -> Result<ExpansionStep, ExpansionError> {
    if row >= cfg.factor_count() {
        return Err(ExpansionError::RowOutOfRange { row });
    }
    if column >= cfg.polynomial_count() {
        return Err(ExpansionError::ColumnOutOfRange { column });
    }
    if cfg.dim(row) != 1 {
        return Err(ExpansionError::NotLine {
            row,
            dim: cfg.dim(row),
        });
    }
    let sum: u32 = cfg.row(row).iter().sum();
    if sum != 2 {
        return Err(ExpansionError::WrongDegreeSum { row, sum });
    }
    if cfg.degree(row, column) == 0 {
        return Err(ExpansionError::UnusedColumn { row, column });
    }

    let mut dims = Vec::with_capacity(cfg.factor_count() + 1);
    let mut degrees = Vec::with_capacity(cfg.factor_count() + 1);
    for r in 0..cfg.factor_count() {
        if r == row {
            let mut kept = vec![0u32; cfg.polynomial_count()];
            kept[column] = 1;
            let remainder: Vec<u32> = cfg
                .row(row)
                .iter()
                .zip(&kept)
                .map(|(&q, &k)| q - k)
                .collect();
            for new_row in [kept, remainder] {
                dims.push(1);
                let mut entries = vec![1u32];
                entries.extend(new_row);
                degrees.push(entries);
            }
        } else {
            dims.push(cfg.dim(r));
            let mut entries = vec![0u32];
            entries.extend_from_slice(cfg.row(r));
            degrees.push(entries);
        }
    }

    let result = ConfigurationMatrix::new(dims, degrees)
        .expect("splitting a well-formed configuration stays well-formed");
    Ok(ExpansionStep {
        row,
        column,
        result,
    })
}

/// All configurations with exactly `target_factors` projective factors
/// reachable from `cfg` by repeated splitting, up to row and column
/// permutations.
///
/// Works level by level: each level holds canonical forms with the same
/// factor count, deduplicated and sorted, and is truncated to at most
/// `limit` entries (smallest first) before the next round of splits. The
/// result is the final level in ascending order; empty when
/// `target_factors` is below the starting factor count or unreachable.
pub fn expansions_to_count(
    cfg: &ConfigurationMatrix,
    target_factors: usize,
    limit: usize,
) -> Vec<ConfigurationMatrix> {
    let start = cfg.factor_count();
    if target_factors < start {
        return Vec::new();
    }
    let mut level: Vec<ConfigurationMatrix> = vec![cfg.canonical_form()];
    for _ in start..target_factors {
        let mut next: BTreeSet<ConfigurationMatrix> = BTreeSet::new();
        for current in &level {
            for row in 0..current.factor_count() {
                for column in 0..current.polynomial_count() {
                    if let Ok(step) = expand_row(current, row, column) {
                        next.insert(step.result.canonical_form());
                    }
                }
            }
        }
        level = next.into_iter().take(limit).collect();
        if level.is_empty() {
            return Vec::new();
        }
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::topology::euler_characteristic;

    #[test]
    fn splitting_a_tetraquadric_row() {
        let step = expand_row(&catalog::tetraquadric(), 0, 0).unwrap();
        let out = &step.result;
        assert_eq!(out.dims(), &[1, 1, 1, 1, 1]);
        assert_eq!(out.row(0), &[1, 1]);
        assert_eq!(out.row(1), &[1, 1]);
        assert_eq!(out.row(2), &[0, 2]);
        assert!(out.validate().is_ok());
    }

    #[test]
    fn splitting_preserves_euler_characteristic() {
        for cfg in [catalog::tetraquadric(), catalog::five_factor_example()] {
            let chi = euler_characteristic(&cfg).unwrap();
            for row in 0..cfg.factor_count() {
                for column in 0..cfg.polynomial_count() {
                    if let Ok(step) = expand_row(&cfg, row, column) {
                        assert!(step.result.validate().is_ok());
                        assert_eq!(euler_characteristic(&step.result).unwrap(), chi);
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_error_cases() {
        assert_eq!(
            expand_row(&catalog::quintic(), 0, 0).unwrap_err(),
            ExpansionError::NotLine { row: 0, dim: 4 }
        );
        assert_eq!(
            expand_row(&catalog::five_factor_example(), 0, 0).unwrap_err(),
            ExpansionError::UnusedColumn { row: 0, column: 0 }
        );
        let curve =
            crate::config::ConfigurationMatrix::new(vec![1, 1], vec![vec![1, 0], vec![0, 1]])
                .unwrap();
        assert_eq!(
            expand_row(&curve, 0, 0).unwrap_err(),
            ExpansionError::WrongDegreeSum { row: 0, sum: 1 }
        );
        assert_eq!(
            expand_row(&catalog::quintic(), 3, 0).unwrap_err(),
            ExpansionError::RowOutOfRange { row: 3 }
        );
        assert_eq!(
            expand_row(&catalog::quintic(), 0, 5).unwrap_err(),
            ExpansionError::ColumnOutOfRange { column: 5 }
        );
    }

    #[test]
    fn all_single_tetraquadric_splits_coincide() {
        let level = expansions_to_count(&catalog::tetraquadric(), 5, 1000);
        assert_eq!(level.len(), 1);
        assert_eq!(
            euler_characteristic(&level[0]).unwrap(),
            euler_characteristic(&catalog::tetraquadric()).unwrap()
        );
    }

    #[test]
    fn quintic_has_no_splits() {
        assert!(expansions_to_count(&catalog::quintic(), 2, 1000).is_empty());
    }

    #[test]
    fn target_below_start_is_empty() {
        assert!(expansions_to_count(&catalog::tetraquadric(), 3, 1000).is_empty());
    }

    #[test]
    fn target_equal_to_start_returns_canonical_form() {
        let cfg = catalog::five_factor_example();
        let level = expansions_to_count(&cfg, 5, 1000);
        assert_eq!(level, vec![cfg.canonical_form()]);
    }
}
