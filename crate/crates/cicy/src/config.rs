//! Configuration matrices for complete intersections in products of
//! projective spaces, together with the Calabi-Yau validity checks and the
//! canonical form used to compare configurations up to row and column
//! permutations.

use std::fmt;

use thiserror::Error;

/// Errors raised while constructing a [`ConfigurationMatrix`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("a configuration needs at least one projective factor")]
    NoFactors,
    #[error("a configuration needs at least one polynomial column")]
    NoPolynomials,
    #[error("dims lists {dims} factors but the degree matrix has {rows} rows")]
    DimsMismatch { dims: usize, rows: usize },
    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("projective factor {row} has dimension 0")]
    ZeroDimension { row: usize },
    #[error("column {column} is identically zero (degenerate polynomial)")]
    ZeroColumn { column: usize },
}

/// A complete-intersection configuration: the dimension vector of the
/// ambient product of projective spaces together with the matrix of
/// multidegrees, one row per factor and one column per polynomial.
///
/// The matrix is immutable after construction. Construction enforces only
/// structural well-formedness (rectangular, positive dimensions, no
/// identically-zero column); the Calabi-Yau conditions are checked
/// separately by [`ConfigurationMatrix::validate`] so that callers can
/// report *why* an input fails rather than being unable to represent it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConfigurationMatrix {
    dims: Vec<u32>,
    degrees: Vec<Vec<u32>>,
}

impl ConfigurationMatrix {
    /// Builds a configuration from the factor dimensions and the degree
    /// matrix (row-major, one row per factor).
    pub fn new(dims: Vec<u32>, degrees: Vec<Vec<u32>>) -> Result<Self, ConfigError> {
        if dims.is_empty() {
            return Err(ConfigError::NoFactors);
        }
        if dims.len() != degrees.len() {
            return Err(ConfigError::DimsMismatch {
                dims: dims.len(),
                rows: degrees.len(),
            });
        }
        let width = degrees[0].len();
        if width == 0 {
            return Err(ConfigError::NoPolynomials);
        }
        for (row, entries) in degrees.iter().enumerate() {
            if entries.len() != width {
                return Err(ConfigError::RaggedRow {
                    row,
                    got: entries.len(),
                    expected: width,
                });
            }
        }
        if let Some(row) = dims.iter().position(|&n| n == 0) {
            return Err(ConfigError::ZeroDimension { row });
        }
        for column in 0..width {
            if degrees.iter().all(|row| row[column] == 0) {
                return Err(ConfigError::ZeroColumn { column });
            }
        }
        Ok(Self { dims, degrees })
    }

    /// Number of projective factors (rows).
    pub fn factor_count(&self) -> usize {
        self.dims.len()
    }

    /// Number of defining polynomials (columns).
    pub fn polynomial_count(&self) -> usize {
        self.degrees[0].len()
    }

    /// Dimension vector of the ambient factors.
    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Dimension of a single factor.
    pub fn dim(&self, row: usize) -> u32 {
        self.dims[row]
    }

    /// Degree of polynomial `column` in the coordinates of factor `row`.
    pub fn degree(&self, row: usize, column: usize) -> u32 {
        self.degrees[row][column]
    }

    /// One row of the degree matrix.
    pub fn row(&self, row: usize) -> &[u32] {
        &self.degrees[row]
    }

    /// One column of the degree matrix, top to bottom.
    pub fn column(&self, column: usize) -> Vec<u32> {
        self.degrees.iter().map(|row| row[column]).collect()
    }

    /// All columns, in matrix order.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.polynomial_count())
            .map(|a| self.column(a))
            .collect()
    }

    /// Checks the two Calabi-Yau conditions: the intersection is a
    /// threefold exactly when the number of polynomials equals the total
    /// dimension minus three, and the first Chern class vanishes exactly
    /// when every row of degrees sums to the factor dimension plus one.
    pub fn validate(&self) -> ValidationReport {
        let total_dim: u32 = self.dims.iter().sum();
        let k = self.polynomial_count() as i64;
        let threefold_ok = k == total_dim as i64 - 3;

        let mut messages = Vec::new();
        if !threefold_ok {
            messages.push(format!(
                "not a threefold: {} polynomials, expected sum(dims) - 3 = {}",
                k,
                total_dim as i64 - 3
            ));
        }

        let mut chern_ok = true;
        for (r, row) in self.degrees.iter().enumerate() {
            let row_sum: u32 = row.iter().sum();
            if row_sum != self.dims[r] + 1 {
                chern_ok = false;
                messages.push(format!(
                    "first Chern class does not vanish: row {} sums to {}, expected {}",
                    r + 1,
                    row_sum,
                    self.dims[r] + 1
                ));
            }
        }

        let degenerate_columns: Vec<usize> = (0..self.polynomial_count())
            .filter(|&a| self.degrees.iter().all(|row| row[a] == 0))
            .collect();
        for &a in &degenerate_columns {
            messages.push(format!("column {} is identically zero", a + 1));
        }

        ValidationReport {
            threefold_ok,
            chern_ok,
            degenerate_columns,
            messages,
        }
    }

    /// True when [`validate`](Self::validate) reports no failures.
    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Applies a row permutation and a column permutation; entry `(r, a)`
    /// of the result is entry `(row_perm[r], col_perm[a])` of `self`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> ConfigurationMatrix {
        assert_eq!(row_perm.len(), self.factor_count());
        assert_eq!(col_perm.len(), self.polynomial_count());
        let dims = row_perm.iter().map(|&r| self.dims[r]).collect();
        let degrees = row_perm
            .iter()
            .map(|&r| col_perm.iter().map(|&a| self.degrees[r][a]).collect())
            .collect();
        ConfigurationMatrix { dims, degrees }
    }

    /// True iff simultaneously exchanging the rows in every pair leaves the
    /// multiset of columns unchanged, i.e. the swapped matrix equals the
    /// original up to a column permutation.
    ///
    /// # Panics
    ///
    /// Panics if the pairs overlap, reference rows out of range, or pair
    /// rows of different dimensions.
    pub fn invariant_under_row_swaps(&self, pairs: &[(usize, usize)]) -> bool {
        let m = self.factor_count();
        let mut used = vec![false; m];
        for &(a, b) in pairs {
            assert!(a < m && b < m, "row pair ({a}, {b}) out of range");
            assert_ne!(a, b, "a row cannot be paired with itself");
            assert!(!used[a] && !used[b], "row pairs must be disjoint");
            used[a] = true;
            used[b] = true;
            assert_eq!(
                self.dims[a], self.dims[b],
                "paired rows must have equal dimensions"
            );
        }

        let mut perm: Vec<usize> = (0..m).collect();
        for &(a, b) in pairs {
            perm.swap(a, b);
        }

        let mut original = self.columns();
        let mut swapped: Vec<Vec<u32>> = (0..self.polynomial_count())
            .map(|a| perm.iter().map(|&r| self.degrees[r][a]).collect())
            .collect();
        original.sort_unstable();
        swapped.sort_unstable();
        original == swapped
    }

    /// Canonical representative of the configuration's equivalence class
    /// under arbitrary row and column permutations (dimensions travel with
    /// their rows).
    ///
    /// Rows are first partitioned by iterated refinement of
    /// permutation-invariant keys, seeded with `(dimension, entry multiset)`
    /// and refined against column classes until stable. The representative
    /// is then the minimum, over all row orders consistent with that
    /// partition, of the matrix with its columns sorted lexicographically.
    /// Any two matrices related by row plus column permutations therefore
    /// canonicalise identically, and the map is idempotent.
    pub fn canonical_form(&self) -> ConfigurationMatrix {
        let m = self.factor_count();
        let k = self.polynomial_count();

        let initial: Vec<(u32, Vec<u32>)> = (0..m)
            .map(|r| {
                let mut entries = self.degrees[r].clone();
                entries.sort_unstable();
                (self.dims[r], entries)
            })
            .collect();
        let mut rank = dense_ranks(&initial);

        loop {
            let col_keys: Vec<Vec<(usize, u32)>> = (0..k)
                .map(|a| {
                    let mut sig: Vec<(usize, u32)> =
                        (0..m).map(|r| (rank[r], self.degrees[r][a])).collect();
                    sig.sort_unstable();
                    sig
                })
                .collect();
            let col_rank = dense_ranks(&col_keys);

            let refined: Vec<(usize, Vec<(usize, u32)>)> = (0..m)
                .map(|r| {
                    let mut sig: Vec<(usize, u32)> =
                        (0..k).map(|a| (col_rank[a], self.degrees[r][a])).collect();
                    sig.sort_unstable();
                    (rank[r], sig)
                })
                .collect();
            let new_rank = dense_ranks(&refined);
            let stable = class_count(&new_rank) == class_count(&rank);
            rank = new_rank;
            if stable {
                break;
            }
        }

        // Rows in ascending class order; the dimension vector is the same
        // for every candidate row order below because classes never mix
        // dimensions.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&r| (rank[r], r));
        let dims: Vec<u32> = order.iter().map(|&r| self.dims[r]).collect();

        let mut groups: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut idx = 0;
        while idx < m {
            let class = rank[order[idx]];
            let mut group = Vec::new();
            while idx < m && rank[order[idx]] == class {
                group.push(self.degrees[order[idx]].clone());
                idx += 1;
            }
            group.sort_unstable();
            groups.push(group);
        }

        let mut best: Option<Vec<Vec<u32>>> = None;
        let mut prefix: Vec<Vec<u32>> = Vec::with_capacity(m);
        minimise_over_group_orders(&mut groups, 0, &mut prefix, &mut best);
        let best_columns = best.expect("at least one candidate row order exists");

        let degrees: Vec<Vec<u32>> = (0..m)
            .map(|r| best_columns.iter().map(|col| col[r]).collect())
            .collect();
        ConfigurationMatrix { dims, degrees }
    }
}

impl fmt::Display for ConfigurationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.factor_count() {
            write!(f, "[{} |", self.dims[r])?;
            for a in 0..self.polynomial_count() {
                write!(f, " {}", self.degrees[r][a])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Outcome of the Calabi-Yau validity checks. Failures are report content,
/// not errors: the caller decides what to do with an invalid configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// `K = sum(dims) - 3` holds exactly.
    pub threefold_ok: bool,
    /// Every row of degrees sums to its factor dimension plus one.
    pub chern_ok: bool,
    /// Columns that are identically zero (always empty for matrices built
    /// through [`ConfigurationMatrix::new`], which rejects them).
    pub degenerate_columns: Vec<usize>,
    /// Human-readable explanations for each failure.
    pub messages: Vec<String>,
}

impl ValidationReport {
    /// True when both conditions hold and no column is degenerate.
    pub fn is_ok(&self) -> bool {
        self.threefold_ok && self.chern_ok && self.degenerate_columns.is_empty()
    }
}

/// Dense ranks of `keys`: equal keys get equal ranks, ranks are contiguous
/// from zero in key order.
fn dense_ranks<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|key| sorted.binary_search(key).expect("key present"))
        .collect()
}

fn class_count(rank: &[usize]) -> usize {
    rank.iter().copied().max().map_or(0, |r| r + 1)
}

/// Walks every distinct arrangement of the rows within each class (classes
/// stay in order, identical rows are interchangeable) and keeps the
/// lexicographically smallest column-sorted matrix.
fn minimise_over_group_orders(
    groups: &mut [Vec<Vec<u32>>],
    group_idx: usize,
    prefix: &mut Vec<Vec<u32>>,
    best: &mut Option<Vec<Vec<u32>>>,
) {
    if group_idx == groups.len() {
        let k = prefix[0].len();
        let mut columns: Vec<Vec<u32>> = (0..k)
            .map(|a| prefix.iter().map(|row| row[a]).collect())
            .collect();
        columns.sort_unstable();
        if best.as_ref().is_none_or(|b| columns < *b) {
            *best = Some(columns);
        }
        return;
    }
    if groups[group_idx].is_empty() {
        minimise_over_group_orders(groups, group_idx + 1, prefix, best);
        return;
    }
    let len = groups[group_idx].len();
    for i in 0..len {
        if i > 0 && groups[group_idx][i] == groups[group_idx][i - 1] {
            continue;
        }
        let row = groups[group_idx].remove(i);
        prefix.push(row.clone());
        minimise_over_group_orders(groups, group_idx, prefix, best);
        prefix.pop();
        groups[group_idx].insert(i, row);
    }
}
