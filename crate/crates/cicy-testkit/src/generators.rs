//! Seeded random configuration generators for differential tests.

use cicy::ConfigurationMatrix;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random configuration satisfying both Calabi-Yau conditions, sized for
/// the brute-force oracles: 2 to 5 factors of dimension 1 to 3 and at most
/// 6 polynomials. Dimension duplicates and identical rows are deliberately
/// common so that swap enumeration has something to find.
pub fn random_valid_cicy(rng: &mut impl Rng) -> ConfigurationMatrix {
    let m = rng.gen_range(2..=5);
    let dims: Vec<u32> = loop {
        let candidate: Vec<u32> = (0..m)
            .map(|r| {
                if r > 0 && rng.gen_bool(0.5) {
                    // reuse an earlier dimension to encourage swap pairs
                    0
                } else {
                    rng.gen_range(1..=3)
                }
            })
            .collect();
        let mut resolved = Vec::with_capacity(m);
        for (r, &d) in candidate.iter().enumerate() {
            if d == 0 {
                resolved.push(resolved[rng.gen_range(0..r)]);
            } else {
                resolved.push(d);
            }
        }
        let total: u32 = resolved.iter().sum();
        if (4..=9).contains(&total) {
            break resolved;
        }
    };
    let k = (dims.iter().sum::<u32>() - 3) as usize;

    let mut degrees = vec![vec![0u32; k]; m];
    for r in 0..m {
        for _ in 0..(dims[r] + 1) {
            degrees[r][rng.gen_range(0..k)] += 1;
        }
    }

    // Occasionally copy a row onto another of equal dimension: identical
    // rows make single-pair swaps admissible.
    if m >= 2 && rng.gen_bool(0.4) {
        let a = rng.gen_range(0..m);
        let partners: Vec<usize> = (0..m).filter(|&b| b != a && dims[b] == dims[a]).collect();
        if let Some(&b) = partners.choose(rng) {
            degrees[b] = degrees[a].clone();
        }
    }

    // Repair identically-zero columns by moving single units out of
    // columns that can spare them; row sums are untouched.
    while let Some(empty) = (0..k).find(|&a| (0..m).all(|r| degrees[r][a] == 0)) {
        let donors: Vec<(usize, usize)> = (0..m)
            .flat_map(|r| (0..k).map(move |b| (r, b)))
            .filter(|&(r, b)| degrees[r][b] >= 1 && (0..m).map(|x| degrees[x][b]).sum::<u32>() >= 2)
            .collect();
        let &(r, b) = donors
            .choose(rng)
            .expect("total degree exceeds the column count, so a donor exists");
        degrees[r][b] -= 1;
        degrees[r][empty] += 1;
    }

    let cfg = ConfigurationMatrix::new(dims, degrees).expect("structurally sound by construction");
    debug_assert!(cfg.validate().is_ok());
    cfg
}

/// A random structurally well-formed matrix (no Calabi-Yau constraints):
/// 1 to 6 factors, 1 to 6 polynomials, entries up to 3, no zero columns,
/// with repeated dimensions and repeated rows likely.
pub fn random_well_formed(rng: &mut impl Rng) -> ConfigurationMatrix {
    let m = rng.gen_range(1..=6);
    let k = rng.gen_range(1..=6);
    let mut dims: Vec<u32> = Vec::with_capacity(m);
    let mut degrees: Vec<Vec<u32>> = Vec::with_capacity(m);
    for r in 0..m {
        if r > 0 && rng.gen_bool(0.3) {
            let source = rng.gen_range(0..r);
            dims.push(dims[source]);
            degrees.push(degrees[source].clone());
            continue;
        }
        let dim = if r > 0 && rng.gen_bool(0.4) {
            dims[rng.gen_range(0..r)]
        } else {
            rng.gen_range(1..=4)
        };
        dims.push(dim);
        degrees.push((0..k).map(|_| rng.gen_range(0..=3)).collect());
    }
    let empty_columns: Vec<usize> = (0..k)
        .filter(|&a| (0..m).all(|r| degrees[r][a] == 0))
        .collect();
    for a in empty_columns {
        degrees[rng.gen_range(0..m)][a] = rng.gen_range(1..=3);
    }
    ConfigurationMatrix::new(dims, degrees).expect("structurally sound by construction")
}

/// The same configuration with rows and columns independently shuffled.
pub fn shuffled(rng: &mut impl Rng, cfg: &ConfigurationMatrix) -> ConfigurationMatrix {
    let mut rows: Vec<usize> = (0..cfg.factor_count()).collect();
    let mut cols: Vec<usize> = (0..cfg.polynomial_count()).collect();
    rows.shuffle(rng);
    cols.shuffle(rng);
    cfg.permuted(&rows, &cols)
}
