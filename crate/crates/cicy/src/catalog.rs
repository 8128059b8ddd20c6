//! Small catalogue of standard configurations used throughout the tests
//! and documentation.

use crate::config::ConfigurationMatrix;

/// The quintic hypersurface in P^4.
pub fn quintic() -> ConfigurationMatrix {
    ConfigurationMatrix::new(vec![4], vec![vec![5]]).expect("valid by construction")
}

/// The bicubic hypersurface in P^2 x P^2.
pub fn bicubic() -> ConfigurationMatrix {
    ConfigurationMatrix::new(vec![2, 2], vec![vec![3], vec![3]]).expect("valid by construction")
}

/// The tetraquadric hypersurface in (P^1)^4.
pub fn tetraquadric() -> ConfigurationMatrix {
    ConfigurationMatrix::new(vec![1, 1, 1, 1], vec![vec![2], vec![2], vec![2], vec![2]])
        .expect("valid by construction")
}

/// A five-factor complete intersection of five polynomials in
/// P^1 x P^1 x P^1 x P^2 x P^3, with two identical middle rows and a mix
/// of odd- and even-dimensional factors. Exercises every involution type.
pub fn five_factor_example() -> ConfigurationMatrix {
    ConfigurationMatrix::new(
        vec![1, 1, 1, 2, 3],
        vec![
            vec![0, 0, 0, 0, 2],
            vec![0, 0, 1, 1, 0],
            vec![0, 0, 1, 1, 0],
            vec![1, 1, 1, 0, 0],
            vec![1, 1, 0, 1, 1],
        ],
    )
    .expect("valid by construction")
}

/// All catalogue entries with their conventional names.
pub fn named() -> Vec<(&'static str, ConfigurationMatrix)> {
    vec![
        ("quintic", quintic()),
        ("bicubic", bicubic()),
        ("tetraquadric", tetraquadric()),
        ("five-factor", five_factor_example()),
    ]
}

/// All catalogue entries.
pub fn all() -> Vec<ConfigurationMatrix> {
    named().into_iter().map(|(_, cfg)| cfg).collect()
}
