//! Exact analysis of complete-intersection Calabi-Yau configuration
//! matrices and of the quotient seven-manifolds they produce.
//!
//! The entry point is a configuration matrix `[n || q]`: a product of
//! complex projective spaces with dimension vector `n`, carrying one
//! polynomial per column of `q` whose entry in row `r` is its degree in
//! the coordinates of factor `r`. The crate checks the two Calabi-Yau
//! conditions, computes the Euler characteristic by exact truncated
//! polynomial expansion of the third Chern class, recovers Hodge numbers,
//! enumerates the antiholomorphic involutions acting freely on the
//! intersection, derives the Betti numbers `(b2, b3)` of the associated
//! quotients of the product with a circle, and can split projective-line
//! factors to move between equivalent presentations.
//!
//! ```
//! use cicy::catalog;
//! use cicy::topology::{euler_characteristic, hodge_from_euler};
//!
//! let quintic = catalog::quintic();
//! assert!(quintic.validate().is_ok());
//! let chi = euler_characteristic(&quintic).unwrap();
//! assert_eq!(chi, (-200).into());
//! let hodge = hodge_from_euler(&chi, 1).unwrap();
//! assert_eq!((hodge.h11, hodge.h21), (1, 101));
//! ```

pub mod analysis;
pub mod catalog;
pub mod config;
pub mod dataset;
pub mod expansion;
pub mod involutions;
pub mod poly;
pub mod topology;

pub use analysis::{analyze, run_batch, AnalysisOptions, AnalysisResult, Report};
pub use config::{ConfigError, ConfigurationMatrix, ValidationReport};
pub use dataset::{parse_dataset, write_dataset, ConfigRecord, ParseError};
pub use expansion::{expand_row, expansions_to_count, ExpansionError, ExpansionStep};
pub use involutions::{
    b_admissible, enumerate_b_combinations, enumerate_c_combinations, enumerate_free_assignments,
    BCombination, CCombination, InvolutionAssignment,
};
pub use poly::MultiPoly;
pub use topology::{
    barely_betti, chern_cubic, euler_characteristic, hodge_from_euler, product_betti, BettiNumbers,
    ChernCubic, HodgePair, TopologyError,
};
