//! Test-only support for the `cicy` crate: independent reference
//! implementations ("oracles") of the headline computations, and seeded
//! random generators of configuration matrices.
//!
//! The oracles deliberately share no code with the main crate beyond the
//! [`cicy::ConfigurationMatrix`] accessors: the Euler characteristic is
//! recomputed by dense untruncated expansion, swap invariance by explicit
//! search over all column permutations, and the freeness parity rule from
//! its `r * Q` formulation. Tests compare the fast implementations against
//! these on random inputs.

pub mod generators;
pub mod oracles;

pub use generators::{random_valid_cicy, random_well_formed, shuffled};
pub use oracles::{
    b_admissible_reference, enumerate_c_by_brute_force, euler_by_dense_expansion,
    swap_invariant_by_column_search,
};
