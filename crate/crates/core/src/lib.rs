//! Bigrassmannian permutations below a permutation in Bruhat order.
//!
//! The count `beta(x)` of bigrassmannian permutations weakly below `x` has
//! several closed forms; this crate computes all of them, lists the set
//! itself through monotone triangles, and checks everything against a
//! brute-force Bruhat order built from reduction chains.
//!
//! ```
//! use bruhat_beta::{beta_report, below_set, Permutation};
//!
//! let x: Permutation = "42513".parse().unwrap();
//! assert_eq!(beta_report(&x).value(), Some(13));
//! assert_eq!(below_set(&x).len(), 13);
//! ```

pub mod bigrassmannian;
pub mod cli;
pub mod dot;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod sweep;
pub mod triangle;

pub use bigrassmannian::{
    below_set, beta_inversions, beta_positional, beta_report, beta_sigma, beta_squares,
    beta_transposition_delta, BelowSet, BetaReport,
};
pub use error::{Error, Result};
pub use perm::{enumerate_symmetric_group, DescentSet, InversionSet, Permutation};
pub use triangle::{
    enumerate_triangles, make_join_irreducible, triangle_of_permutation, JoinIrreducibleIndex,
    MonotoneTriangle,
};
