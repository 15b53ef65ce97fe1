//! Exact Euler-Mahonian combinatorics on multiset, η-admissible, signed and
//! even-signed permutations, and the numerators of genus zeta functions of
//! local hereditary orders.
//!
//! * [`word`] and [`perm`]: multiset permutations, `des`, `maj`, `exc`,
//!   Han's `denh`, standardisation.
//! * [`admissible`]: the block-map grid, η-admissible permutations and
//!   Denert's `den` / `iexc` together with the auxiliary cell sets.
//! * [`signed`]: type B and D statistics.
//! * [`poly`], [`dist`], [`zeta`], [`unitary`]: exact polynomials, joint
//!   distributions, `W_η`, the Hadamard and reciprocity checks and the
//!   unitary-factor scan.
//! * [`verify`]: exhaustive checks with counterexample reporting.

pub mod admissible;
pub mod composition;
pub mod dist;
pub mod error;
pub mod perm;
pub mod poly;
pub mod signed;
pub mod stats;
pub mod unitary;
pub mod verify;
pub mod word;
pub mod zeta;

pub use admissible::{BlockContext, GridCellSet};
pub use composition::Composition;
pub use dist::{joint_distribution, Domain, StatPair, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use poly::{BiPoly, UniPoly};
pub use signed::SignedPermutation;
pub use word::Word;
