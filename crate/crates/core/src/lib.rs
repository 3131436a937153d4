//! Stabilizer algebra for entanglement-assisted quantum error-correcting
//! codes whose pre-shared ebits are themselves noisy.
//!
//! The crate works entirely in the binary symplectic image of the Pauli
//! group: additive codes over GF(4) and subspaces of F_2^{2n}, linked by the
//! weight-preserving bit-pair isometry. On top of the exact algebra it
//! provides:
//!
//! - duals, radicals and isotropic/hyperbolic decompositions
//!   ([`symplectic`], [`code`]);
//! - parameter derivation for stabilizer and EA codes, protector matching
//!   and guaranteed protector lengths ([`params`]);
//! - the stacked generator-matrix construction of combination codes with a
//!   seeded splitting search and a code catalog ([`construction`]);
//! - the depolarizing-channel performance model and comparison tables
//!   ([`perf`]).

pub mod bits;
pub mod code;
pub mod construction;
pub mod error;
pub mod field;
pub mod params;
pub mod perf;
pub mod symplectic;

pub use bits::{symplectic_inner, Gf2Matrix, SymplecticVector};
pub use code::{AdditiveCode, CodeSpec, LinearCode, WeightReport, DEFAULT_ENUM_CAP};
pub use construction::{
    corollary44_suite, search_theorem43, theorem43_build, CodeCatalog, Theorem43Build,
    Theorem43Fixture, Theorem43Input,
};
pub use error::{Error, Result};
pub use field::{hermitian_inner, trace_inner, Gf4, Gf4Vector};
pub use params::{
    combination_params, eaqecc_params, linear_combination_params, match_check, protector_bound,
    qecc_params, so_family, CombinationParams, EaqeccParams, QeccParams,
};
pub use symplectic::{SgsDecomposition, Subspace};
