//! # qudit-bloch
//!
//! Bloch-vector geometry for N-level quantum systems.
//!
//! - [`generators`]: generalized Gell-Mann bases of SU(N), structure
//!   constants f and g, and orthogonal changes of basis.
//! - [`statemap`]: the affine bijection between Bloch vectors and unit-trace
//!   Hermitian matrices, purity, overlaps and expectation values.
//! - [`membership`]: decides whether a Bloch vector is a physical state from
//!   the characteristic-polynomial coefficients of its matrix, with closed
//!   forms in terms of the structure constants and an eigenvalue oracle.
//! - [`sections3`]: qutrit two-dimensional sections and their closed-form
//!   boundaries.
//! - [`separability`]: the partial-transpose test on bipartite states.
//! - [`sampling`]: seeded pure, Hilbert–Schmidt mixed and ball-uniform samples.
//! - [`cli`]: the `bloch` command-line front end.
//!
//! ```
//! use qudit_bloch::generators::build_generator_basis;
//! use qudit_bloch::membership::{is_bloch_vector, Decision, DEFAULT_TOL};
//! use qudit_bloch::statemap::BlochVector;
//!
//! let basis = build_generator_basis(3).unwrap();
//! let v = BlochVector::along(3, 7, 1.0).unwrap(); // λ8 = 1 is inside the ball...
//! let verdict = is_bloch_vector(&v, &basis, DEFAULT_TOL).unwrap();
//! assert_eq!(verdict.decision, Decision::Outside); // ...but not a state
//! assert_eq!(verdict.failing_index, Some(3));
//! ```

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod membership;
pub mod sampling;
pub mod sections3;
pub mod separability;
pub mod statemap;

pub use error::{Error, Result};
pub use generators::{
    build_generator_basis, compute_structure_constants, rotate_basis, GeneratorBasis, OrthogonalMatrix,
    StructureConstants,
};
pub use membership::{eigenvalue_oracle, is_bloch_vector, Decision, MembershipVerdict, DEFAULT_TOL};
pub use statemap::{bloch_to_matrix, matrix_to_bloch, BlochVector, DensityCandidate, Observable};
