//! Mutually unbiased bases, projective t-designs, and the machinery
//! connecting them.
//!
//! Two orthonormal bases B, C of C^d are *mutually unbiased* when every
//! cross overlap satisfies |⟨b,c⟩|² = 1/d. At most d+1 bases of C^d can be
//! pairwise unbiased, and that maximum is attained whenever d is a prime
//! power. This crate:
//!
//! - **constructs** maximal families in prime-power dimensions four ways
//!   ([`constructions`]): Gauss sums over finite fields (odd prime
//!   powers), trace characters of Galois rings GR(4,n) (powers of two),
//!   simultaneous diagonalization of generalized Pauli classes (primes),
//!   and mutually orthogonal Latin squares paired with a complex Hadamard
//!   matrix (square dimensions, a non-maximal generalization);
//! - **certifies** finite unit-vector sets as complex projective t-designs
//!   through the Welch-bound equalities ([`designs`]), including angle
//!   sets, subdegrees, frame bounds, per-point checks at random probes,
//!   and SIC-POVM verification;
//! - **partitions** any 2-design with angle set {0, 1/d} and d(d+1)
//!   elements back into its d+1 unbiased bases ([`partition`]) — the two
//!   viewpoints are equivalent, and both directions are executable here;
//! - **bounds** the number of MUBs in non-prime-power dimensions
//!   ([`designs::bounds`]) and ships bit-exact JSON serialization
//!   ([`io`]) plus hand-checked reference data ([`builtin`]).
//!
//! Everything is dense, double-precision, and aimed at desk-scale
//! dimensions (d ≤ a few hundred); tolerances live in [`tol`].
//!
//! ```
//! use mubkit::constructions::maximal_mubs;
//! use mubkit::designs::{certify, CertifyOptions};
//! use mubkit::partition::partition_into_mubs_default;
//!
//! let family = maximal_mubs(3)?; // 4 bases of C^3
//! let union = family.union(); // 12 vectors, a projective 2-design
//!
//! let report = certify(&union, &CertifyOptions::default())?;
//! assert_eq!(report.design_order(), 2);
//!
//! let recovered = partition_into_mubs_default(&union)?;
//! assert_eq!(recovered.bases().len(), 4);
//! # Ok::<(), mubkit::Error>(())
//! ```

pub mod algebra;
pub mod builtin;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod io;
pub mod partition;
pub mod phase;
pub mod tol;
pub mod vectors;

pub use error::{Error, Result};
pub use vectors::{MubFamily, Provenance, UnitVector, VectorSet};

/// The scalar type used throughout: double-precision complex numbers.
pub type C64 = num_complex::Complex64;
