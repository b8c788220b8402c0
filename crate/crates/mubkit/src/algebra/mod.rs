//! Exact finite algebra underpinning the constructions: GF(p^n), GR(4,n),
//! Latin squares, and complex Hadamard matrices.

pub mod field;
pub mod hadamard;
pub mod latin;
pub mod ring;

pub use field::{FieldCtx, FieldElement};
pub use hadamard::{fourier_hadamard, validate_hadamard, validate_hadamard_default};
pub use latin::{mols, LatinSquare};
pub use ring::{RingCtx, RingElement};

pub(crate) use field::{is_prime, prime_power_split};
