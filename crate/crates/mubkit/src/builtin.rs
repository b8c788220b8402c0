//! Built-in reference data: hand-checked maximal MUB families in dimensions
//! 3 and 4, and fiducial vectors whose Weyl–Heisenberg orbits are SIC-POVMs
//! in dimensions 2 and 3.
//!
//! The families are stored as exponent tables over a fixed root of unity
//! (ω = e^{2πi/3} for d = 3, i for d = 4) and validated on construction,
//! so they double as an independent cross-check of the algebraic
//! constructions.

use std::f64::consts::FRAC_PI_4;

use nalgebra::DVector;

use crate::constructions::weyl_heisenberg_orbit;
use crate::designs::sic_check;
use crate::error::{Error, Result};
use crate::phase::root_of_unity;
use crate::tol::MUB_TOL;
use crate::vectors::{standard_basis, MubFamily, Provenance, UnitVector, VectorSet};
use crate::C64;

/// Exponents of ω = e^{2πi/3}, one inner array per vector, amplitudes ×3^{-1/2}.
const DIM3_EXPONENTS: [[[i64; 3]; 3]; 3] = [
    [[0, 0, 0], [0, 1, 2], [0, 2, 1]],
    [[0, 1, 1], [0, 2, 0], [0, 0, 2]],
    [[0, 2, 2], [0, 1, 0], [0, 0, 1]],
];

/// Exponents of i, one inner array per vector, amplitudes ×1/2.
const DIM4_EXPONENTS: [[[i64; 4]; 4]; 4] = [
    [[0, 0, 0, 0], [0, 0, 2, 2], [0, 2, 2, 0], [0, 2, 0, 2]],
    [[0, 2, 3, 3], [0, 2, 1, 1], [0, 0, 1, 3], [0, 0, 3, 1]],
    [[0, 3, 3, 2], [0, 3, 1, 0], [0, 1, 1, 2], [0, 1, 3, 0]],
    [[0, 3, 2, 3], [0, 3, 0, 1], [0, 1, 0, 3], [0, 1, 2, 1]],
];

fn basis_from_exponents<const D: usize>(rows: &[[i64; D]; D], order: u64) -> VectorSet {
    let scale = 1.0 / (D as f64).sqrt();
    let vectors = rows
        .iter()
        .map(|row| {
            let amps =
                DVector::from_iterator(D, row.iter().map(|&k| root_of_unity(k, order) * scale));
            UnitVector::new(amps).expect("reference rows are unit vectors")
        })
        .collect();
    VectorSet::new(vectors).expect("reference basis is well-formed")
}

/// The standard maximal family in C^3: the computational basis plus three
/// bases of third-root-of-unity vectors.
pub fn reference_mubs_dim3() -> MubFamily {
    let mut bases = vec![standard_basis(3)];
    bases.extend(DIM3_EXPONENTS.iter().map(|rows| basis_from_exponents(rows, 3)));
    MubFamily::new(
        bases,
        Provenance { construction: "reference".into(), parameters: "dim=3".into() },
    )
    .expect("dimension-3 reference family is mutually unbiased")
}

/// The standard maximal family in C^4: the computational basis plus four
/// bases with amplitudes in {±1/2, ±i/2}.
pub fn reference_mubs_dim4() -> MubFamily {
    let mut bases = vec![standard_basis(4)];
    bases.extend(DIM4_EXPONENTS.iter().map(|rows| basis_from_exponents(rows, 4)));
    MubFamily::new(
        bases,
        Provenance { construction: "reference".into(), parameters: "dim=4".into() },
    )
    .expect("dimension-4 reference family is mutually unbiased")
}

/// A fiducial vector whose Weyl–Heisenberg orbit is a SIC-POVM.
///
/// Built-ins exist for d = 2 (a vector on the Bloch sphere at the center
/// of a face of the inscribed tetrahedron) and d = 3 (the simplest member
/// of the known continuous family).
pub fn sic_fiducial(d: usize) -> Result<UnitVector> {
    match d {
        2 => {
            let a = ((3.0 + 3.0_f64.sqrt()) / 6.0).sqrt();
            let b = ((3.0 - 3.0_f64.sqrt()) / 6.0).sqrt();
            let amps = DVector::from_vec(vec![
                C64::new(a, 0.0),
                C64::from_polar(b, FRAC_PI_4),
            ]);
            UnitVector::new(amps)
        }
        3 => {
            let s = 0.5_f64.sqrt();
            let amps =
                DVector::from_vec(vec![C64::new(0.0, 0.0), C64::new(s, 0.0), C64::new(-s, 0.0)]);
            UnitVector::new(amps)
        }
        _ => Err(Error::NoFiducial(d)),
    }
}

/// The d²-element SIC-POVM generated by the built-in fiducial, verified
/// before being returned.
pub fn sic_povm(d: usize) -> Result<VectorSet> {
    let orbit = weyl_heisenberg_orbit(&sic_fiducial(d)?)?;
    let report = sic_check(&orbit, MUB_TOL);
    assert!(report.is_sic, "built-in fiducial must generate a SIC-POVM");
    Ok(orbit)
}
