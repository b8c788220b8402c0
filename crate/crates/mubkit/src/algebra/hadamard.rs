//! Complex Hadamard matrices: the Fourier default and the validity check.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::phase::root_of_unity;
use crate::tol::HADAMARD_TOL;

/// The Fourier matrix H[j,k] = exp(2πi·jk/d): the default complex Hadamard
/// of order d.
pub fn fourier_hadamard(d: usize) -> DMatrix<C64> {
    DMatrix::from_fn(d, d, |j, k| root_of_unity((j * k) as i64, d as u64))
}

/// Checks the complex Hadamard property: every entry of unit modulus and
/// H·H† = d·I, both within `tol` (entrywise).
pub fn validate_hadamard(h: &DMatrix<C64>, tol: f64) -> Result<()> {
    let d = h.nrows();
    if d == 0 || h.ncols() != d {
        return Err(Error::NotHadamard { residual: f64::INFINITY });
    }
    let mut residual: f64 = 0.0;
    for entry in h.iter() {
        residual = residual.max((entry.norm() - 1.0).abs());
    }
    let gram = h * h.adjoint();
    for i in 0..d {
        for j in 0..d {
            let expected = if i == j { C64::new(d as f64, 0.0) } else { C64::ZERO };
            residual = residual.max((gram[(i, j)] - expected).norm());
        }
    }
    if residual > tol {
        return Err(Error::NotHadamard { residual });
    }
    Ok(())
}

/// [`validate_hadamard`] at the default tolerance.
pub fn validate_hadamard_default(h: &DMatrix<C64>) -> Result<()> {
    validate_hadamard(h, HADAMARD_TOL)
}
