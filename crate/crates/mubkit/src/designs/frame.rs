//! Frame bounds via the spectrum of the frame operator.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::vectors::VectorSet;

/// Optimal frame bounds A ≤ B and the tight-frame verdict.
#[derive(Debug, Clone, Copy)]
pub struct FrameBounds {
    /// Smallest eigenvalue of the frame operator (A = 0 signals a
    /// non-spanning set).
    pub lower: f64,
    /// Largest eigenvalue.
    pub upper: f64,
    /// B − A ≤ 1e−9 · |F|/d; a uniform tight frame has A = B = |F|/d.
    pub tight: bool,
}

/// Computes the extreme eigenvalues of the frame operator S = Σ_f |f⟩⟨f|.
pub fn frame_bounds(f: &VectorSet) -> FrameBounds {
    let d = f.dim();
    let mut op = DMatrix::<C64>::zeros(d, d);
    for v in f.iter() {
        let a = v.amps();
        // rank-one update |v⟩⟨v|
        for r in 0..d {
            for c in 0..d {
                op[(r, c)] += a[r] * a[c].conj();
            }
        }
    }
    let eigenvalues = SymmetricEigen::new(op).eigenvalues;
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    for &ev in eigenvalues.iter() {
        lower = lower.min(ev);
        upper = upper.max(ev);
    }
    let scale = f.len() as f64 / d as f64;
    FrameBounds { lower, upper, tight: upper - lower <= 1e-9 * scale }
}
