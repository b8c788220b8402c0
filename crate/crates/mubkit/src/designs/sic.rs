//! SIC-POVM verification: d² vectors with constant angle 1/(d+1).

use crate::tol::DESIGN_TOL;
use crate::vectors::VectorSet;

use super::welch::{welch_profile, WelchProfile};

/// Result of a SIC-POVM check.
#[derive(Debug, Clone)]
pub struct SicReport {
    pub is_sic: bool,
    pub dim: usize,
    pub size: usize,
    /// d², the size a SIC must have.
    pub expected_size: usize,
    /// 1/(d+1), the angle a SIC must realize.
    pub target_angle: f64,
    /// max over distinct pairs of ||⟨x,y⟩|² − 1/(d+1)|.
    pub worst_angle_residual: f64,
    /// Welch residuals up to k = 2; a true SIC reports order ≥ 2.
    pub design: WelchProfile,
}

/// Checks |X| = d² and the constant-angle condition within `tol`, and
/// attaches the k ≤ 2 Welch profile.
pub fn sic_check(x: &VectorSet, tol: f64) -> SicReport {
    let d = x.dim();
    let m = x.len();
    let target = 1.0 / (d as f64 + 1.0);
    let mut worst: f64 = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            worst = worst.max((x.get(i).overlap2(x.get(j)) - target).abs());
        }
    }
    let design = welch_profile(x, 2, DESIGN_TOL);
    SicReport {
        is_sic: m == d * d && worst <= tol,
        dim: d,
        size: m,
        expected_size: d * d,
        target_angle: target,
        worst_angle_residual: worst,
        design,
    }
}
