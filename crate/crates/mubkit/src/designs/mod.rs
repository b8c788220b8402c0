//! Certification of vector sets: t-designs via Welch equalities, angle
//! sets and subdegrees, frame bounds, SIC-POVM and MUB checks, and bounds
//! on maximal MUB counts.

pub mod angles;
pub mod bounds;
pub mod frame;
pub mod sic;
pub mod welch;

pub use angles::{
    angle_set, angle_set_default, intersection_count, intersection_count_default, subdegrees,
    AngleSet, SubdegreeTable,
};
pub use bounds::{mub_count_bounds, BoundsReport};
pub use frame::{frame_bounds, FrameBounds};
pub use sic::{sic_check, SicReport};
pub use welch::{
    binomial, per_point_welch_check, welch_bound, welch_bound_denominator, welch_profile,
    welch_sum, WelchEntry, WelchProfile,
};

use crate::error::{Error, Result};
use crate::tol::{ANGLE_CLUSTER_TOL, DESIGN_TOL, MUB_TOL, ORTHOGONALITY_TOL};
use crate::vectors::VectorSet;

/// Verdict of the full MUB Gram test over a list of candidate bases.
#[derive(Debug, Clone)]
pub struct MubCheckReport {
    pub ok: bool,
    /// Worst deviation seen: Gram-entry error within bases, squared-overlap
    /// error across bases.
    pub worst_residual: f64,
    /// Where the worst deviation occurred.
    pub witness: Option<String>,
}

/// Checks that every basis is orthonormal and every cross-basis pair is
/// unbiased (|⟨b|c⟩|² = 1/d) within `tol`. Shape violations (mixed
/// dimensions, bases not of size d) are errors, not failed checks.
pub fn mub_check(bases: &[VectorSet], tol: f64) -> Result<MubCheckReport> {
    let d = bases.first().ok_or(Error::EmptySet)?.dim();
    for basis in bases {
        if basis.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, got: basis.dim() });
        }
        if basis.len() != d {
            return Err(Error::BasisSize { expected: d, got: basis.len() });
        }
    }
    let mut worst: f64 = 0.0;
    let mut witness = None;
    for (bi, basis) in bases.iter().enumerate() {
        for i in 0..d {
            for j in i..d {
                let gram = basis.get(i).inner(basis.get(j));
                let target = if i == j { 1.0 } else { 0.0 };
                let residual = (gram - target).norm();
                if residual > worst {
                    worst = residual;
                    witness = Some(format!(
                        "basis {bi}: Gram({i},{j}) deviates by {residual:.3e}"
                    ));
                }
            }
        }
    }
    let unbiased = 1.0 / d as f64;
    for bi in 0..bases.len() {
        for bj in bi + 1..bases.len() {
            for i in 0..d {
                for j in 0..d {
                    let overlap = bases[bi].get(i).overlap2(bases[bj].get(j));
                    let residual = (overlap - unbiased).abs();
                    if residual > worst {
                        worst = residual;
                        witness = Some(format!(
                            "bases {bi}/{bj}, vectors {i}/{j}: |<b|c>|^2 = {overlap:.6e}, \
                             want {unbiased:.6e}"
                        ));
                    }
                }
            }
        }
    }
    Ok(MubCheckReport { ok: worst <= tol, worst_residual: worst, witness })
}

/// Knobs for [`certify`]; defaults follow the tolerance ladder.
#[derive(Debug, Clone)]
pub struct CertifyOptions {
    /// Largest Welch order evaluated (default 3).
    pub k_max: usize,
    /// Residual tolerance for the design order (default 1e−9).
    pub design_tol: f64,
    /// Angle clustering tolerance (default 1e−7).
    pub cluster_tol: f64,
    /// Tolerance on exact overlap targets — SIC angle (default 1e−10).
    pub overlap_tol: f64,
    /// Edge tolerance for orthogonality/partition checks (default 1e−8).
    pub orth_tol: f64,
    /// Per-point probe count; 0 skips the pointwise check (default 100).
    pub probes: usize,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            k_max: 3,
            design_tol: DESIGN_TOL,
            cluster_tol: ANGLE_CLUSTER_TOL,
            overlap_tol: MUB_TOL,
            orth_tol: ORTHOGONALITY_TOL,
            probes: 100,
            seed: 0,
        }
    }
}

/// Max pointwise Welch residual at one k.
#[derive(Debug, Clone, Copy)]
pub struct PerPointEntry {
    pub k: usize,
    pub max_residual: f64,
}

/// Everything the certifier can say about a vector set.
#[derive(Debug, Clone)]
pub struct DesignReport {
    pub dim: usize,
    pub size: usize,
    pub angles: AngleSet,
    pub welch: WelchProfile,
    /// Pointwise residuals for k = 1..=min(2, k_max); empty if probes = 0.
    pub per_point: Vec<PerPointEntry>,
    pub subdegrees: SubdegreeTable,
    pub frame: FrameBounds,
    pub sic: SicReport,
    /// True iff the set partitions into d+1 mutually unbiased bases.
    pub mub_union: bool,
}

impl DesignReport {
    /// Design order shortcut: largest verified t.
    pub fn design_order(&self) -> usize {
        self.welch.order
    }
}

/// Runs the full certification battery on one set.
pub fn certify(x: &VectorSet, opts: &CertifyOptions) -> Result<DesignReport> {
    let angles = angle_set(x, opts.cluster_tol)?;
    let welch = welch_profile(x, opts.k_max, opts.design_tol);
    let per_point = if opts.probes > 0 {
        (1..=opts.k_max.min(2))
            .map(|k| PerPointEntry {
                k,
                max_residual: per_point_welch_check(x, k, opts.probes, opts.seed),
            })
            .collect()
    } else {
        Vec::new()
    };
    let table = subdegrees(x, &angles);
    let frame = frame_bounds(x);
    let sic = sic_check(x, opts.overlap_tol);
    let mub_union = crate::partition::partition_into_mubs(x, opts.orth_tol).is_ok();
    Ok(DesignReport {
        dim: x.dim(),
        size: x.len(),
        angles,
        welch,
        per_point,
        subdegrees: table,
        frame,
        sic,
        mub_union,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectors::standard_basis;

    #[test]
    fn mub_check_rejects_duplicate_bases_with_witness() {
        let basis = standard_basis(3);
        let report = mub_check(&[basis.clone(), basis], MUB_TOL).unwrap();
        assert!(!report.ok);
        // cross overlap of identical vectors is 1, not 1/3
        assert!((report.worst_residual - (1.0 - 1.0 / 3.0)).abs() < 1e-12);
        assert!(report.witness.unwrap().contains("bases 0/1"));
    }

    #[test]
    fn mub_check_accepts_a_single_orthonormal_basis() {
        let report = mub_check(&[standard_basis(4)], MUB_TOL).unwrap();
        assert!(report.ok);
        assert!(report.worst_residual < 1e-15);
    }

    #[test]
    fn mub_check_enforces_shapes() {
        let b3 = standard_basis(3);
        let b2 = standard_basis(2);
        assert!(matches!(
            mub_check(&[b3.clone(), b2], MUB_TOL),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(mub_check(&[], MUB_TOL), Err(Error::EmptySet)));
        let undersized = VectorSet::new(b3.vectors()[..2].to_vec()).unwrap();
        assert!(matches!(
            mub_check(&[undersized], MUB_TOL),
            Err(Error::BasisSize { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn certify_reports_a_plain_basis_as_a_1_design() {
        let report = certify(&standard_basis(3), &CertifyOptions::default()).unwrap();
        assert_eq!(report.design_order(), 1);
        assert!(report.frame.tight);
        assert!(!report.sic.is_sic);
        assert!(!report.mub_union); // 3 vectors ≠ d(d+1) = 12
        assert_eq!(report.angles.values().len(), 1);
    }
}
