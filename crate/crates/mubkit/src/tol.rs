//! Default tolerances, one order of magnitude apart to avoid boundary flapping.
//!
//! Construction self-checks are the tightest (the phases involved are exact
//! roots of unity, so only rounding noise accumulates); angle clustering is
//! the loosest (it separates values that differ by at least 1/d for desk-scale
//! d, so the threshold has many orders of magnitude of slack on both sides).
//! Every check that uses one of these accepts an override.

/// Self-checks on freshly constructed vectors (amplitude moduli, exact phases).
pub const CONSTRUCTION_TOL: f64 = 1e-12;

/// Gram-matrix orthonormality and mutual-unbiasedness residuals.
pub const MUB_TOL: f64 = 1e-10;

/// Welch-sum residuals for design-order certification.
pub const DESIGN_TOL: f64 = 1e-9;

/// Edge threshold on squared overlaps for the orthogonality graph.
pub const ORTHOGONALITY_TOL: f64 = 1e-8;

/// Single-linkage gap for clustering squared overlaps into an angle set.
pub const ANGLE_CLUSTER_TOL: f64 = 1e-7;

/// Unit-norm invariant on stored vectors.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Complex Hadamard matrix validation (unit-modulus entries, H H* = d I).
pub const HADAMARD_TOL: f64 = 1e-10;

/// Relative tightness threshold for frame bounds: tight iff B - A <= tol * |F|/d.
pub const FRAME_TIGHT_TOL: f64 = 1e-9;

/// Default cap on field and ring sizes so exhaustive verification stays cheap.
pub const DESK_SCALE_LIMIT: u64 = 4096;
