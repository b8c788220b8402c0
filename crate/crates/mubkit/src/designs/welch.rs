//! Welch bounds, Welch sums, and the two computable t-design criteria.
//!
//! The workhorse test is the averaged equality: X is a t-design iff
//! S_k := (1/|X|²) Σ_{x,y} |⟨x,y⟩|^{2k} equals 1/C(d+k−1,k) for all k ≤ t.
//! The per-point check evaluates the stronger pointwise identity at random
//! probes. Both sums include the diagonal x = y terms — the equalities are
//! stated for the full double sum.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::vectors::{random_unit, UnitVector, VectorSet};

/// Exact binomial coefficient; desk-scale arguments stay far inside u128.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // numerator factors arrive in an order that keeps every prefix an
        // exact binomial, so the division is always exact
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc
}

/// Denominator of the k-th Welch bound: C(d+k−1, k).
pub fn welch_bound_denominator(d: usize, k: usize) -> u128 {
    binomial((d + k - 1) as u64, k as u64)
}

/// The k-th Welch bound 1/C(d+k−1,k) as a double (the rational is exact;
/// desk-scale binomials are exactly representable).
pub fn welch_bound(d: usize, k: usize) -> f64 {
    if k == 0 {
        return 1.0;
    }
    1.0 / welch_bound_denominator(d, k) as f64
}

/// Compensated (Kahan) accumulator; the pair sums must stay trustworthy at
/// 1e−10 over ~10⁵ terms.
#[derive(Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, value: f64) {
        let y = value - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// S_k = (1/|X|²) Σ_{x,y∈X} |⟨x,y⟩|^{2k}, diagonal included, summed in
/// index order with compensation.
pub fn welch_sum(x: &VectorSet, k: usize) -> f64 {
    if k == 0 {
        return 1.0; // every term is |⟨x,y⟩|⁰ = 1
    }
    let m = x.len();
    let mut acc = Kahan::default();
    for i in 0..m {
        for j in 0..m {
            acc.add(x.get(i).overlap2(x.get(j)).powi(k as i32));
        }
    }
    acc.sum / (m as f64 * m as f64)
}

/// One row of the Welch residual table.
#[derive(Debug, Clone)]
pub struct WelchEntry {
    pub k: usize,
    pub sum: f64,
    pub bound: f64,
    /// sum − bound; ≥ −tol always (the Welch inequality), ≈ 0 at design order.
    pub residual: f64,
}

/// Residual table for k = 0..=k_max plus the implied design order.
#[derive(Debug, Clone)]
pub struct WelchProfile {
    pub entries: Vec<WelchEntry>,
    /// Largest t ≤ k_max with |residual| ≤ tol for every k ≤ t.
    pub order: usize,
    /// True if some residual dipped below −tol: a numerical anomaly, since
    /// the inequality itself can only fail through floating-point error.
    pub anomalous: bool,
    pub tol: f64,
}

/// Evaluates the Welch table for all k ≤ k_max (even past the first
/// failure, for diagnostics) and reports the design order.
pub fn welch_profile(x: &VectorSet, k_max: usize, tol: f64) -> WelchProfile {
    let d = x.dim();
    let mut entries = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let sum = welch_sum(x, k);
        let bound = welch_bound(d, k);
        entries.push(WelchEntry { k, sum, bound, residual: sum - bound });
    }
    let mut order = 0;
    for e in &entries {
        if e.residual.abs() <= tol {
            order = e.k;
        } else {
            break;
        }
    }
    let anomalous = entries.iter().any(|e| e.residual < -tol);
    WelchProfile { entries, order, anomalous, tol }
}

/// Pointwise t-design criterion: for every x ∈ C^d,
/// (1/|X|) Σ_y |⟨x,y⟩|^{2k} = ⟨x,x⟩^k / C(d+k−1,k).
///
/// Evaluates the identity at `probes` seeded Haar-random unit vectors plus
/// every element of X, returning the maximum absolute residual. Both sides
/// are homogeneous of degree 2k in x, so unit probes lose no generality.
pub fn per_point_welch_check(x: &VectorSet, k: usize, probes: usize, seed: u64) -> f64 {
    let d = x.dim();
    let rhs = welch_bound(d, k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let eval = |probe: &UnitVector| {
        let m = x.len();
        let mut acc = Kahan::default();
        for y in x.iter() {
            acc.add(probe.overlap2(y).powi(k as i32));
        }
        let lhs = acc.sum / m as f64;
        (lhs - rhs).abs()
    };
    for _ in 0..probes {
        let probe = random_unit(d, &mut rng);
        worst = worst.max(eval(&probe));
    }
    for v in x.iter() {
        worst = worst.max(eval(v));
    }
    worst
}
