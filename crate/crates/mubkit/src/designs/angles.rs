//! Angle sets, subdegrees, and orthogonal-pair intersection counts.
//!
//! The angle set of X is the set of distinct squared overlaps |⟨x,y⟩|² over
//! ordered pairs x ≠ y. Numerically, raw overlaps are clustered by single
//! linkage with a tolerance, and each cluster is represented by its mean.

use crate::error::{Error, Result};
use crate::tol::{ANGLE_CLUSTER_TOL, ORTHOGONALITY_TOL};
use crate::vectors::VectorSet;

/// Clustered angle set: sorted distinct overlap values with multiplicities
/// over ordered pairs.
#[derive(Debug, Clone)]
pub struct AngleSet {
    values: Vec<f64>,
    multiplicities: Vec<usize>,
    cluster_tol: f64,
    ambiguous: bool,
}

impl AngleSet {
    /// Cluster representatives (means), ascending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Ordered-pair count per cluster; sums to |X|·(|X|−1).
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    /// True when two cluster representatives sit closer than 10× the
    /// clustering tolerance — the clustering is then suspect (warning, not
    /// failure).
    pub fn is_ambiguous(&self) -> bool {
        self.ambiguous
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index of the cluster whose representative is nearest to `overlap`.
    pub fn nearest(&self, overlap: f64) -> usize {
        let mut best = 0;
        let mut best_gap = f64::INFINITY;
        for (i, &v) in self.values.iter().enumerate() {
            let gap = (overlap - v).abs();
            if gap < best_gap {
                best_gap = gap;
                best = i;
            }
        }
        best
    }

    /// True if some representative lies within `tol` of `value`.
    pub fn contains(&self, value: f64, tol: f64) -> bool {
        self.values.iter().any(|&v| (v - value).abs() <= tol)
    }
}

/// Clusters the squared overlaps of all distinct pairs by single linkage:
/// sorted values chain into one cluster while consecutive gaps stay within
/// `cluster_tol`.
pub fn angle_set(x: &VectorSet, cluster_tol: f64) -> Result<AngleSet> {
    if x.len() < 2 {
        return Err(Error::AngleSet(
            "angle set requires at least two vectors".into(),
        ));
    }
    let m = x.len();
    let mut overlaps = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            overlaps.push(x.get(i).overlap2(x.get(j)));
        }
    }
    overlaps.sort_by(|a, b| a.partial_cmp(b).expect("overlaps are finite"));

    let mut values = Vec::new();
    let mut multiplicities = Vec::new();
    let mut start = 0;
    for idx in 1..=overlaps.len() {
        let boundary = idx == overlaps.len() || overlaps[idx] - overlaps[idx - 1] > cluster_tol;
        if boundary {
            let cluster = &overlaps[start..idx];
            let mean = cluster.iter().sum::<f64>() / cluster.len() as f64;
            values.push(mean);
            // each unordered pair stands for two ordered pairs
            multiplicities.push(2 * cluster.len());
            start = idx;
        }
    }
    let ambiguous = values.windows(2).any(|w| w[1] - w[0] < 10.0 * cluster_tol);
    Ok(AngleSet { values, multiplicities, cluster_tol, ambiguous })
}

/// [`angle_set`] at the default clustering tolerance.
pub fn angle_set_default(x: &VectorSet) -> Result<AngleSet> {
    angle_set(x, ANGLE_CLUSTER_TOL)
}

/// Per-element angle counts d_α(x) and the regular-scheme flag.
#[derive(Debug, Clone)]
pub struct SubdegreeTable {
    /// counts[i][a] = number of y ≠ x_i whose overlap falls in cluster a.
    pub counts: Vec<Vec<usize>>,
    /// True iff every row of `counts` is identical.
    pub regular: bool,
}

/// Counts, for each element x and each angle α, the partners y ≠ x whose
/// squared overlap clusters to α. The scheme is regular when the counts do
/// not depend on x.
pub fn subdegrees(x: &VectorSet, angles: &AngleSet) -> SubdegreeTable {
    let m = x.len();
    let mut counts = vec![vec![0usize; angles.len()]; m];
    for (i, row) in counts.iter_mut().enumerate() {
        for j in 0..m {
            if i == j {
                continue;
            }
            let a = angles.nearest(x.get(i).overlap2(x.get(j)));
            row[a] += 1;
        }
    }
    let regular = counts.windows(2).all(|w| w[0] == w[1]);
    SubdegreeTable { counts, regular }
}

/// |I(x_i, x_j)|: the number of z ∈ X orthogonal to both members of an
/// orthogonal pair. Errors if the pair itself is not orthogonal within
/// `tol` (on the squared overlap).
pub fn intersection_count(x: &VectorSet, i: usize, j: usize, tol: f64) -> Result<usize> {
    let pair_overlap = x.get(i).overlap2(x.get(j));
    if pair_overlap > tol {
        return Err(Error::NotOrthogonalPair { i, j, overlap2: pair_overlap });
    }
    let mut count = 0;
    for z in x.iter() {
        if x.get(i).overlap2(z) <= tol && x.get(j).overlap2(z) <= tol {
            count += 1;
        }
    }
    Ok(count)
}

/// [`intersection_count`] at the default orthogonality tolerance.
pub fn intersection_count_default(x: &VectorSet, i: usize, j: usize) -> Result<usize> {
    intersection_count(x, i, j, ORTHOGONALITY_TOL)
}
