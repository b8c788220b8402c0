//! Recovering the basis structure of a qualifying 2-design.
//!
//! A 2-design in C^d with angle set {0, 1/d} and d(d+1) elements is a union
//! of d+1 mutually unbiased bases. The proof is constructive: the class of
//! x is B_x = {x} ∪ {z : ⟨x,z⟩ = 0}, and B_y = B_x for every y ∈ B_x. The
//! algorithm follows it greedily and verifies that claim at runtime instead
//! of assuming it, so marginal inputs fail loudly with a witness.

use crate::designs::{angle_set_default, welch_profile};
use crate::error::{Error, Result};
use crate::tol::{DESIGN_TOL, MUB_TOL, ORTHOGONALITY_TOL};
use crate::vectors::{MubFamily, Provenance, VectorSet};

/// Adjacency structure of the orthogonality relation |⟨x_i,x_j⟩|² ≤ tol.
#[derive(Debug, Clone)]
pub struct OrthogonalityGraph {
    /// Sorted neighbor lists, one per vertex; symmetric, no self-loops.
    pub neighbors: Vec<Vec<usize>>,
    /// Edge tolerance on the squared overlap.
    pub tol: f64,
}

impl OrthogonalityGraph {
    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Exact pair scan building the orthogonality graph.
pub fn orthogonality_graph(x: &VectorSet, tol: f64) -> OrthogonalityGraph {
    let m = x.len();
    let mut neighbors = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            if x.get(i).overlap2(x.get(j)) <= tol {
                neighbors[i].push(j);
                neighbors[j].push(i);
            }
        }
    }
    OrthogonalityGraph { neighbors, tol }
}

/// [`orthogonality_graph`] at the default edge tolerance.
pub fn orthogonality_graph_default(x: &VectorSet) -> OrthogonalityGraph {
    orthogonality_graph(x, ORTHOGONALITY_TOL)
}

/// Splits a qualifying 2-design into its d+1 mutually unbiased bases.
///
/// Preconditions checked in order: |X| = d(d+1); angle set = {0, 1/d};
/// Welch equality at k ≤ 2 (a genuine 2-design). Then the greedy closure
/// runs: groups are formed in first-unassigned order, each group being
/// B_x = {x} ∪ {z : z ⊥ x}, with vectors kept in input order. For every
/// member y of a formed group, B_y is recomputed and compared — the
/// theorem says B_y = B_x, and violations are reported, not repaired.
pub fn partition_into_mubs(x: &VectorSet, tol: f64) -> Result<MubFamily> {
    let d = x.dim();
    let expected = d * (d + 1);
    if x.len() != expected {
        return Err(Error::PartitionSize { dim: d, expected, got: x.len() });
    }

    let angles = angle_set_default(x)?;
    let inv_d = 1.0 / d as f64;
    for &value in angles.values() {
        let matches_zero = value.abs() <= tol.max(angles.cluster_tol());
        let matches_inv_d = (value - inv_d).abs() <= tol.max(angles.cluster_tol());
        if !matches_zero && !matches_inv_d {
            return Err(Error::AngleSet(format!(
                "angle {value:.6e} is neither 0 nor 1/d = {inv_d:.6e}"
            )));
        }
    }
    // d ≥ 2 unions always realize both angles; a missing one means the
    // set cannot be a maximal MUB union of this size
    if d >= 2 && angles.values().len() != 2 {
        return Err(Error::AngleSet(format!(
            "expected angle set {{0, 1/d}}, found {} distinct angle(s)",
            angles.values().len()
        )));
    }

    let profile = welch_profile(x, 2, DESIGN_TOL);
    if profile.order < 2 {
        let failing = profile
            .entries
            .iter()
            .find(|e| e.residual.abs() > DESIGN_TOL)
            .expect("order < 2 implies a failing entry");
        return Err(Error::NotTwoDesign { k: failing.k, residual: failing.residual });
    }

    let graph = orthogonality_graph(x, tol);
    let m = x.len();
    let closure = |seed: usize| -> Vec<usize> {
        let mut group = graph.neighbors[seed].clone();
        group.push(seed);
        group.sort_unstable();
        group
    };

    let mut assigned = vec![false; m];
    let mut groups: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    for seed in 0..m {
        if assigned[seed] {
            continue;
        }
        let group = closure(seed);
        if group.len() != d {
            return Err(Error::PartitionStructure(format!(
                "B_{seed} has {} members, expected d = {d}",
                group.len()
            )));
        }
        for &member in &group {
            if assigned[member] {
                return Err(Error::PartitionStructure(format!(
                    "vector {member} of B_{seed} already belongs to another group"
                )));
            }
        }
        // the proof's claim B_y = B_x, verified rather than assumed
        for &member in &group {
            let other = closure(member);
            if other != group {
                return Err(Error::PartitionStructure(format!(
                    "B_{member} differs from B_{seed}: the orthogonality classes \
                     are not consistent"
                )));
            }
        }
        // cliques: every pair inside the group must itself be orthogonal
        for (i, &a) in group.iter().enumerate() {
            for &b in &group[i + 1..] {
                let overlap = x.get(a).overlap2(x.get(b));
                if overlap > tol {
                    return Err(Error::PartitionStructure(format!(
                        "vectors {a} and {b} share a group but are not \
                         orthogonal (|<x,z>|^2 = {overlap:.3e})"
                    )));
                }
            }
        }
        for &member in &group {
            assigned[member] = true;
        }
        groups.push(group);
    }

    let bases: Result<Vec<VectorSet>> = groups
        .iter()
        .map(|group| VectorSet::new(group.iter().map(|&i| x.get(i).clone()).collect()))
        .collect();
    // final validation: the groups must pass the full MUB Gram test
    MubFamily::with_tol(
        bases?,
        Provenance {
            construction: "partition".into(),
            parameters: format!("dim={d}, groups={}", groups.len()),
        },
        MUB_TOL,
    )
    .map_err(|e| match e {
        Error::NotUnbiased { worst, witness } => Error::PartitionStructure(format!(
            "recovered groups fail mutual unbiasedness (worst {worst:.3e}, {witness})"
        )),
        other => other,
    })
}

/// [`partition_into_mubs`] at the default orthogonality tolerance.
pub fn partition_into_mubs_default(x: &VectorSet) -> Result<MubFamily> {
    partition_into_mubs(x, ORTHOGONALITY_TOL)
}
