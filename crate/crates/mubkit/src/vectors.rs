//! Unit vectors, labeled vector sets, and validated MUB families.
//!
//! `VectorSet` is the common currency between construction, certification,
//! partitioning, and serialization. A `MubFamily` is a grouped set whose
//! invariants (orthonormal bases, pairwise unbiasedness) were checked at
//! construction time — holding one is evidence the Gram test passed.

use nalgebra::DVector;
use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::designs::mub_check;
use crate::error::{Error, Result};
use crate::tol::{MUB_TOL, UNIT_NORM_TOL};

/// A vector in C^d of unit Euclidean norm (within 1e−12).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector {
    amps: DVector<C64>,
}

impl UnitVector {
    /// Wraps amplitudes that are already normalized; rejects anything whose
    /// norm strays beyond the construction tolerance.
    pub fn new(amps: DVector<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::ZeroVector);
        }
        let norm = amps.norm();
        if (norm - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::NotUnit { norm });
        }
        Ok(UnitVector { amps })
    }

    /// Normalizes arbitrary amplitudes; rejects the zero vector.
    pub fn normalized(amps: DVector<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::ZeroVector);
        }
        let norm = amps.norm();
        if norm < 1e-300 {
            return Err(Error::ZeroVector);
        }
        Ok(UnitVector { amps: amps / C64::new(norm, 0.0) })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &DVector<C64> {
        &self.amps
    }

    /// ⟨self|other⟩, conjugate-linear in self.
    pub fn inner(&self, other: &UnitVector) -> C64 {
        self.amps.dotc(&other.amps)
    }

    /// Squared overlap |⟨self|other⟩|².
    pub fn overlap2(&self, other: &UnitVector) -> f64 {
        self.inner(other).norm_sqr()
    }
}

/// Construction provenance carried by families and written to files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub construction: String,
    pub parameters: String,
}

/// An ordered set of unit vectors of a common dimension, optionally labeled
/// per vector (labels tag basis membership, "B0".."Bd").
#[derive(Debug, Clone, PartialEq)]
pub struct VectorSet {
    dim: usize,
    vectors: Vec<UnitVector>,
    labels: Option<Vec<String>>,
}

impl VectorSet {
    pub fn new(vectors: Vec<UnitVector>) -> Result<Self> {
        let dim = vectors.first().ok_or(Error::EmptySet)?.dim();
        for v in &vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
            }
        }
        Ok(VectorSet { dim, vectors, labels: None })
    }

    pub fn with_labels(vectors: Vec<UnitVector>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != vectors.len() {
            return Err(Error::LabelCount { vectors: vectors.len(), labels: labels.len() });
        }
        let mut set = Self::new(vectors)?;
        set.labels = Some(labels);
        Ok(set)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[UnitVector] {
        &self.vectors
    }

    pub fn get(&self, i: usize) -> &UnitVector {
        &self.vectors[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn iter(&self) -> impl Iterator<Item = &UnitVector> {
        self.vectors.iter()
    }
}

/// A validated family of mutually unbiased orthonormal bases of C^d.
#[derive(Debug, Clone)]
pub struct MubFamily {
    dim: usize,
    bases: Vec<VectorSet>,
    provenance: Provenance,
}

impl MubFamily {
    /// Groups bases into a family, enforcing the shape (each basis has
    /// exactly d vectors of dimension d) and the full MUB Gram test at the
    /// default tolerance.
    pub fn new(bases: Vec<VectorSet>, provenance: Provenance) -> Result<Self> {
        Self::with_tol(bases, provenance, MUB_TOL)
    }

    /// As [`MubFamily::new`] with an explicit Gram-test tolerance.
    pub fn with_tol(bases: Vec<VectorSet>, provenance: Provenance, tol: f64) -> Result<Self> {
        let dim = bases.first().ok_or(Error::EmptySet)?.dim();
        for basis in &bases {
            if basis.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: basis.dim() });
            }
            if basis.len() != dim {
                return Err(Error::BasisSize { expected: dim, got: basis.len() });
            }
        }
        let report = mub_check(&bases, tol)?;
        if !report.ok {
            return Err(Error::NotUnbiased {
                worst: report.worst_residual,
                witness: report.witness.unwrap_or_default(),
            });
        }
        Ok(MubFamily { dim, bases, provenance })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bases(&self) -> &[VectorSet] {
        &self.bases
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Flattens the family into one labeled set: basis i contributes its
    /// vectors in order under the label "Bi".
    pub fn union(&self) -> VectorSet {
        let mut vectors = Vec::with_capacity(self.bases.len() * self.dim);
        let mut labels = Vec::with_capacity(vectors.capacity());
        for (i, basis) in self.bases.iter().enumerate() {
            for v in basis.iter() {
                vectors.push(v.clone());
                labels.push(format!("B{i}"));
            }
        }
        VectorSet::with_labels(vectors, labels).expect("union of a valid family is well-formed")
    }
}

/// Haar-uniform random unit vector: i.i.d. complex Gaussian amplitudes,
/// normalized.
pub fn random_unit(dim: usize, rng: &mut impl Rng) -> UnitVector {
    loop {
        let amps = DVector::from_fn(dim, |_, _| {
            C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        if let Ok(v) = UnitVector::normalized(amps) {
            return v;
        }
    }
}

/// Standard basis vector e_i of C^d.
pub fn standard_vector(dim: usize, i: usize) -> UnitVector {
    let mut amps = DVector::from_element(dim, C64::ZERO);
    amps[i] = C64::new(1.0, 0.0);
    UnitVector { amps }
}

/// The standard basis of C^d as a VectorSet.
pub fn standard_basis(dim: usize) -> VectorSet {
    VectorSet::new((0..dim).map(|i| standard_vector(dim, i)).collect())
        .expect("standard basis is well-formed for dim ≥ 1")
}
