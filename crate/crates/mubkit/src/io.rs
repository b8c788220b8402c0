//! JSON serialization of vector sets.
//!
//! The on-disk format stores each amplitude as an exact `[re, im]` pair of
//! IEEE doubles, so write → read → write is byte-identical and overlap
//! computations on a reloaded set reproduce the originals bit for bit.

use std::fs;
use std::path::Path;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vectors::{Provenance, UnitVector, VectorSet};
use crate::C64;

/// Provenance block as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceFile {
    pub construction: String,
    pub parameters: String,
    pub tool_version: String,
}

/// Serialized form of a [`VectorSet`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorSetFile {
    pub dim: usize,
    /// One entry per vector; each amplitude is an `[re, im]` pair.
    pub vectors: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceFile>,
}

impl VectorSetFile {
    /// Captures a vector set, optionally stamping provenance.
    pub fn from_set(set: &VectorSet, provenance: Option<&Provenance>) -> Self {
        let vectors = set
            .vectors()
            .iter()
            .map(|v| v.amps().iter().map(|a| [a.re, a.im]).collect())
            .collect();
        let labels = set.labels().map(<[String]>::to_vec);
        VectorSetFile {
            dim: set.dim(),
            vectors,
            labels,
            provenance: provenance.map(|p| ProvenanceFile {
                construction: p.construction.clone(),
                parameters: p.parameters.clone(),
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            }),
        }
    }

    /// Reconstructs the in-memory set, validating shape and unit norms.
    pub fn to_set(&self) -> Result<VectorSet> {
        if self.dim == 0 {
            return Err(Error::FileFormat("dim must be positive".into()));
        }
        if self.vectors.is_empty() {
            return Err(Error::FileFormat("file contains no vectors".into()));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.vectors.len() {
                return Err(Error::FileFormat(format!(
                    "{} labels for {} vectors",
                    labels.len(),
                    self.vectors.len()
                )));
            }
        }
        let mut vectors = Vec::with_capacity(self.vectors.len());
        for (i, amps) in self.vectors.iter().enumerate() {
            if amps.len() != self.dim {
                return Err(Error::FileFormat(format!(
                    "vector {i} has {} amplitudes, expected dim = {}",
                    amps.len(),
                    self.dim
                )));
            }
            let v = DVector::from_iterator(
                self.dim,
                amps.iter().map(|&[re, im]| C64::new(re, im)),
            );
            vectors.push(UnitVector::new(v)?);
        }
        match &self.labels {
            Some(labels) => VectorSet::with_labels(vectors, labels.clone()),
            None => VectorSet::new(vectors),
        }
    }
}

/// Writes a set as pretty-printed JSON with a trailing newline.
pub fn write_vector_set(
    path: &Path,
    set: &VectorSet,
    provenance: Option<&Provenance>,
) -> Result<()> {
    let file = VectorSetFile::from_set(set, provenance);
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Reads and validates a vector-set file.
pub fn read_vector_set(path: &Path) -> Result<(VectorSet, Option<ProvenanceFile>)> {
    let text = fs::read_to_string(path)?;
    let file: VectorSetFile = serde_json::from_str(&text)?;
    let set = file.to_set()?;
    Ok((set, file.provenance))
}
