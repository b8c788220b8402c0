//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("dimension {0} is not a prime power; no maximal construction is known \
             (for square dimensions, the Latin-square construction yields a smaller family)")]
    NoMaximalConstruction(u64),

    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),

    #[error("size {size} exceeds the desk-scale limit {limit}")]
    SizeLimit { size: u64, limit: u64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector norm {norm} is not within tolerance of 1")]
    NotUnit { norm: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("operation requires a nonempty vector set")]
    EmptySet,

    #[error("label count {labels} does not match vector count {vectors}")]
    LabelCount { vectors: usize, labels: usize },

    #[error("basis has {got} vectors, expected {expected}")]
    BasisSize { expected: usize, got: usize },

    #[error("matrix is not a complex Hadamard matrix (residual {residual:.3e})")]
    NotHadamard { residual: f64 },

    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),

    #[error("Latin squares {i} and {j} are not orthogonal")]
    NotOrthogonalSquares { i: usize, j: usize },

    #[error("class {class} has {got} elements, expected {expected}")]
    ClassSize { class: usize, expected: usize, got: usize },

    #[error("class {class}: elements {i} and {j} do not commute (residual {residual:.3e})")]
    NotCommuting { class: usize, i: usize, j: usize, residual: f64 },

    #[error("class {class}: no non-degenerate combination found after {attempts} attempts")]
    Degenerate { class: usize, attempts: usize },

    #[error("bases are not mutually unbiased (worst residual {worst:.3e}, {witness})")]
    NotUnbiased { worst: f64, witness: String },

    #[error("vectors {i} and {j} are not orthogonal (|<x,y>|^2 = {overlap2:.3e})")]
    NotOrthogonalPair { i: usize, j: usize, overlap2: f64 },

    #[error("set has {got} vectors, expected d(d+1) = {expected} for dimension {dim}")]
    PartitionSize { dim: usize, expected: usize, got: usize },

    #[error("angle set precondition failed: {0}")]
    AngleSet(String),

    #[error("Welch equality fails at k = {k} (residual {residual:.3e}); not a 2-design")]
    NotTwoDesign { k: usize, residual: f64 },

    #[error("partition structure violated: {0}")]
    PartitionStructure(String),

    #[error("bound calculation requires n >= 2, got {0}")]
    BoundsRange(u64),

    #[error("no built-in fiducial for dimension {0}")]
    NoFiducial(usize),

    #[error("malformed vector-set file: {0}")]
    FileFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
