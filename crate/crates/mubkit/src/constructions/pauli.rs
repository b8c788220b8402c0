//! Construction III: commuting classes of generalized Pauli matrices and
//! their simultaneous eigenbases.
//!
//! In prime dimension p the unitaries {X^a Z^b} split into p+1 classes —
//! the powers of Z and the powers of XZ^a for a = 0..p−1 — that pairwise
//! intersect in the identity and commute within a class. Diagonalizing each
//! class yields p+1 MUBs. Diagonalization uses a seeded random Hermitian
//! combination of the class; eigenvector phases are canonicalized so the
//! output is reproducible.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::is_prime;
use crate::error::{Error, Result};
use crate::phase::root_of_unity;
use crate::vectors::{MubFamily, Provenance, UnitVector, VectorSet};

/// Cyclic shift X: X·e_k = e_{k+1 mod d}.
pub fn shift_matrix(d: usize) -> DMatrix<C64> {
    DMatrix::from_fn(d, d, |r, c| {
        if r == (c + 1) % d {
            C64::new(1.0, 0.0)
        } else {
            C64::ZERO
        }
    })
}

/// Clock Z = diag(1, ω, ω², …), ω = exp(2πi/d).
pub fn clock_matrix(d: usize) -> DMatrix<C64> {
    DMatrix::from_fn(d, d, |r, c| {
        if r == c {
            root_of_unity(r as i64, d as u64)
        } else {
            C64::ZERO
        }
    })
}

fn commutator_residual(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    let comm = a * b - b * a;
    comm.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// The p+1 commuting classes {Z^j} and {(XZ^a)^j : j = 0..p−1} for
/// a = 0..p−1, each a set of p unitaries containing the identity.
pub fn pauli_classes(p: usize) -> Result<Vec<Vec<DMatrix<C64>>>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let x = shift_matrix(p);
    let z = clock_matrix(p);
    let mut generators = vec![z.clone()];
    let mut za = DMatrix::<C64>::identity(p, p);
    for _ in 0..p {
        generators.push(&x * &za); // XZ^a
        za *= &z;
    }
    let classes: Vec<Vec<DMatrix<C64>>> = generators
        .iter()
        .map(|g| {
            let mut powers = Vec::with_capacity(p);
            let mut acc = DMatrix::<C64>::identity(p, p);
            for _ in 0..p {
                powers.push(acc.clone());
                acc = g * acc;
            }
            powers
        })
        .collect();
    for class in &classes {
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                let residual = commutator_residual(&class[i], &class[j]);
                assert!(
                    residual < 1e-12,
                    "powers of one matrix must commute (residual {residual:.3e})"
                );
            }
        }
    }
    Ok(classes)
}

/// Eigenvalue gap below which a random combination counts as degenerate
/// and is redrawn.
const GAP_TOL: f64 = 1e-6;
/// Off-diagonal residual allowed when re-validating that an eigenbasis
/// diagonalizes every class member.
const DIAG_TOL: f64 = 1e-9;
const MAX_ATTEMPTS: usize = 5;

fn canonicalize_phase(v: &mut DVector<C64>) {
    if let Some(lead) = v.iter().find(|a| a.norm() > 1e-8) {
        let phase = lead / lead.norm();
        let correction = phase.conj();
        for a in v.iter_mut() {
            *a *= correction;
        }
    }
}

fn off_diagonal_residual(m: &DMatrix<C64>) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            if r != c {
                worst = worst.max(m[(r, c)].norm());
            }
        }
    }
    worst
}

/// Simultaneously diagonalizes each commuting class and assembles the
/// eigenbases into a MUB family.
///
/// Per class, a Hermitian combination Σ_j (c_j U_j + c̄_j U_j†)/2 with
/// seeded complex Gaussian coefficients is eigendecomposed; combinations
/// with eigenvalue gaps under 1e−6, or whose eigenbasis fails to
/// diagonalize every member to 1e−9, are redrawn (at most 5 attempts).
/// Eigenvectors are sorted by eigenvalue and phase-canonicalized (first
/// amplitude above 1e−8 made real positive). The coefficients are complex
/// rather than real because real combinations vanish identically on some
/// classes (for {1, XZ} in d=2, XZ + (XZ)† = 0).
pub fn simultaneous_diagonalize(
    classes: &[Vec<DMatrix<C64>>],
    seed: u64,
) -> Result<MubFamily> {
    let first = classes
        .first()
        .and_then(|c| c.first())
        .ok_or(Error::EmptySet)?;
    let d = first.nrows();
    for (ci, class) in classes.iter().enumerate() {
        if class.len() != d {
            return Err(Error::ClassSize { class: ci, expected: d, got: class.len() });
        }
        for u in class {
            if u.nrows() != d || u.ncols() != d {
                return Err(Error::DimensionMismatch { expected: d, got: u.nrows() });
            }
        }
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                let residual = commutator_residual(&class[i], &class[j]);
                if residual > 1e-10 {
                    return Err(Error::NotCommuting { class: ci, i, j, residual });
                }
            }
        }
    }

    let mut bases = Vec::with_capacity(classes.len());
    'class: for (ci, class) in classes.iter().enumerate() {
        for attempt in 0..MAX_ATTEMPTS {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((ci * MAX_ATTEMPTS + attempt) as u64);
            let mut m = DMatrix::<C64>::zeros(d, d);
            for u in class {
                let c = C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
                m += (u * c + u.adjoint() * c.conj()).scale(0.5);
            }
            // symmetrize away rounding asymmetry before the eigensolver
            m = (&m + m.adjoint()).scale(0.5);
            let eig = SymmetricEigen::new(m);

            let mut order: Vec<usize> = (0..d).collect();
            order.sort_by(|&a, &b| {
                eig.eigenvalues[a]
                    .partial_cmp(&eig.eigenvalues[b])
                    .expect("eigenvalues are finite")
            });
            let degenerate = order
                .windows(2)
                .any(|w| eig.eigenvalues[w[1]] - eig.eigenvalues[w[0]] < GAP_TOL);
            if degenerate {
                continue;
            }

            let mut basis = DMatrix::<C64>::zeros(d, d);
            for (col, &idx) in order.iter().enumerate() {
                let mut v: DVector<C64> = eig.eigenvectors.column(idx).into_owned();
                canonicalize_phase(&mut v);
                basis.set_column(col, &v);
            }
            let diagonalizes = class
                .iter()
                .all(|u| off_diagonal_residual(&(basis.adjoint() * u * &basis)) < DIAG_TOL);
            if !diagonalizes {
                continue;
            }

            let vectors: Result<Vec<UnitVector>> = (0..d)
                .map(|col| UnitVector::new(basis.column(col).into_owned()))
                .collect();
            bases.push(VectorSet::new(vectors?)?);
            continue 'class;
        }
        return Err(Error::Degenerate { class: ci, attempts: MAX_ATTEMPTS });
    }

    MubFamily::new(
        bases,
        Provenance {
            construction: "pauli".into(),
            parameters: format!("classes={}, seed={seed}", classes.len()),
        },
    )
}

/// The Weyl–Heisenberg orbit {X^a Z^b |f⟩ : a, b = 0..d−1} of a fiducial
/// vector, a outer and b inner, phases evaluated exactly.
pub fn weyl_heisenberg_orbit(fiducial: &UnitVector) -> Result<VectorSet> {
    let d = fiducial.dim();
    let f = fiducial.amps();
    let mut vectors = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            // (X^a Z^b f)_j = ω^{(j−a)·b} f_{j−a mod d}
            let amps = DVector::from_fn(d, |j, _| {
                let src = (j + d - a) % d;
                root_of_unity((src * b) as i64, d as u64) * f[src]
            });
            vectors.push(UnitVector::new(amps)?);
        }
    }
    VectorSet::new(vectors)
}
