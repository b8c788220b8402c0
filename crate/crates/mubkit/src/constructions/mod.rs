//! The four MUB constructions and the per-dimension dispatcher.
//!
//! Construction I (odd prime power q): standard basis plus the q bases
//! B_a = {q^(−1/2) (ω_p^{tr(ax²+bx)})_{x∈F_q} : b ∈ F_q}.
//!
//! Construction II (dimension 2^n): standard basis plus the 2^n bases
//! M_a = {2^(−n/2) (i^{tr((a+2b)x)})_{x∈T_n} : b ∈ T_n} over the Galois
//! ring GR(4,n) — all phases are exact 4th roots of unity.
//!
//! Construction III (prime p): simultaneous eigenbases of the p+1 commuting
//! classes of generalized Pauli matrices; see [`pauli`].
//!
//! Construction IV (dimension d²): one sparse basis per square in
//! {w MOLS} ∪ {row square} ∪ {column square}, combined with a complex
//! Hadamard matrix. The classical statement closes the family with the
//! standard basis instead of the column square, but the standard basis is
//! not unbiased with the sparse bases (overlaps land in {0, 1/d}, not
//! 1/d²); the column square completes the family correctly and is what
//! this module builds.

pub mod pauli;

pub use pauli::{clock_matrix, pauli_classes, shift_matrix, simultaneous_diagonalize, weyl_heisenberg_orbit};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::algebra::{fourier_hadamard, mols, prime_power_split, validate_hadamard, FieldCtx, LatinSquare, RingCtx};
use crate::error::{Error, Result};
use crate::phase::root_of_unity;
use crate::tol::HADAMARD_TOL;
use crate::vectors::{standard_basis, MubFamily, Provenance, UnitVector, VectorSet};

/// Construction I: q+1 MUBs in C^q for an odd prime power q.
///
/// Basis order: standard basis first, then B_a for a in field-enumeration
/// order; within B_a, vectors v_{a,b} in b-enumeration order; components
/// indexed by x in the same order.
pub fn construction_wf(q: usize) -> Result<MubFamily> {
    let (p, n) = prime_power_split(q as u64).ok_or(Error::NotOddPrimePower(q as u64))?;
    if p == 2 {
        return Err(Error::NotOddPrimePower(q as u64));
    }
    let f = FieldCtx::new(p, n as usize)?;
    let elems: Vec<_> = f.enumerate().collect();
    let scale = 1.0 / (q as f64).sqrt();

    let mut bases = vec![standard_basis(q)];
    for a in &elems {
        let mut vectors = Vec::with_capacity(q);
        for b in &elems {
            let amps = DVector::from_iterator(
                q,
                elems.iter().map(|x| {
                    let ax2 = f.mul(a, &f.mul(x, x));
                    let bx = f.mul(b, x);
                    let t = f.trace(&f.add(&ax2, &bx));
                    root_of_unity(t as i64, p) * scale
                }),
            );
            vectors.push(UnitVector::new(amps)?);
        }
        bases.push(VectorSet::new(vectors)?);
    }
    MubFamily::new(
        bases,
        Provenance {
            construction: "wf".into(),
            parameters: format!("q={q} (p={p}, n={n})"),
        },
    )
}

/// Construction II: 2^n + 1 MUBs in C^(2^n) from the Galois ring GR(4,n).
///
/// Basis order: standard basis first, then M_a for a in Teichmüller order
/// (0, 1, ξ, ξ², …); within M_a, vectors indexed by b in the same order,
/// components by x in the same order.
pub fn construction_gr(n: usize) -> Result<MubFamily> {
    let ring = RingCtx::new(n)?;
    let t = ring.teichmuller().to_vec();
    let d = t.len();
    let scale = 1.0 / (d as f64).sqrt();

    let mut bases = vec![standard_basis(d)];
    for a in &t {
        let mut vectors = Vec::with_capacity(d);
        for b in &t {
            let exponent_base = ring.add(a, &ring.scale(2, b)); // a + 2b
            let amps = DVector::from_iterator(
                d,
                t.iter().map(|x| {
                    let tr = ring.trace(&ring.mul(&exponent_base, x));
                    root_of_unity(tr as i64, 4) * scale
                }),
            );
            vectors.push(UnitVector::new(amps)?);
        }
        bases.push(VectorSet::new(vectors)?);
    }
    MubFamily::new(
        bases,
        Provenance {
            construction: "gr".into(),
            parameters: format!("n={n} (dimension {d})"),
        },
    )
}

/// Position lists s_{L,α}: for each symbol α (1-based), the 0-based flat
/// indices (i−1) + (j−1)d of its occurrences, traversed column-wise from
/// the upper-left corner.
fn symbol_positions(grid: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let d = grid.len();
    let mut positions = vec![Vec::with_capacity(d); d];
    for j in 0..d {
        for i in 0..d {
            positions[grid[i][j] - 1].push(i + j * d);
        }
    }
    positions
}

/// One sparse basis of C^{d²} from a symbol square: for each α and each
/// Hadamard column j, v_{L,α,j} = d^(−1/2) Σ_i e_{s_{L,α}[i]} h_{i,j}.
fn square_basis(grid: &[Vec<usize>], h: &DMatrix<C64>) -> Result<VectorSet> {
    let d = grid.len();
    let scale = 1.0 / (d as f64).sqrt();
    let positions = symbol_positions(grid);
    let mut vectors = Vec::with_capacity(d * d);
    for s in &positions {
        debug_assert_eq!(s.len(), d, "each symbol occurs d times");
        for j in 0..d {
            let mut amps = DVector::from_element(d * d, C64::ZERO);
            for (i, &pos) in s.iter().enumerate() {
                amps[pos] += h[(i, j)] * scale;
            }
            vectors.push(UnitVector::new(amps)?);
        }
    }
    VectorSet::new(vectors)
}

/// The degenerate squares closing the family: row square (cell (i,j) holds
/// symbol i) and column square (cell (i,j) holds symbol j), 1-based.
fn row_square(d: usize) -> Vec<Vec<usize>> {
    (1..=d).map(|i| vec![i; d]).collect()
}

fn column_square(d: usize) -> Vec<Vec<usize>> {
    (0..d).map(|_| (1..=d).collect()).collect()
}

/// Construction IV with the internal field family of MOLS: w+2 = d+1 MUBs
/// in C^{d²} for prime-power d.
pub fn construction_mols(d: usize, hadamard: Option<&DMatrix<C64>>) -> Result<MubFamily> {
    let squares = mols(d)?;
    construction_mols_from(&squares, hadamard)
}

/// Construction IV from caller-supplied mutually orthogonal Latin squares.
///
/// Basis order: one basis per supplied square in input order, then the
/// row-square basis, then the column-square basis; within a basis, vectors
/// ordered by (α, j). `hadamard` defaults to the Fourier matrix and is
/// validated either way.
pub fn construction_mols_from(
    squares: &[LatinSquare],
    hadamard: Option<&DMatrix<C64>>,
) -> Result<MubFamily> {
    let d = squares.first().map(|s| s.order()).ok_or(Error::EmptySet)?;
    for s in squares {
        if s.order() != d {
            return Err(Error::DimensionMismatch { expected: d, got: s.order() });
        }
    }
    for (i, a) in squares.iter().enumerate() {
        for (j, b) in squares.iter().enumerate().skip(i + 1) {
            if !a.is_orthogonal_to(b) {
                return Err(Error::NotOrthogonalSquares { i, j });
            }
        }
    }
    let fourier;
    let h = match hadamard {
        Some(h) => {
            if h.nrows() != d || h.ncols() != d {
                return Err(Error::DimensionMismatch { expected: d, got: h.nrows() });
            }
            h
        }
        None => {
            fourier = fourier_hadamard(d);
            &fourier
        }
    };
    validate_hadamard(h, HADAMARD_TOL)?;

    let mut bases = Vec::with_capacity(squares.len() + 2);
    for square in squares {
        bases.push(square_basis(square.grid(), h)?);
    }
    bases.push(square_basis(&row_square(d), h)?);
    bases.push(square_basis(&column_square(d), h)?);
    MubFamily::new(
        bases,
        Provenance {
            construction: "mols".into(),
            parameters: format!(
                "d={d} (dimension {}), squares={}, hadamard={}",
                d * d,
                squares.len(),
                if hadamard.is_some() { "custom" } else { "fourier" }
            ),
        },
    )
}

/// Dispatcher: the maximal family of d+1 MUBs for prime-power d — the
/// Galois-ring construction for even prime powers, the finite-field
/// construction for odd ones.
pub fn maximal_mubs(d: usize) -> Result<MubFamily> {
    let (p, n) = prime_power_split(d as u64).ok_or(Error::NoMaximalConstruction(d as u64))?;
    if p == 2 {
        construction_gr(n as usize)
    } else {
        construction_wf(d)
    }
}
