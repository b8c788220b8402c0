//! Latin squares and the mutually-orthogonal field family.
//!
//! Symbols are 1-based ({1,…,d}) throughout. Orthogonality of two squares is
//! the superposition test: overlaying them must produce every ordered symbol
//! pair exactly once.

use crate::error::{Error, Result};

use super::field::{prime_power_split, FieldCtx};

/// A d×d Latin square over the symbol set {1,…,d}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    grid: Vec<Vec<usize>>,
}

impl LatinSquare {
    /// Validates that every row and every column is a permutation of {1,…,d}.
    pub fn new(grid: Vec<Vec<usize>>) -> Result<Self> {
        let d = grid.len();
        if d == 0 {
            return Err(Error::NotLatinSquare("empty grid".into()));
        }
        for (i, row) in grid.iter().enumerate() {
            if row.len() != d {
                return Err(Error::NotLatinSquare(format!(
                    "row {i} has length {} in a square of order {d}",
                    row.len()
                )));
            }
        }
        for (i, row) in grid.iter().enumerate() {
            let mut seen = vec![false; d];
            for (j, &s) in row.iter().enumerate() {
                if s < 1 || s > d {
                    return Err(Error::NotLatinSquare(format!(
                        "symbol {s} at ({i},{j}) outside 1..={d}"
                    )));
                }
                if seen[s - 1] {
                    return Err(Error::NotLatinSquare(format!(
                        "row {i} repeats symbol {s}"
                    )));
                }
                seen[s - 1] = true;
            }
        }
        for j in 0..d {
            let mut seen = vec![false; d];
            for (i, row) in grid.iter().enumerate() {
                let s = row[j];
                if seen[s - 1] {
                    return Err(Error::NotLatinSquare(format!(
                        "column {j} repeats symbol {s} (row {i})"
                    )));
                }
                seen[s - 1] = true;
            }
        }
        Ok(LatinSquare { order: d, grid })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Symbol at 0-based cell (i, j), in {1,…,d}.
    pub fn symbol(&self, i: usize, j: usize) -> usize {
        self.grid[i][j]
    }

    pub fn grid(&self) -> &[Vec<usize>] {
        &self.grid
    }

    /// Superposition test: overlaying the two squares yields all d² ordered
    /// symbol pairs exactly once.
    pub fn is_orthogonal_to(&self, other: &LatinSquare) -> bool {
        if self.order != other.order {
            return false;
        }
        let d = self.order;
        let mut seen = vec![false; d * d];
        for i in 0..d {
            for j in 0..d {
                let pair = (self.grid[i][j] - 1) * d + (other.grid[i][j] - 1);
                if seen[pair] {
                    return false;
                }
                seen[pair] = true;
            }
        }
        true
    }
}

/// The field family of d−1 mutually orthogonal Latin squares of prime-power
/// order d: L_a(i,j) = a·i + j over GF(d), one square per nonzero a, with
/// cells and symbols both following the fixed field enumeration.
pub fn mols(d: usize) -> Result<Vec<LatinSquare>> {
    let (p, n) = prime_power_split(d as u64).ok_or(Error::NotPrimePower(d as u64))?;
    let f = FieldCtx::new(p, n as usize)?;
    let elems: Vec<_> = f.enumerate().collect();
    let mut squares = Vec::with_capacity(d - 1);
    for a in elems.iter().skip(1) {
        let mut grid = vec![vec![0usize; d]; d];
        for (i, ei) in elems.iter().enumerate() {
            let ai = f.mul(a, ei);
            for (j, ej) in elems.iter().enumerate() {
                grid[i][j] = f.index_of(&f.add(&ai, ej)) as usize + 1;
            }
        }
        squares.push(LatinSquare::new(grid)?);
    }
    for (i, a) in squares.iter().enumerate() {
        for (j, b) in squares.iter().enumerate().skip(i + 1) {
            if !a.is_orthogonal_to(b) {
                return Err(Error::NotOrthogonalSquares { i, j });
            }
        }
    }
    Ok(squares)
}
