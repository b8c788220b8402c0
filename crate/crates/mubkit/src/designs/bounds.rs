//! Bounds on M(n), the maximum number of MUBs in dimension n.
//!
//! Upper bound: M(n) ≤ n+1 always. Lower bound: factor n into prime powers
//! and take min over factors of M(p^r) = p^r + 1 (the tensor-product rule
//! M(mn) ≥ min{M(m), M(n)}). For square n the Latin-square route gives an
//! additional reading, reported as text because the surveyed bound (N(d))
//! and the construction count (N(d)+2) disagree; see the note field.

use crate::algebra::prime_power_split;
use crate::error::{Error, Result};

/// Lower/upper bounds on M(n) with the rules that produced them.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub n: u64,
    pub lower: u64,
    pub upper: u64,
    /// Prime-power factorization of n as (p, r) pairs, ascending p.
    pub factors: Vec<(u64, u32)>,
    pub lower_rule: String,
    pub upper_rule: String,
    /// Present when n is a perfect square: the Latin-square route, with
    /// both readings of its strength spelled out.
    pub mols_note: Option<String>,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut r = 0;
            while n.is_multiple_of(p) {
                n /= p;
                r += 1;
            }
            factors.push((p, r));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Computes (lower, upper) bounds on M(n) per the rule table.
pub fn mub_count_bounds(n: u64) -> Result<BoundsReport> {
    if n < 2 {
        return Err(Error::BoundsRange(n));
    }
    let factors = factorize(n);
    let upper = n + 1;
    let upper_rule = format!("M(n) <= n+1 always; here {n}+1 = {upper}");
    let (lower, lower_rule) = if factors.len() == 1 {
        let (p, r) = factors[0];
        (n + 1, format!("prime power: M({p}^{r}) = {p}^{r} + 1 = {}", n + 1))
    } else {
        let parts: Vec<u64> = factors.iter().map(|&(p, r)| p.pow(r)).collect();
        let lower = parts.iter().map(|&q| q + 1).min().expect("n >= 2 factors");
        let listing = parts
            .iter()
            .map(|&q| format!("M({q}) = {}", q + 1))
            .collect::<Vec<_>>()
            .join(", ");
        (
            lower,
            format!("tensor rule M(mn) >= min(M(m), M(n)) over {n} = {}: min of {listing}",
                parts.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("*")),
        )
    };

    let root = (n as f64).sqrt().round() as u64;
    let mols_note = (root >= 2 && root * root == n).then(|| {
        match prime_power_split(root) {
            Some(_) => {
                let w = root - 1; // the field family realizes N(d) = d−1
                format!(
                    "square dimension {n} = {root}^2: w = N({root}) = {w} orthogonal Latin \
                     squares give w+2 = {} MUBs by construction; the survey bullet reads \
                     M({n}) >= N({root}) = {w} (the two counts differ by 2)",
                    w + 2
                )
            }
            None => format!(
                "square dimension {n} = {root}^2: the Latin-square route applies given \
                 externally supplied squares; N({root}) is not computed here \
                 (non-prime-power order)"
            ),
        }
    });

    Ok(BoundsReport { n, lower, upper, factors, lower_rule, upper_rule, mols_note })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_gives_exact_value() {
        let b = mub_count_bounds(5).unwrap();
        assert_eq!((b.lower, b.upper), (6, 6));
    }

    #[test]
    fn six_uses_the_min_rule() {
        let b = mub_count_bounds(6).unwrap();
        assert_eq!((b.lower, b.upper), (3, 7));
        assert_eq!(b.factors, vec![(2, 1), (3, 1)]);
    }

    #[test]
    fn twelve_takes_the_min_over_prime_power_parts() {
        // 12 = 4·3: min(M(4), M(3)) = min(5, 4) = 4
        let b = mub_count_bounds(12).unwrap();
        assert_eq!((b.lower, b.upper), (4, 13));
    }

    #[test]
    fn prime_powers_are_exact_across_desk_scale() {
        for n in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            let b = mub_count_bounds(n).unwrap();
            assert_eq!((b.lower, b.upper), (n + 1, n + 1), "n = {n}");
        }
    }

    #[test]
    fn square_dimensions_carry_the_latin_square_note() {
        for n in [4u64, 9, 16, 25] {
            let b = mub_count_bounds(n).unwrap();
            assert!(b.mols_note.is_some(), "n = {n} should note the square route");
        }
        assert!(mub_count_bounds(12).unwrap().mols_note.is_none());
        // 36 = 6² with non-prime-power root still gets an informational note
        let b36 = mub_count_bounds(36).unwrap();
        assert!(b36.mols_note.unwrap().contains("not computed"));
    }

    #[test]
    fn tiny_n_is_rejected() {
        assert!(matches!(mub_count_bounds(0), Err(Error::BoundsRange(0))));
        assert!(matches!(mub_count_bounds(1), Err(Error::BoundsRange(1))));
    }
}
