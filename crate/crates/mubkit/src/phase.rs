//! Root-of-unity evaluation with minimal floating-point phase drift.
//!
//! Exponents are reduced to lowest terms before any trigonometry, so equal
//! phases evaluate identically no matter how they were written, and quarter
//! turns come out exact.

use num_complex::Complex64;
use std::f64::consts::TAU;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// exp(2 pi i k / order), with k reduced modulo order and the fraction
/// reduced to lowest terms. Quarter turns (reduced denominator 1, 2, or 4)
/// are returned exactly.
pub fn root_of_unity(k: i64, order: u64) -> Complex64 {
    assert!(order > 0, "root order must be positive");
    let m = k.rem_euclid(order as i64) as u64;
    if m == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let g = gcd(m, order);
    let (num, den) = (m / g, order / g);
    match den {
        1 => Complex64::new(1.0, 0.0),
        2 => Complex64::new(-1.0, 0.0),
        4 if num == 1 => Complex64::new(0.0, 1.0),
        4 => Complex64::new(0.0, -1.0),
        _ => {
            let theta = TAU * (num as f64) / (den as f64);
            Complex64::new(theta.cos(), theta.sin())
        }
    }
}

/// All `order`-th roots of unity, indexed by exponent. Each distinct reduced
/// fraction is evaluated once; callers index the table instead of calling
/// trigonometric functions per amplitude.
pub fn roots_table(order: usize) -> Vec<Complex64> {
    (0..order).map(|k| root_of_unity(k as i64, order as u64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(root_of_unity(0, 4), Complex64::new(1.0, 0.0));
        assert_eq!(root_of_unity(1, 4), Complex64::new(0.0, 1.0));
        assert_eq!(root_of_unity(2, 4), Complex64::new(-1.0, 0.0));
        assert_eq!(root_of_unity(3, 4), Complex64::new(0.0, -1.0));
        // reduction: 2/8 = 1/4, 6/12 = 1/2
        assert_eq!(root_of_unity(2, 8), Complex64::new(0.0, 1.0));
        assert_eq!(root_of_unity(6, 12), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn negative_and_wrapped_exponents() {
        assert_eq!(root_of_unity(-1, 4), root_of_unity(3, 4));
        assert_eq!(root_of_unity(7, 3), root_of_unity(1, 3));
    }

    #[test]
    fn table_matches_pointwise_evaluation() {
        for order in [1usize, 2, 3, 5, 12] {
            let table = roots_table(order);
            assert_eq!(table.len(), order);
            for (k, z) in table.iter().enumerate() {
                assert_eq!(*z, root_of_unity(k as i64, order as u64));
                assert!((z.norm() - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn equal_reduced_fractions_evaluate_identically() {
        // 3/9 and 5/15 both reduce to 1/3; the bit patterns must agree.
        assert_eq!(root_of_unity(3, 9), root_of_unity(5, 15));
        assert_eq!(root_of_unity(10, 25), root_of_unity(2, 5));
    }
}
