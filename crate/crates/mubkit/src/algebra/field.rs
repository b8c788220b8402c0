//! Exact arithmetic over prime fields and extension fields GF(p^n).
//!
//! Elements are polynomial coefficient vectors over F_p, reduced modulo a
//! monic modulus chosen deterministically: the lexicographically smallest
//! monic primitive polynomial of the requested degree (coefficient lists
//! compared low-degree-first). Primitivity and irreducibility are checked by
//! exhaustive search; the desk-scale size cap keeps that trivial.

use crate::error::{Error, Result};
use crate::tol::DESK_SCALE_LIMIT;

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime factor together with the exponent, when n is a prime power.
pub(crate) fn prime_power_split(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            let mut r = 0;
            while m.is_multiple_of(p) {
                m /= p;
                r += 1;
            }
            return if m == 1 { Some((p, r)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

// ---- raw polynomial arithmetic, coefficients mod m, low-degree-first ----
// (shared with the Galois-ring module, where m = 4)

pub(crate) fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], m: u64) -> Vec<u64> {
    let n = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % m;
        }
    }
    // reduce modulo the monic modulus, top degree down
    for deg in (n..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (k, &mk) in modulus.iter().enumerate().take(n) {
            let idx = deg - n + k;
            prod[idx] = (prod[idx] + c * (m - mk % m) % m) % m;
        }
    }
    prod.truncate(n.max(1));
    prod.resize(n.max(1), 0);
    prod
}

pub(crate) fn is_one(coeffs: &[u64]) -> bool {
    coeffs[0] == 1 && coeffs[1..].iter().all(|&c| c == 0)
}

/// Multiplicative order of x in F_p[x]/(modulus), by exhaustive iteration.
/// Returns None if x never reaches 1 within size-1 steps (x not a unit, or
/// the candidate modulus is reducible in a way that traps x).
fn x_multiplicative_order(modulus: &[u64], p: u64, size: u64) -> Option<u64> {
    let n = modulus.len() - 1;
    if n == 0 {
        return None;
    }
    let mut x = vec![0u64; n];
    if n == 1 {
        x[0] = (p - modulus[0] % p) % p; // x = -c0 mod (x + c0)
    } else {
        x[1] = 1;
    }
    if x.iter().all(|&c| c == 0) {
        return None;
    }
    // cur holds x^k at the top of iteration k; orders of units divide size-1
    let mut cur = x.clone();
    for k in 1..size {
        if is_one(&cur) {
            return Some(k);
        }
        cur = poly_mulmod(&cur, &x, modulus, p);
    }
    None
}

/// Lexicographically smallest monic primitive polynomial of degree n over F_p
/// (coefficient lists compared low-degree-first). Primitivity means the
/// residue of x has multiplicative order exactly p^n - 1, which also forces
/// irreducibility.
pub(crate) fn smallest_primitive_poly(p: u64, n: usize, size: u64) -> Vec<u64> {
    let target = size - 1;
    let mut digits = vec![0u64; n];
    loop {
        // candidate = x^n + digits, digits[0] is the constant term
        let mut modulus = digits.clone();
        modulus.push(1);
        if modulus[0] != 0 {
            if let Some(order) = x_multiplicative_order(&modulus, p, size) {
                if order == target {
                    return modulus;
                }
            }
        }
        // advance the coefficient list in lex order (low-degree-first lists,
        // so digits[0] is the most significant position)
        let mut i = n;
        loop {
            if i == 0 {
                unreachable!("a primitive polynomial of degree {n} over F_{p} exists");
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Context for GF(p^n): the prime, the degree, and the defining modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    n: usize,
    size: u64,
    modulus: Vec<u64>,
    primitive: bool,
}

/// Element of GF(p^n) in polynomial representation, length-n coefficient
/// list with entries in [0, p), low-degree-first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl FieldCtx {
    /// Canonical context for GF(p^n) under the default desk-scale cap.
    pub fn new(p: u64, n: usize) -> Result<Self> {
        Self::with_limit(p, n, DESK_SCALE_LIMIT)
    }

    /// As [`FieldCtx::new`] with an explicit size cap.
    pub fn with_limit(p: u64, n: usize, limit: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(n >= 1, "extension degree must be at least 1");
        let size = p.checked_pow(n as u32).unwrap_or(u64::MAX);
        if size > limit {
            return Err(Error::SizeLimit { size, limit });
        }
        // Prime fields use the trivial modulus x; no primitive element is
        // pinned because none of the arithmetic below needs one.
        let (modulus, primitive) = if n == 1 {
            (vec![0, 1], false)
        } else {
            (smallest_primitive_poly(p, n, size), true)
        };
        Ok(FieldCtx { p, n, size, modulus, primitive })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Field size q = p^n.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Monic modulus, length n+1, low-degree-first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// True when the residue of x generates the multiplicative group.
    pub fn modulus_is_primitive(&self) -> bool {
        self.primitive
    }

    /// Exhaustive irreducibility check: trial division by every monic
    /// polynomial of degree 1..=n/2.
    pub fn modulus_is_irreducible(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        for deg in 1..=self.n / 2 {
            let mut digits = vec![0u64; deg];
            loop {
                let mut divisor = digits.clone();
                divisor.push(1);
                if poly_divides(&divisor, &self.modulus, self.p) {
                    return false;
                }
                let mut i = deg;
                let mut done = false;
                loop {
                    if i == 0 {
                        done = true;
                        break;
                    }
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < self.p {
                        break;
                    }
                    digits[i] = 0;
                }
                if done {
                    break;
                }
            }
        }
        true
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.n] }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.n];
        coeffs[0] = 1;
        FieldElement { coeffs }
    }

    /// Element from an explicit coefficient list (entries reduced mod p).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: coeffs.len() });
        }
        Ok(FieldElement { coeffs: coeffs.iter().map(|&c| c % self.p).collect() })
    }

    /// The i-th element in the fixed enumeration 0, 1, x, x+1, ...: base-p
    /// digits of the index, low-degree-first.
    pub fn element_from_index(&self, index: u64) -> FieldElement {
        assert!(index < self.size, "index {index} out of range for field of size {}", self.size);
        let mut coeffs = vec![0u64; self.n];
        let mut rest = index;
        for c in coeffs.iter_mut() {
            *c = rest % self.p;
            rest /= self.p;
        }
        FieldElement { coeffs }
    }

    pub fn index_of(&self, a: &FieldElement) -> u64 {
        let mut idx = 0u64;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// All field elements in enumeration order.
    pub fn enumerate(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size).map(move |i| self.element_from_index(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { coeffs: poly_mulmod(&a.coeffs, &b.coeffs, &self.modulus, self.p) }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element, by exhaustive iteration.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut cur = a.clone();
        for k in 1..self.size {
            if is_one(&cur.coeffs) {
                return Some(k);
            }
            cur = self.mul(&cur, a);
        }
        None
    }

    /// Frobenius endomorphism a -> a^p.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    /// Field trace tr: GF(p^n) -> F_p, the sum of the n Frobenius conjugates.
    /// The result is a prime-subfield value, returned as an integer in [0, p).
    pub fn trace(&self, a: &FieldElement) -> u64 {
        let mut conj = a.clone();
        let mut acc = a.clone();
        for _ in 1..self.n {
            conj = self.frobenius(&conj);
            acc = self.add(&acc, &conj);
        }
        assert!(
            acc.coeffs[1..].iter().all(|&c| c == 0),
            "trace must land in the prime subfield"
        );
        acc.coeffs[0]
    }
}

fn poly_divides(divisor: &[u64], dividend: &[u64], p: u64) -> bool {
    // divisor monic; long division, check zero remainder
    let mut rem: Vec<u64> = dividend.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        if lead != 0 {
            for (k, &c) in divisor.iter().enumerate().take(d) {
                let idx = deg - d + k;
                rem[idx] = (rem[idx] + lead * (p - c % p) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_prime_characteristic() {
        assert!(matches!(FieldCtx::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldCtx::new(1, 1), Err(Error::NotPrime(1))));
    }

    #[test]
    fn rejects_oversized_fields() {
        assert!(matches!(FieldCtx::new(2, 13), Err(Error::SizeLimit { .. })));
        assert!(FieldCtx::with_limit(2, 13, 1 << 13).is_ok());
    }

    #[test]
    fn prime_field_uses_trivial_modulus() {
        let f3 = FieldCtx::new(3, 1).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        assert!(!f3.modulus_is_primitive());
        assert_eq!(f3.size(), 3);
    }

    #[test]
    fn gf9_modulus_is_primitive_with_order_eight() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert!(f9.modulus_is_primitive());
        assert!(f9.modulus_is_irreducible());
        // oracle: exhaustive order check of the residue of x
        let x = f9.element(&[0, 1]).unwrap();
        assert_eq!(f9.multiplicative_order(&x), Some(8));
        // and no smaller-lex candidate is primitive: x^2+x+2 is the answer
        assert_eq!(f9.modulus(), &[2, 1, 1]);
    }

    #[test]
    fn gf4_uses_the_unique_primitive_quadratic() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]); // x^2 + x + 1
    }

    #[test]
    fn trace_on_prime_field_is_identity() {
        let f3 = FieldCtx::new(3, 1).unwrap();
        for i in 0..3 {
            assert_eq!(f3.trace(&f3.element_from_index(i)), i);
        }
    }

    #[test]
    fn gf4_trace_table() {
        // tr(x) = x + x^2; over GF(4) the table is {0 -> 0, 1 -> 0, w -> 1, w^2 -> 1}
        let f4 = FieldCtx::new(2, 2).unwrap();
        let w = f4.element(&[0, 1]).unwrap();
        let w2 = f4.mul(&w, &w);
        assert_eq!(f4.trace(&f4.zero()), 0);
        assert_eq!(f4.trace(&f4.one()), 0);
        assert_eq!(f4.trace(&w), 1);
        assert_eq!(f4.trace(&w2), 1);
    }

    #[test]
    fn gf9_trace_of_one_is_two() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.trace(&f9.one()), 2);
        // oracle: brute-force Frobenius sum 1 + 1^3 = 2 in F_3
    }

    #[test]
    fn enumeration_round_trips_and_starts_zero_one_x() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        let elems: Vec<_> = f4.enumerate().collect();
        assert_eq!(elems[0], f4.zero());
        assert_eq!(elems[1], f4.one());
        assert_eq!(elems[2], f4.element(&[0, 1]).unwrap());
        assert_eq!(elems[3], f4.element(&[1, 1]).unwrap());
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(f4.index_of(e), i as u64);
        }
    }

    fn all_prime_powers_up_to(limit: u64) -> Vec<(u64, usize)> {
        let mut out = Vec::new();
        for p in 2..=limit {
            if !is_prime(p) {
                continue;
            }
            let mut n = 1;
            while p.pow(n as u32) <= limit {
                out.push((p, n));
                n += 1;
            }
        }
        out
    }

    #[test]
    fn field_axioms_exhaustive_desk_scale() {
        for (p, n) in all_prime_powers_up_to(64) {
            let f = FieldCtx::new(p, n).unwrap();
            let elems: Vec<_> = f.enumerate().collect();
            let one = f.one();
            // inverses: every nonzero element has one (exhaustive search)
            for a in elems.iter().filter(|a| !a.is_zero()) {
                assert!(
                    elems.iter().any(|b| f.mul(a, b) == one),
                    "no inverse for {a:?} in GF({p}^{n})"
                );
            }
            // associativity and distributivity over all triples
            for a in &elems {
                for b in &elems {
                    let ab = f.mul(a, b);
                    let a_plus_b = f.add(a, b);
                    for c in &elems {
                        assert_eq!(f.mul(&ab, c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(
                            f.mul(&a_plus_b, c),
                            f.add(&f.mul(a, c), &f.mul(b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_subfield() {
        for (p, n) in [(2u64, 4usize), (3, 3), (5, 2), (7, 2)] {
            let f = FieldCtx::new(p, n).unwrap();
            for a in f.enumerate() {
                let fixed = f.frobenius(&a) == a;
                let in_prime_subfield = a.coeffs()[1..].iter().all(|&c| c == 0);
                assert_eq!(fixed, in_prime_subfield, "GF({p}^{n}), element {a:?}");
            }
        }
    }

    #[test]
    fn trace_surjects_with_uniform_fibers() {
        for (p, n) in [(2u64, 4usize), (3, 3), (5, 2)] {
            let f = FieldCtx::new(p, n).unwrap();
            let mut fiber = vec![0u64; p as usize];
            for a in f.enumerate() {
                fiber[f.trace(&a) as usize] += 1;
            }
            let expected = p.pow(n as u32 - 1);
            assert!(fiber.iter().all(|&c| c == expected), "fibers {fiber:?}");
        }
    }

    #[test]
    fn trace_is_linear_over_the_prime_field() {
        let f8 = FieldCtx::new(2, 3).unwrap();
        let elems: Vec<_> = f8.enumerate().collect();
        for a in &elems {
            for b in &elems {
                let lhs = f8.trace(&f8.add(a, b));
                let rhs = (f8.trace(a) + f8.trace(b)) % 2;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn modulus_is_lexicographically_first_primitive() {
        // oracle: scan every monic cubic over F_2 that precedes the chosen
        // modulus (low-degree-first comparison) and confirm none has x of
        // order 7
        let f8 = FieldCtx::new(2, 3).unwrap();
        let chosen = f8.modulus()[..3].to_vec();
        for idx in 0..8u64 {
            let cand_low = vec![idx >> 2 & 1, idx >> 1 & 1, idx & 1];
            if cand_low < chosen {
                let mut cand = cand_low.clone();
                cand.push(1);
                assert_ne!(
                    x_multiplicative_order(&cand, 2, 8),
                    Some(7),
                    "smaller-lex candidate {cand:?} is primitive"
                );
            }
        }
        // frozen answer: x^3 + x^2 + 1, i.e. low-first coefficients [1,0,1,1]
        assert_eq!(f8.modulus(), &[1, 0, 1, 1]);
    }
}
