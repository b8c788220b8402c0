//! The Galois ring GR(4,n) and its Teichmüller coordinates.
//!
//! GR(4,n) = Z4[x]/(h(x)) where h is the Hensel lift of the lexicographically
//! smallest primitive polynomial over F_2 of degree n. The residue ξ of x has
//! multiplicative order 2^n − 1, and the Teichmüller set
//! T = {0} ∪ {ξ^j : 0 ≤ j < 2^n − 1} is a transversal of the mod-2 residues:
//! every ring element is uniquely a + 2b with a, b ∈ T. That decomposition
//! drives the Frobenius φ(a + 2b) = a² + 2b² and the ring trace.

use crate::error::{Error, Result};
use crate::tol::DESK_SCALE_LIMIT;

use super::field::{is_one, poly_mulmod, smallest_primitive_poly};

/// Context for GR(4,n): modulus, Teichmüller set, and residue lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCtx {
    n: usize,
    size: u64,
    modulus: Vec<u64>,
    teichmuller: Vec<RingElement>,
    /// mod-2 residue index (base-2, low-degree-first) -> position in `teichmuller`
    teich_by_residue: Vec<usize>,
}

/// Element of GR(4,n): length-n coefficient list with entries in [0,4),
/// low-degree-first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    coeffs: Vec<u64>,
}

impl RingElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

fn residue_index(coeffs: &[u64]) -> usize {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| ((c % 2) as usize) << i)
        .sum()
}

/// Hensel lift by exhaustive search: among the 2^n monic degree-n lifts of
/// the F_2 polynomial `h2` to Z4, exactly one gives the residue of x
/// multiplicative order 2^n − 1. Panics if the count differs, since that
/// would falsify the construction.
fn hensel_lift(h2: &[u64], n: usize) -> Vec<u64> {
    let group_order = (1u64 << n) - 1;
    let mut found: Option<Vec<u64>> = None;
    for mask in 0u64..(1 << n) {
        let mut cand: Vec<u64> = (0..n)
            .map(|i| (h2[i] + 2 * ((mask >> i) & 1)) % 4)
            .collect();
        cand.push(1);
        // x as an element of Z4[x]/(cand)
        let mut x = vec![0u64; n];
        if n == 1 {
            x[0] = (4 - cand[0] % 4) % 4;
        } else {
            x[1] = 1;
        }
        let mut acc = vec![0u64; n];
        acc[0] = 1;
        let mut base = x.clone();
        let mut e = group_order;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, &cand, 4);
            }
            base = poly_mulmod(&base, &base, &cand, 4);
            e >>= 1;
        }
        if is_one(&acc) {
            assert!(found.is_none(), "Hensel lift must be unique for degree {n}");
            found = Some(cand);
        }
    }
    found.expect("a Hensel lift exists for every primitive polynomial")
}

impl RingCtx {
    /// Canonical context for GR(4,n) under the default desk-scale cap.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, DESK_SCALE_LIMIT)
    }

    /// As [`RingCtx::new`] with an explicit cap on 2^n.
    pub fn with_limit(n: usize, limit: u64) -> Result<Self> {
        assert!(n >= 1, "degree must be at least 1");
        let half_size = 1u64.checked_shl(n as u32).unwrap_or(u64::MAX);
        if half_size > limit {
            return Err(Error::SizeLimit { size: half_size, limit });
        }
        let h2 = smallest_primitive_poly(2, n, half_size);
        let modulus = hensel_lift(&h2, n);
        let size = half_size * half_size; // 4^n

        let mut ctx = RingCtx {
            n,
            size,
            modulus,
            teichmuller: Vec::new(),
            teich_by_residue: vec![usize::MAX; half_size as usize],
        };
        // T = {0} ∪ {ξ^j}, in that order; verify the transversal property
        //  and ξ^(2^n − 1) = 1 as we go.
        let xi = ctx.xi();
        let mut t = vec![ctx.zero(), ctx.one()];
        for _ in 1..half_size - 1 {
            let next = ctx.mul(t.last().unwrap(), &xi);
            t.push(next);
        }
        assert_eq!(ctx.mul(t.last().unwrap(), &xi), ctx.one(), "ξ^(2^n−1) must be 1");
        for (pos, elem) in t.iter().enumerate() {
            let r = residue_index(&elem.coeffs);
            assert_eq!(
                ctx.teich_by_residue[r],
                usize::MAX,
                "Teichmüller set must be a mod-2 transversal"
            );
            ctx.teich_by_residue[r] = pos;
        }
        ctx.teichmuller = t;
        Ok(ctx)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Ring size 4^n.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Monic modulus over Z4, length n+1, low-degree-first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The Teichmüller set, in the fixed order [0, ξ⁰, ξ¹, …, ξ^(2^n−2)].
    pub fn teichmuller(&self) -> &[RingElement] {
        &self.teichmuller
    }

    pub fn zero(&self) -> RingElement {
        RingElement { coeffs: vec![0; self.n] }
    }

    pub fn one(&self) -> RingElement {
        let mut coeffs = vec![0; self.n];
        coeffs[0] = 1;
        RingElement { coeffs }
    }

    /// The residue ξ of x.
    pub fn xi(&self) -> RingElement {
        let mut coeffs = vec![0; self.n];
        if self.n == 1 {
            coeffs[0] = (4 - self.modulus[0] % 4) % 4;
        } else {
            coeffs[1] = 1;
        }
        RingElement { coeffs }
    }

    /// Element from an explicit coefficient list (entries reduced mod 4).
    pub fn element(&self, coeffs: &[u64]) -> Result<RingElement> {
        if coeffs.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: coeffs.len() });
        }
        Ok(RingElement { coeffs: coeffs.iter().map(|&c| c % 4).collect() })
    }

    /// The i-th element in the fixed enumeration: base-4 digits of the
    /// index, low-degree-first.
    pub fn element_from_index(&self, index: u64) -> RingElement {
        assert!(index < self.size, "index {index} out of range for ring of size {}", self.size);
        let mut coeffs = vec![0u64; self.n];
        let mut rest = index;
        for c in coeffs.iter_mut() {
            *c = rest % 4;
            rest /= 4;
        }
        RingElement { coeffs }
    }

    /// All ring elements in enumeration order.
    pub fn enumerate(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size).map(move |i| self.element_from_index(i))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % 4)
            .collect();
        RingElement { coeffs }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + 4 - y) % 4)
            .collect();
        RingElement { coeffs }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement { coeffs: poly_mulmod(&a.coeffs, &b.coeffs, &self.modulus, 4) }
    }

    /// Scalar multiple, k in Z4.
    pub fn scale(&self, k: u64, a: &RingElement) -> RingElement {
        RingElement { coeffs: a.coeffs.iter().map(|&c| c * (k % 4) % 4).collect() }
    }

    pub fn pow(&self, a: &RingElement, mut e: u64) -> RingElement {
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

    /// The unique (a, b) with a, b Teichmüller and r = a + 2b.
    ///
    /// a is the Teichmüller element sharing r's mod-2 residue; then
    /// r − a = 2b determines b's residue, hence b.
    pub fn two_adic_decompose(&self, r: &RingElement) -> (RingElement, RingElement) {
        let a = self.teichmuller[self.teich_by_residue[residue_index(&r.coeffs)]].clone();
        let diff = self.sub(r, &a);
        debug_assert!(diff.coeffs.iter().all(|&c| c % 2 == 0));
        let b_residue: usize = diff
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| ((c / 2) as usize) << i)
            .sum();
        let b = self.teichmuller[self.teich_by_residue[b_residue]].clone();
        (a, b)
    }

    /// Frobenius φ(a + 2b) = a² + 2b² on the 2-adic decomposition.
    pub fn frobenius(&self, r: &RingElement) -> RingElement {
        let (a, b) = self.two_adic_decompose(r);
        let a2 = self.mul(&a, &a);
        let b2 = self.mul(&b, &b);
        self.add(&a2, &self.scale(2, &b2))
    }

    /// Ring trace tr: GR(4,n) → Z4, the sum of the n Frobenius iterates.
    /// Returned as an integer in [0,4).
    pub fn trace(&self, r: &RingElement) -> u64 {
        let mut iterate = r.clone();
        let mut acc = r.clone();
        for _ in 1..self.n {
            iterate = self.frobenius(&iterate);
            acc = self.add(&acc, &iterate);
        }
        assert!(
            acc.coeffs[1..].iter().all(|&c| c == 0),
            "ring trace must land in Z4"
        );
        acc.coeffs[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gr41_is_z4_with_trivial_teichmuller() {
        let r = RingCtx::new(1).unwrap();
        assert_eq!(r.modulus(), &[3, 1]); // x + 3, i.e. x ≡ 1
        let t: Vec<_> = r.teichmuller().iter().map(|e| e.coeffs()[0]).collect();
        assert_eq!(t, vec![0, 1]);
        // trace is the identity on Z4
        for v in 0..4 {
            assert_eq!(r.trace(&r.element(&[v]).unwrap()), v);
        }
    }

    #[test]
    fn gr42_modulus_and_teichmuller_match_direct_reduction() {
        let r = RingCtx::new(2).unwrap();
        assert_eq!(r.modulus(), &[1, 1, 1]); // x² + x + 1 lifts to itself
        let t = r.teichmuller();
        assert_eq!(t.len(), 4);
        assert_eq!(t[0].coeffs(), &[0, 0]);
        assert_eq!(t[1].coeffs(), &[1, 0]);
        assert_eq!(t[2].coeffs(), &[0, 1]); // ξ = x
        assert_eq!(t[3].coeffs(), &[3, 3]); // ξ² = 3x + 3
        // oracle: ξ³ = 1 by direct reduction
        let xi = r.xi();
        assert_eq!(r.pow(&xi, 3), r.one());
    }

    #[test]
    fn gr42_trace_table() {
        // frozen via Frobenius-sum brute force: tr(0)=0, tr(1)=2,
        // tr(ξ)=3, tr(ξ²)=3
        let r = RingCtx::new(2).unwrap();
        let t = r.teichmuller();
        let traces: Vec<_> = t.iter().map(|e| r.trace(e)).collect();
        assert_eq!(traces, vec![0, 2, 3, 3]);
    }

    #[test]
    fn gr43_teichmuller_has_eight_members_of_order_seven() {
        let r = RingCtx::new(3).unwrap();
        let t = r.teichmuller();
        assert_eq!(t.len(), 8);
        for e in &t[1..] {
            assert_eq!(r.pow(e, 7), r.one(), "t^7 must equal 1 for {e:?}");
        }
    }

    #[test]
    fn teichmuller_is_multiplicatively_closed() {
        for n in 1..=4 {
            let r = RingCtx::new(n).unwrap();
            let t = r.teichmuller();
            for a in t {
                for b in t {
                    let prod = r.mul(a, b);
                    assert!(t.contains(&prod), "GR(4,{n}): {a:?}·{b:?} left T");
                }
            }
        }
    }

    #[test]
    fn two_adic_decomposition_round_trips_exhaustively() {
        for n in 1..=3 {
            let r = RingCtx::new(n).unwrap();
            let t = r.teichmuller();
            for elem in r.enumerate() {
                let (a, b) = r.two_adic_decompose(&elem);
                assert!(t.contains(&a) && t.contains(&b));
                let recomposed = r.add(&a, &r.scale(2, &b));
                assert_eq!(recomposed, elem);
            }
        }
    }

    #[test]
    fn two_adic_examples_from_small_rings() {
        // GR(4,1): 3 = 1 + 2·1, confirmed by exhaustive search over {0,1}²
        let r1 = RingCtx::new(1).unwrap();
        let three = r1.element(&[3]).unwrap();
        let (a, b) = r1.two_adic_decompose(&three);
        assert_eq!((a.coeffs()[0], b.coeffs()[0]), (1, 1));
        let mut solutions = 0;
        for &ca in &[0u64, 1] {
            for &cb in &[0u64, 1] {
                if (ca + 2 * cb) % 4 == 3 {
                    solutions += 1;
                    assert_eq!((ca, cb), (1, 1));
                }
            }
        }
        assert_eq!(solutions, 1);

        // GR(4,2): 2ξ is pure 2-part, so (0, ξ)
        let r2 = RingCtx::new(2).unwrap();
        let xi = r2.xi();
        let (a, b) = r2.two_adic_decompose(&r2.scale(2, &xi));
        assert!(a.is_zero());
        assert_eq!(b, xi);

        // zero decomposes to (0, 0)
        let (a, b) = r2.two_adic_decompose(&r2.zero());
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn trace_is_additive() {
        let r = RingCtx::new(2).unwrap();
        let elems: Vec<_> = r.enumerate().collect();
        for a in &elems {
            for b in &elems {
                let lhs = r.trace(&r.add(a, b));
                let rhs = (r.trace(a) + r.trace(b)) % 4;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn modulus_reduces_to_primitive_f2_polynomial() {
        for n in 1..=4 {
            let r = RingCtx::new(n).unwrap();
            let h2: Vec<u64> = r.modulus().iter().map(|&c| c % 2).collect();
            let expected = smallest_primitive_poly(2, n, 1 << n);
            assert_eq!(h2, expected, "GR(4,{n}) modulus must lift the F_2 choice");
        }
    }

    #[test]
    fn oversized_ring_is_rejected() {
        assert!(matches!(RingCtx::new(13), Err(Error::SizeLimit { .. })));
        assert!(RingCtx::with_limit(13, 1 << 13).is_ok());
    }
}
