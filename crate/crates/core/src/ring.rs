//! The coefficient-ring interface Witt vectors are generic over.

use std::fmt::Debug;

/// Exact commutative ring of characteristic p whose elements have a
/// canonical reduced form. Everything downstream (Witt vectors, sections,
/// skew polynomials) works through this interface.
pub trait CoeffRing: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn char_p(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Canonical image of an integer (reduction mod p).
    fn from_u64(&self, c: u64) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut out = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul(&out, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        out
    }

    /// The p-th power endomorphism.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.char_p())
    }

    /// Short tag used in JSON encodings and mismatch errors.
    fn ring_tag(&self) -> String;

    fn render(&self, a: &Self::Elem) -> String;
}

/// Rings where the Frobenius is bijective, so `F^{-1}` makes sense.
pub trait PerfectRing: CoeffRing {
    fn frobenius_inv(&self, a: &Self::Elem) -> Self::Elem;

    fn frobenius_pow(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        let mut out = a.clone();
        if k >= 0 {
            for _ in 0..k {
                out = self.frobenius(&out);
            }
        } else {
            for _ in 0..(-k) {
                out = self.frobenius_inv(&out);
            }
        }
        out
    }
}
