//! The coefficient abstraction every higher layer is generic over.
//!
//! A [`Scalar`] is an element of one of the exact coefficient universes
//! (ℚ, ℚ(s15), ℚ(s15,s7), 𝔽_p, ℤ/p^k). Universes like 𝔽_p carry their
//! modulus at runtime, so additive/multiplicative identities are derived
//! from an existing element (`zero_like`, `one_like`) rather than from a
//! nullary constructor. Arithmetic is exposed as associated functions to
//! keep call sites unambiguous next to `std::ops`.

use std::fmt;

pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(a: &Self, b: &Self) -> Self;
    fn sub(a: &Self, b: &Self) -> Self;
    fn mul(a: &Self, b: &Self) -> Self;
    fn neg(a: &Self) -> Self;
    /// Multiplicative inverse, `None` when `a` is not a unit.
    fn inv(a: &Self) -> Option<Self>;

    /// The image of a small integer in the universe of `self`.
    fn from_i64(&self, n: i64) -> Self;

    /// True when `Display` output is a sum that needs wrapping inside a term.
    fn display_is_sum(&self) -> bool {
        false
    }
}

/// Marker for scalars where every nonzero element is invertible.
pub trait FieldScalar: Scalar {}

pub fn pow_u<K: Scalar>(base: &K, mut e: u64) -> K {
    let mut acc = base.one_like();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = K::mul(&acc, &b);
        }
        e >>= 1;
        if e > 0 {
            b = K::mul(&b, &b);
        }
    }
    acc
}
