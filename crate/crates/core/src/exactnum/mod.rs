//! Exact coefficient arithmetic: ℚ, the quadratic field ℚ(s15), the
//! biquadratic field ℚ(s15,s7), prime fields, prime-power residue rings,
//! CRT and rational reconstruction.
//!
//! Symbol conventions: `s15` denotes i√15 (s15² = −15), `s7` denotes i√7
//! (s7² = −7) and `s105 := s15·s7` (s105² = 105, so s105 = −√105).

mod biquad;
mod fp;
mod fpk;
mod primes;
mod quad;
mod recon;
mod value;

pub use biquad::BiquadValue;
pub use fp::PrimeFieldValue;
pub use fpk::PrimePowerValue;
pub use primes::{find_suitable_prime, is_prime, sqrt_mod, SuitablePrime};
pub use quad::QuadValue;
pub use recon::{crt_combine, crt_pair, rational_reconstruct, wang_bound};
pub use value::NumberValue;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, the base universe.
pub type Rational = BigRational;

use crate::scalar::{FieldScalar, Scalar};

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
    fn one_like(&self) -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn add(a: &Self, b: &Self) -> Self {
        a + b
    }
    fn sub(a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(a: &Self) -> Self {
        -a
    }
    fn inv(a: &Self) -> Option<Self> {
        if Scalar::is_zero(a) {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl FieldScalar for Rational {}

pub fn rat_i64(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
