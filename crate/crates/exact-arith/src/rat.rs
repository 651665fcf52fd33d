//! Arbitrary-precision rationals as a `Field` instance.
//!
//! `BigRat` is `num_rational::BigRational`, which already maintains the
//! lowest-terms/positive-denominator invariants this crate relies on.

use crate::field::Field;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type BigRat = BigRational;

/// The rational field as a context object.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct QField;

impl Field for QField {
    type Elem = BigRat;

    fn zero(&self) -> BigRat {
        BigRat::zero()
    }

    fn one(&self) -> BigRat {
        BigRat::one()
    }

    fn is_zero(&self, a: &BigRat) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a + b
    }

    fn sub(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a - b
    }

    fn neg(&self, a: &BigRat) -> BigRat {
        -a
    }

    fn mul(&self, a: &BigRat, b: &BigRat) -> BigRat {
        a * b
    }

    fn inv(&self, a: &BigRat) -> Option<BigRat> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> BigRat {
        BigRat::from(BigInt::from(n))
    }
}

pub fn rat_from_int(n: &BigInt) -> BigRat {
    BigRat::from(n.clone())
}

/// Exact integer value if the rational is integral.
pub fn rat_to_int(r: &BigRat) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

pub fn rat_abs(r: &BigRat) -> BigRat {
    if r.is_negative() {
        -r
    } else {
        r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_invariant() {
        let r = BigRat::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }
}
