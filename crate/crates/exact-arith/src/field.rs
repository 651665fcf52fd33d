//! Field abstraction shared by the exact linear algebra and polynomial code.
//!
//! A `Field` is a context object; elements carry no back-reference. This keeps
//! element types plain data (`Vec<u64>`, `BigRational`, ...) and lets towers of
//! extensions nest without lifetimes.

use num_bigint::BigUint;

pub trait Field: Clone + PartialEq + std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// None iff `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of a rational integer under the canonical ring map.
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b).expect("division by zero"))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow_biguint(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn pow_u64(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow_biguint(a, &BigUint::from(e))
    }
}

/// Finite fields additionally expose their prime structure, which the
/// factorization and Frobenius-based algorithms need, plus a canonical
/// enumeration used for deterministic modulus scans.
pub trait FiniteField: Field {
    fn characteristic(&self) -> u64;
    /// Degree over the prime field F_p.
    fn degree_over_prime(&self) -> usize;
    /// Cardinality p^degree.
    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree_over_prime() as u32)
    }
    /// Coordinates over F_p in the canonical basis, length `degree_over_prime`.
    fn to_prime_coords(&self, a: &Self::Elem) -> Vec<u64>;
    fn from_prime_coords(&self, coords: &[u64]) -> Self::Elem;

    /// The element whose prime coordinates are the base-p digits of `idx`.
    /// Indexing elements this way fixes the deterministic scan order.
    fn elem_from_index(&self, idx: &BigUint) -> Self::Elem {
        let p = BigUint::from(self.characteristic());
        let mut digits = Vec::with_capacity(self.degree_over_prime());
        let mut rest = idx.clone();
        use num_integer::Integer;
        for _ in 0..self.degree_over_prime() {
            let (q, r) = rest.div_rem(&p);
            let mut limb = 0u64;
            for (i, d) in r.to_u64_digits().iter().enumerate() {
                if i == 0 {
                    limb = *d;
                }
            }
            digits.push(limb);
            rest = q;
        }
        self.from_prime_coords(&digits)
    }

    /// Position of the element in the canonical enumeration.
    fn elem_index(&self, a: &Self::Elem) -> BigUint {
        let p = BigUint::from(self.characteristic());
        let mut acc = BigUint::from(0u32);
        for &c in self.to_prime_coords(a).iter().rev() {
            acc = acc * &p + BigUint::from(c);
        }
        acc
    }

    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow_u64(a, self.characteristic())
    }
}

/// Sum of elements.
pub fn fsum<F: Field>(f: &F, items: impl IntoIterator<Item = F::Elem>) -> F::Elem {
    let mut acc = f.zero();
    for it in items {
        acc = f.add(&acc, &it);
    }
    acc
}
