//! Truncated unramified p-adic rings Z_{p^s}/p^m.
//!
//! The ring is presented as (Z/p^m)[z]/(W) where W is the deterministic
//! degree-s modulus over F_p lifted coefficient-wise with coefficients in
//! [0, p). This fixes the isomorphism with the completion once and for all,
//! so serialized digits are portable.

use crate::fq::{deterministic_modulus_fp, Fq};
use crate::field::Field;
#[allow(unused_imports)]
use crate::hensel::LocalRing;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Debug)]
pub struct ZqRing {
    pub p: u64,
    pub s: usize,
    pub m: usize,
    /// p^m
    pub modulus_int: BigInt,
    /// Monic degree-s residue modulus, coefficients in [0, p), length s+1.
    pub residue_modulus: Vec<BigInt>,
}

/// An element: s coordinates in [0, p^m), low degree first.
pub type ZqElem = Vec<BigInt>;

impl ZqRing {
    pub fn new(p: u64, s: usize, m: usize) -> Self {
        assert!(s >= 1 && m >= 1);
        let w = deterministic_modulus_fp(p, s);
        let residue_modulus: Vec<BigInt> = w.iter().map(|&c| BigInt::from(c)).collect();
        ZqRing {
            p,
            s,
            m,
            modulus_int: BigInt::from(p).pow(m as u32),
            residue_modulus,
        }
    }

    /// The residue field F_{p^s}, with the matching modulus.
    pub fn residue_field(&self) -> Fq {
        Fq::new(self.p, self.s).unwrap()
    }

    pub fn from_coords(&self, mut v: Vec<BigInt>) -> ZqElem {
        v.resize(self.s, BigInt::zero());
        v.iter().map(|c| c.mod_floor(&self.modulus_int)).collect()
    }

    pub fn from_int(&self, n: &BigInt) -> ZqElem {
        let mut v = vec![BigInt::zero(); self.s];
        v[0] = n.mod_floor(&self.modulus_int);
        v
    }

    /// Reduce an element to the residue field.
    pub fn to_residue(&self, a: &ZqElem) -> Vec<u64> {
        let p = BigInt::from(self.p);
        a.iter()
            .map(|c| {
                c.mod_floor(&p)
                    .to_u64_digits()
                    .1
                    .first()
                    .copied()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Lift a residue-field element by reading its coordinates as integers.
    pub fn lift_residue(&self, a: &[u64]) -> ZqElem {
        assert_eq!(a.len(), self.s);
        a.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Base-p digits of each coordinate, digit-major layout helpers live in
    /// the serializer; here we expose coordinate k digit j.
    pub fn coord_digits(&self, a: &ZqElem) -> Vec<Vec<u64>> {
        let p = BigInt::from(self.p);
        a.iter()
            .map(|c| {
                let mut digits = Vec::with_capacity(self.m);
                let mut rest = c.clone();
                for _ in 0..self.m {
                    let (q, r) = rest.div_rem(&p);
                    digits.push(r.to_u64_digits().1.first().copied().unwrap_or(0));
                    rest = q;
                }
                digits
            })
            .collect()
    }

    pub fn from_coord_digits(&self, digits: &[Vec<u64>]) -> ZqElem {
        assert_eq!(digits.len(), self.s);
        let p = BigInt::from(self.p);
        digits
            .iter()
            .map(|d| {
                let mut acc = BigInt::zero();
                for &x in d.iter().rev() {
                    acc = acc * &p + BigInt::from(x);
                }
                acc.mod_floor(&self.modulus_int)
            })
            .collect()
    }

    fn poly_reduce(&self, v: Vec<BigInt>) -> ZqElem {
        // reduce modulo (residue_modulus, p^m)
        let mut v: Vec<BigInt> = v
            .into_iter()
            .map(|c| c.mod_floor(&self.modulus_int))
            .collect();
        while v.len() > self.s {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let d = v.len() - self.s;
            for i in 0..self.s {
                let t = (&top * &self.residue_modulus[i]).mod_floor(&self.modulus_int);
                v[d + i] = (&v[d + i] - t).mod_floor(&self.modulus_int);
            }
        }
        v.resize(self.s, BigInt::zero());
        v
    }
}

impl LocalRing for ZqRing {
    type El = ZqElem;

    fn precision(&self) -> usize {
        self.m
    }

    fn with_precision(&self, m: usize) -> Self {
        ZqRing::new(self.p, self.s, m)
    }

    fn zero(&self) -> ZqElem {
        vec![BigInt::zero(); self.s]
    }

    fn one(&self) -> ZqElem {
        let mut v = vec![BigInt::zero(); self.s];
        v[0] = BigInt::one();
        v
    }

    fn add(&self, a: &ZqElem, b: &ZqElem) -> ZqElem {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + y).mod_floor(&self.modulus_int))
            .collect()
    }

    fn sub(&self, a: &ZqElem, b: &ZqElem) -> ZqElem {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).mod_floor(&self.modulus_int))
            .collect()
    }

    fn mul(&self, a: &ZqElem, b: &ZqElem) -> ZqElem {
        let mut prod = vec![BigInt::zero(); 2 * self.s - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.poly_reduce(prod)
    }

    fn is_zero(&self, a: &ZqElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    fn is_unit(&self, a: &ZqElem) -> bool {
        self.to_residue(a).iter().any(|&c| c != 0)
    }

    fn invert(&self, a: &ZqElem) -> Option<ZqElem> {
        if !self.is_unit(a) {
            return None;
        }
        // invert in the residue field, then Newton-lift x -> x(2 - a x)
        let fq = self.residue_field();
        let res = fq.inv(&self.to_residue(a)).unwrap();
        let mut x = self.lift_residue(&res);
        let two = self.add(&self.one(), &self.one());
        let mut correct = 1usize;
        while correct < self.m {
            let ax = self.mul(a, &x);
            let corr = self.sub(&two, &ax);
            x = self.mul(&x, &corr);
            correct *= 2;
        }
        Some(x)
    }

    fn reduce_to(&self, a: &ZqElem, m: usize) -> ZqElem {
        assert!(m <= self.m);
        let pm = BigInt::from(self.p).pow(m as u32);
        a.iter().map(|c| c.mod_floor(&pm)).collect()
    }

    fn lift_into(&self, a: &ZqElem) -> ZqElem {
        a.iter().map(|c| c.mod_floor(&self.modulus_int)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_is_z_p_when_s_1() {
        let r = ZqRing::new(7, 1, 2);
        let a = r.from_int(&BigInt::from(10));
        let sq = r.mul(&a, &a);
        assert_eq!(sq, r.from_int(&BigInt::from(2))); // 100 = 2 mod 49
    }

    #[test]
    fn inverse_in_galois_ring() {
        let r = ZqRing::new(3, 2, 4);
        // z is a unit iff its residue is nonzero
        let mut z = r.zero();
        z[1] = BigInt::one();
        let inv = r.invert(&z).unwrap();
        assert_eq!(r.mul(&z, &inv), r.one());
        // p = 3 is not a unit
        assert!(!r.is_unit(&r.from_int(&BigInt::from(3))));
    }

    #[test]
    fn digit_roundtrip() {
        let r = ZqRing::new(5, 2, 3);
        let a = r.from_coords(vec![BigInt::from(113), BigInt::from(42)]);
        let d = r.coord_digits(&a);
        assert_eq!(r.from_coord_digits(&d), a);
    }
}
