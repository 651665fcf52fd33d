//! The finite field F_{p^e} with a deterministically chosen modulus.
//!
//! The modulus is the first monic irreducible of degree e over F_p in the
//! canonical enumeration: coefficient vectors (c_0, ..., c_{e-1}) read as
//! base-p digits of a counter, constant coefficient least significant.
//! Serialized objects built on top are therefore reproducible bit-exactly.

use crate::field::{Field, FiniteField};
use crate::intutil::{is_prime_u64, mul_mod_u64};
use crate::ArithError;
use num_bigint::BigUint;
use num_traits::One;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fq {
    p: u64,
    e: usize,
    /// Monic modulus, length e+1, low-to-high coefficients over F_p.
    modulus: Vec<u64>,
}

impl Fq {
    /// The deterministic F_{p^e}. Same (p, e) always yields the same modulus.
    pub fn new(p: u64, e: usize) -> Result<Fq, ArithError> {
        if !is_prime_u64(p) {
            return Err(ArithError::NotPrime(p));
        }
        assert!(e >= 1, "extension degree must be >= 1");
        let modulus = deterministic_modulus_fp(p, e);
        Ok(Fq { p, e, modulus })
    }

    /// Construct with an explicit monic modulus (used when deserializing).
    /// The modulus must be irreducible; this is checked.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Fq, ArithError> {
        if !is_prime_u64(p) {
            return Err(ArithError::NotPrime(p));
        }
        let e = modulus.len() - 1;
        assert!(e >= 1 && modulus[e] == 1, "modulus must be monic");
        if !fp_poly_is_irreducible(p, &modulus) {
            return Err(ArithError::Unsupported("reducible modulus".into()));
        }
        Ok(Fq { p, e, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The class of x, a generator of the ring over F_p.
    pub fn gen(&self) -> Vec<u64> {
        let mut v = vec![0; self.e];
        if self.e == 1 {
            // x reduces to -c_0 mod p
            v[0] = (self.p - self.modulus[0] % self.p) % self.p;
        } else {
            v[1] = 1;
        }
        v
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        // reduce a coefficient vector (any length) modulo the modulus
        while v.len() > self.e {
            let top = v.pop().unwrap() % self.p;
            if top != 0 {
                let deg = v.len() - self.e;
                for i in 0..self.e {
                    let sub = mul_mod_u64(top, self.modulus[i], self.p);
                    let idx = deg + i;
                    v[idx] = (v[idx] + self.p - sub) % self.p;
                }
            }
        }
        v.resize(self.e, 0);
        v
    }
}

impl Field for Fq {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.e]
    }

    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.e];
        v[0] = 1 % self.p;
        v
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y % self.p) % self.p)
            .collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|&x| (self.p - x % self.p) % self.p).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        if self.e == 1 {
            return vec![mul_mod_u64(a[0], b[0], self.p)];
        }
        let mut prod = vec![0u64; 2 * self.e - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod_u64(x, y, self.p)) % self.p;
            }
        }
        self.reduce(prod)
    }

    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        // a^(q-2) = a^{-1}
        let q = self.order();
        Some(self.pow_biguint(a, &(q - BigUint::from(2u32))))
    }

    fn from_i64(&self, n: i64) -> Vec<u64> {
        let p = self.p as i64;
        let r = ((n % p) + p) % p;
        let mut v = vec![0; self.e];
        v[0] = r as u64;
        v
    }
}

impl FiniteField for Fq {
    fn characteristic(&self) -> u64 {
        self.p
    }

    fn degree_over_prime(&self) -> usize {
        self.e
    }

    fn to_prime_coords(&self, a: &Vec<u64>) -> Vec<u64> {
        a.clone()
    }

    fn from_prime_coords(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.e);
        coords.iter().map(|&c| c % self.p).collect()
    }
}

/// First monic irreducible of degree e over F_p in the canonical enumeration.
pub fn deterministic_modulus_fp(p: u64, e: usize) -> Vec<u64> {
    let total = BigUint::from(p).pow(e as u32);
    let mut idx = BigUint::from(0u32);
    while idx < total {
        let mut cand = Vec::with_capacity(e + 1);
        let mut rest = idx.clone();
        let pb = BigUint::from(p);
        use num_integer::Integer;
        for _ in 0..e {
            let (q, r) = rest.div_rem(&pb);
            cand.push(r.to_u64_digits().first().copied().unwrap_or(0));
            rest = q;
        }
        cand.push(1);
        if fp_poly_is_irreducible(p, &cand) {
            return cand;
        }
        idx += BigUint::one();
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

// --- raw F_p[x] helpers used only for the modulus scan ---

fn fpp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fpp_rem(p: u64, mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
    // b monic
    let db = b.len() - 1;
    while a.len() > db {
        let top = *a.last().unwrap() % p;
        let deg = a.len() - 1 - db;
        if top != 0 {
            for i in 0..=db {
                let sub = mul_mod_u64(top, b[i], p);
                a[deg + i] = (a[deg + i] + p - sub) % p;
            }
        }
        fpp_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn fpp_mulmod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod_u64(x, y, p)) % p;
        }
    }
    fpp_trim(&mut prod);
    if prod.is_empty() {
        return prod;
    }
    fpp_rem(p, prod, m)
}

fn fpp_powmod(p: u64, a: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = if acc.is_empty() || base.is_empty() {
                vec![]
            } else {
                fpp_mulmod(p, &acc, &base, m)
            };
        }
        base = if base.is_empty() {
            vec![]
        } else {
            fpp_mulmod(p, &base, &base, m)
        };
        e >>= 1;
    }
    acc
}

fn fpp_gcd(p: u64, mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
    fpp_trim(&mut a);
    fpp_trim(&mut b);
    while !b.is_empty() {
        // make b monic for fpp_rem
        let lc = *b.last().unwrap();
        let lcinv = crate::intutil::pow_mod_u64(lc, p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| mul_mod_u64(c, lcinv, p)).collect();
        let r = fpp_rem(p, a, &monic);
        a = b;
        b = r;
        fpp_trim(&mut b);
    }
    a
}

/// Irreducibility of a monic polynomial over F_p: x^{p^e} = x mod f and
/// gcd(x^{p^{e/t}} - x, f) = 1 for every prime t dividing e.
pub fn fp_poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let e = f.len() - 1;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // frob[j] = x^{p^{j+1}} mod f
    let mut cur = x.clone();
    let mut frob_pows = Vec::with_capacity(e);
    for _ in 0..e {
        cur = fpp_powmod(p, &cur, p, f);
        frob_pows.push(cur.clone());
    }
    // x^{p^e} == x
    let mut top = frob_pows[e - 1].clone();
    fpp_trim(&mut top);
    let mut xm = x.clone();
    fpp_trim(&mut xm);
    if top != xm {
        return false;
    }
    let mut t = e;
    let mut primes_of_e = Vec::new();
    let mut d = 2;
    while d * d <= t {
        if t % d == 0 {
            primes_of_e.push(d);
            while t % d == 0 {
                t /= d;
            }
        }
        d += 1;
    }
    if t > 1 {
        primes_of_e.push(t);
    }
    for t in primes_of_e {
        let j = e / t;
        // gcd(x^{p^j} - x, f) must be 1
        let mut diff = frob_pows[j - 1].clone();
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        let g = fpp_gcd(p, f.to_vec(), diff);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_moduli() {
        // F_2: modulus is x itself
        let f2 = Fq::new(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        // F_4: x^2 + x + 1 is the only irreducible quadratic over F_2
        let f4 = Fq::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        // F_9: scan order finds x^2 + 1
        let f9 = Fq::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(Fq::new(6, 1).unwrap_err(), ArithError::NotPrime(6));
    }

    #[test]
    fn arithmetic_f9() {
        let f9 = Fq::new(3, 2).unwrap();
        let i = f9.gen(); // i^2 = -1
        let sq = f9.mul(&i, &i);
        assert_eq!(sq, f9.from_i64(-1));
        let inv = f9.inv(&i).unwrap();
        assert_eq!(f9.mul(&i, &inv), f9.one());
    }

    #[test]
    fn field_axioms_sampled() {
        let f = Fq::new(5, 3).unwrap();
        let q: Vec<Vec<u64>> = (0u32..20)
            .map(|k| f.elem_from_index(&BigUint::from(k * 7 + 3)))
            .collect();
        for a in &q {
            for b in &q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in &q {
                    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                }
            }
        }
    }
}
