//! Dense univariate polynomials over a generic field.
//!
//! A polynomial is a plain `Vec` of coefficients, low degree first, with no
//! trailing zeros (the zero polynomial is the empty vector). All functions
//! take the field context explicitly.

use crate::field::Field;
use num_bigint::BigUint;

pub type Poly<F> = Vec<<F as Field>::Elem>;

pub fn trim<F: Field>(f: &F, p: &mut Poly<F>) {
    while p.last().map_or(false, |c| f.is_zero(c)) {
        p.pop();
    }
}

pub fn normalized<F: Field>(f: &F, mut p: Poly<F>) -> Poly<F> {
    trim(f, &mut p);
    p
}

/// Degree, None for the zero polynomial.
pub fn deg<T>(p: &[T]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Degree as i64 with the zero polynomial at -1, for bounds arithmetic.
pub fn deg_i64<T>(p: &[T]) -> i64 {
    p.len() as i64 - 1
}

pub fn zero<F: Field>() -> Poly<F> {
    Vec::new()
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> Poly<F> {
    if f.is_zero(&c) {
        Vec::new()
    } else {
        vec![c]
    }
}

pub fn monomial<F: Field>(f: &F, c: F::Elem, d: usize) -> Poly<F> {
    if f.is_zero(&c) {
        return Vec::new();
    }
    let mut v = vec![f.zero(); d + 1];
    v[d] = c;
    v
}

pub fn x<F: Field>(f: &F) -> Poly<F> {
    vec![f.zero(), f.one()]
}

pub fn is_zero<T>(p: &[T]) -> bool {
    p.is_empty()
}

pub fn eq<F: Field>(_f: &F, a: &Poly<F>, b: &Poly<F>) -> bool {
    a == b
}

pub fn add<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(f.add(&x, &y));
    }
    trim(f, &mut out);
    out
}

pub fn sub<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(f.sub(&x, &y));
    }
    trim(f, &mut out);
    out
}

pub fn neg<F: Field>(f: &F, a: &Poly<F>) -> Poly<F> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn mul<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &Poly<F>) -> Poly<F> {
    if f.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// Multiply by x^k.
pub fn shift<F: Field>(f: &F, a: &Poly<F>, k: usize) -> Poly<F> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); k];
    out.extend(a.iter().cloned());
    out
}

pub fn lc<F: Field>(f: &F, a: &Poly<F>) -> F::Elem {
    a.last().cloned().unwrap_or_else(|| f.zero())
}

pub fn monic<F: Field>(f: &F, a: &Poly<F>) -> Poly<F> {
    if a.is_empty() {
        return Vec::new();
    }
    let inv = f.inv(&lc(f, a)).unwrap();
    scale(f, &inv, a)
}

/// Quotient and remainder; the divisor may have any nonzero leading coefficient.
pub fn divrem<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lcinv = f.inv(&lc(f, b)).unwrap();
    let mut rem = a.clone();
    trim(f, &mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![f.zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let d = rem.len() - 1 - db;
        let c = f.mul(&lc(f, &rem), &lcinv);
        quo[d] = f.add(&quo[d], &c);
        for i in 0..=db {
            let t = f.mul(&c, &b[i]);
            rem[d + i] = f.sub(&rem[d + i], &t);
        }
        trim(f, &mut rem);
    }
    trim(f, &mut quo);
    (quo, rem)
}

pub fn rem<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    divrem(f, a, b).1
}

/// Exact division; panics if not exact.
pub fn exact_div<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (q, r) = divrem(f, a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Monic gcd.
pub fn gcd<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(f, &a)
    }
}

/// Extended gcd: returns (g, s, t) with g = s a + t b, g monic (or zero).
pub fn egcd<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>, Poly<F>) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = constant(f, f.one());
    let mut s1 = zero::<F>();
    let mut t0 = zero::<F>();
    let mut t1 = constant(f, f.one());
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let ns = sub(f, &s0, &mul(f, &q, &s1));
        let nt = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let c = f.inv(&lc(f, &r0)).unwrap();
    (scale(f, &c, &r0), scale(f, &c, &s0), scale(f, &c, &t0))
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
pub fn inv_mod<F: Field>(f: &F, a: &Poly<F>, m: &Poly<F>) -> Option<Poly<F>> {
    let (g, s, _) = egcd(f, a, m);
    if deg(&g) == Some(0) {
        Some(rem(f, &s, m))
    } else {
        None
    }
}

pub fn eval<F: Field>(f: &F, p: &Poly<F>, x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn derivative<F: Field>(f: &F, p: &Poly<F>) -> Poly<F> {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(f.mul(&f.from_i64(i as i64), c));
    }
    trim(f, &mut out);
    out
}

pub fn mulmod<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>, m: &Poly<F>) -> Poly<F> {
    rem(f, &mul(f, a, b), m)
}

pub fn pow_mod<F: Field>(f: &F, a: &Poly<F>, e: &BigUint, m: &Poly<F>) -> Poly<F> {
    let mut acc = constant(f, f.one());
    let base = rem(f, a, m);
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, &base, m);
        }
    }
    acc
}

/// Substitute q for the variable of p.
pub fn compose<F: Field>(f: &F, p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
    let mut acc = zero::<F>();
    for c in p.iter().rev() {
        acc = mul(f, &acc, q);
        acc = add(f, &acc, &constant(f, c.clone()));
    }
    acc
}

/// Map coefficients into another field.
pub fn map_coeffs<F: Field, G: Field>(
    g: &G,
    p: &Poly<F>,
    mut embed: impl FnMut(&F::Elem) -> G::Elem,
) -> Poly<G> {
    let mut out: Poly<G> = p.iter().map(|c| embed(c)).collect();
    trim(g, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use crate::field::Field;
    use crate::fq::Fq;

    #[test]
    fn divrem_gcd() {
        let f = Fq::new(7, 1).unwrap();
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = vec![f.from_i64(-1), f.zero(), f.one()];
        let b = vec![f.from_i64(1), f.one()];
        let (q, r) = divrem(&f, &a, &b);
        assert!(r.is_empty());
        assert_eq!(q, vec![f.from_i64(-1), f.one()]);
        let g = gcd(&f, &a, &b);
        assert_eq!(g, vec![f.from_i64(1), f.one()]);
    }

    #[test]
    fn egcd_inverse() {
        let f = Fq::new(5, 1).unwrap();
        let m = vec![f.from_i64(2), f.zero(), f.one()]; // x^2 + 2
        let a = vec![f.from_i64(1), f.one()]; // x + 1
        let inv = inv_mod(&f, &a, &m).unwrap();
        let prod = mulmod(&f, &a, &inv, &m);
        assert_eq!(prod, constant(&f, f.one()));
    }
}
