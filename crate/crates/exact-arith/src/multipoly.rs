//! Sparse multivariate polynomials over an abstract coefficient ring.
//!
//! Terms are kept in a BTreeMap from exponent tuple to coefficient with no
//! stored zeros, so equality and serialization are canonical. Evaluation goes
//! through the `EvalAlgebra` trait, which lets one polynomial be evaluated in
//! a function-field order, a power-series ring, a p-adic ring or a residue
//! field without rewriting coefficients.

use std::collections::BTreeMap;

/// Minimal commutative ring interface for coefficients.
pub trait CoefRing: Clone {
    type C: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::C;
    fn one(&self) -> Self::C;
    fn is_zero(&self, c: &Self::C) -> bool;
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn neg(&self, a: &Self::C) -> Self::C;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    /// Multiplication by a small non-negative integer (for derivatives).
    fn mul_u64(&self, a: &Self::C, n: u64) -> Self::C;
}

/// A commutative algebra into which polynomials are evaluated. `scalar` maps
/// a coefficient into the algebra.
pub trait EvalAlgebra<R: CoefRing> {
    type El: Clone;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn scalar(&self, c: &R::C) -> Self::El;
}

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<R: CoefRing> {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, R::C>,
}

impl<R: CoefRing> MultiPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &R, nvars: usize, c: R::C) -> Self {
        let mut p = Self::zero(nvars);
        p.set_term(ring, vec![0; nvars], c);
        p
    }

    pub fn var(ring: &R, nvars: usize, j: usize) -> Self {
        let mut e = vec![0u32; nvars];
        e[j] = 1;
        let mut p = Self::zero(nvars);
        p.set_term(ring, e, ring.one());
        p
    }

    pub fn set_term(&mut self, ring: &R, exps: Vec<u32>, c: R::C) {
        assert_eq!(exps.len(), self.nvars);
        if ring.is_zero(&c) {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, c);
        }
    }

    pub fn add_term(&mut self, ring: &R, exps: Vec<u32>, c: R::C) {
        let cur = self.terms.get(&exps).cloned().unwrap_or_else(|| ring.zero());
        self.set_term(ring, exps, ring.add(&cur, &c));
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(ring, e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, ring: &R) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.set_term(ring, e.clone(), ring.neg(c));
        }
        out
    }

    pub fn sub(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(ring, e, ring.mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, ring: &R, c: &R::C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.set_term(ring, e.clone(), ring.mul(c, v));
        }
        out
    }

    /// Total degree in the tracked variables; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Partial derivative with respect to variable j.
    pub fn derivative(&self, ring: &R, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[j] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[j] -= 1;
            out.add_term(ring, ne, ring.mul_u64(c, e[j] as u64));
        }
        out
    }

    /// Evaluate at a point of an algebra. Powers of the coordinates are cached.
    pub fn eval<A: EvalAlgebra<R>>(&self, ring: &R, alg: &A, point: &[A::El]) -> A::El {
        assert_eq!(point.len(), self.nvars);
        let _ = ring;
        let maxdeg: u32 = self
            .terms
            .keys()
            .map(|e| e.iter().copied().max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        // powers[j][k] = point[j]^k
        let mut powers: Vec<Vec<A::El>> = Vec::with_capacity(self.nvars);
        for pj in point {
            let mut row = vec![alg.one()];
            for k in 1..=maxdeg as usize {
                let next = alg.mul(&row[k - 1], pj);
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = alg.zero();
        for (e, c) in &self.terms {
            let mut t = alg.scalar(c);
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = alg.mul(&t, &powers[j][k as usize]);
                }
            }
            acc = alg.add(&acc, &t);
        }
        acc
    }

    /// Map coefficients into another ring, dropping zeros.
    pub fn map_coeffs<S: CoefRing>(
        &self,
        target: &S,
        mut f: impl FnMut(&R::C) -> S::C,
    ) -> MultiPoly<S> {
        let mut out = MultiPoly::<S>::zero(self.nvars);
        for (e, c) in &self.terms {
            out.set_term(target, e.clone(), f(c));
        }
        out
    }
}

// --- standard coefficient rings ---

/// Integers as a coefficient ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ZRing;

impl CoefRing for ZRing {
    type C = num_bigint::BigInt;
    fn zero(&self) -> Self::C {
        num_traits::Zero::zero()
    }
    fn one(&self) -> Self::C {
        num_traits::One::one()
    }
    fn is_zero(&self, c: &Self::C) -> bool {
        num_traits::Zero::is_zero(c)
    }
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C {
        a + b
    }
    fn neg(&self, a: &Self::C) -> Self::C {
        -a
    }
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C {
        a * b
    }
    fn mul_u64(&self, a: &Self::C, n: u64) -> Self::C {
        a * num_bigint::BigInt::from(n)
    }
}

/// Univariate polynomials over a field as a coefficient ring (K[x] inside
/// K[x][y_1..y_r]).
#[derive(Clone, PartialEq, Debug)]
pub struct PolyRing<F: crate::field::Field> {
    pub field: F,
}

impl<F: crate::field::Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }
}

impl<F: crate::field::Field> CoefRing for PolyRing<F> {
    type C = crate::poly::Poly<F>;
    fn zero(&self) -> Self::C {
        Vec::new()
    }
    fn one(&self) -> Self::C {
        crate::poly::constant(&self.field, self.field.one())
    }
    fn is_zero(&self, c: &Self::C) -> bool {
        c.is_empty()
    }
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C {
        crate::poly::add(&self.field, a, b)
    }
    fn neg(&self, a: &Self::C) -> Self::C {
        crate::poly::neg(&self.field, a)
    }
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C {
        crate::poly::mul(&self.field, a, b)
    }
    fn mul_u64(&self, a: &Self::C, n: u64) -> Self::C {
        let c = self.field.from_i64(n as i64);
        crate::poly::scale(&self.field, &c, a)
    }
}

/// A field used directly as an evaluation algebra over itself.
pub struct FieldAlg<'a, F: crate::field::Field>(pub &'a F);

impl<'a, F: crate::field::Field> EvalAlgebra<ZRing> for FieldAlg<'a, F> {
    type El = F::Elem;
    fn zero(&self) -> Self::El {
        self.0.zero()
    }
    fn one(&self) -> Self::El {
        self.0.one()
    }
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.0.add(a, b)
    }
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.0.mul(a, b)
    }
    fn scalar(&self, c: &num_bigint::BigInt) -> Self::El {
        big_to_field(self.0, c)
    }
}

/// Image of a big integer in any field (via repeated doubling on the bits).
pub fn big_to_field<F: crate::field::Field>(f: &F, c: &num_bigint::BigInt) -> F::Elem {
    use num_bigint::Sign;
    let (sign, mag) = c.clone().into_parts();
    let mut acc = f.zero();
    let two = f.from_i64(2);
    for i in (0..mag.bits()).rev() {
        acc = f.mul(&acc, &two);
        if mag.bit(i) {
            acc = f.add(&acc, &f.one());
        }
    }
    if sign == Sign::Minus {
        acc = f.neg(&acc);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::Fq;
    use num_bigint::BigInt;

    #[test]
    fn eval_int_poly_in_field() {
        // x0^2 + 3 x1 - 7 at (2, 5) over F_11: 4 + 15 - 7 = 12 = 1
        let ring = ZRing;
        let mut p = MultiPoly::<ZRing>::zero(2);
        p.add_term(&ring, vec![2, 0], BigInt::from(1));
        p.add_term(&ring, vec![0, 1], BigInt::from(3));
        p.add_term(&ring, vec![0, 0], BigInt::from(-7));
        let f = Fq::new(11, 1).unwrap();
        let v = p.eval(&ring, &FieldAlg(&f), &[f.from_i64(2), f.from_i64(5)]);
        use crate::field::Field;
        assert_eq!(v, f.from_i64(1));
    }

    #[test]
    fn derivative_drops_terms() {
        let ring = ZRing;
        let mut p = MultiPoly::<ZRing>::zero(2);
        p.add_term(&ring, vec![2, 1], BigInt::from(5));
        let d = p.derivative(&ring, 0);
        assert_eq!(d.terms.get(&vec![1, 1]), Some(&BigInt::from(10)));
    }
}
