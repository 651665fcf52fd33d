//! The rational function field K(x) over a finite field, as a `Field`.
//!
//! Elements are reduced fractions of dense polynomials with monic denominator.

use crate::field::{Field, FiniteField};
use crate::poly::{self, Poly};

#[derive(Clone, PartialEq, Debug)]
pub struct RatFnField<F: FiniteField> {
    pub coeff: F,
}

#[derive(Clone, PartialEq, Debug)]
pub struct RatFn<F: FiniteField> {
    pub num: Poly<F>,
    pub den: Poly<F>,
}

impl<F: FiniteField> RatFnField<F> {
    pub fn new(coeff: F) -> Self {
        RatFnField { coeff }
    }

    pub fn from_poly(&self, p: Poly<F>) -> RatFn<F> {
        RatFn {
            num: p,
            den: poly::constant(&self.coeff, self.coeff.one()),
        }
    }

    fn reduce(&self, num: Poly<F>, den: Poly<F>) -> RatFn<F> {
        let f = &self.coeff;
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFn {
                num,
                den: poly::constant(f, f.one()),
            };
        }
        let g = poly::gcd(f, &num, &den);
        let (num, den) = if poly::deg(&g) == Some(0) {
            (num, den)
        } else {
            (poly::exact_div(f, &num, &g), poly::exact_div(f, &den, &g))
        };
        // normalize denominator monic
        let lcinv = f.inv(&poly::lc(f, &den)).unwrap();
        RatFn {
            num: poly::scale(f, &lcinv, &num),
            den: poly::scale(f, &lcinv, &den),
        }
    }

    /// Degree of the rational function at infinity: deg num - deg den.
    pub fn inf_degree(&self, a: &RatFn<F>) -> Option<i64> {
        poly::deg(&a.num).map(|dn| dn as i64 - poly::deg(&a.den).unwrap() as i64)
    }
}

impl<F: FiniteField> Field for RatFnField<F> {
    type Elem = RatFn<F>;

    fn zero(&self) -> RatFn<F> {
        RatFn {
            num: Vec::new(),
            den: poly::constant(&self.coeff, self.coeff.one()),
        }
    }

    fn one(&self) -> RatFn<F> {
        RatFn {
            num: poly::constant(&self.coeff, self.coeff.one()),
            den: poly::constant(&self.coeff, self.coeff.one()),
        }
    }

    fn is_zero(&self, a: &RatFn<F>) -> bool {
        a.num.is_empty()
    }

    fn add(&self, a: &RatFn<F>, b: &RatFn<F>) -> RatFn<F> {
        let f = &self.coeff;
        let num = poly::add(
            f,
            &poly::mul(f, &a.num, &b.den),
            &poly::mul(f, &b.num, &a.den),
        );
        let den = poly::mul(f, &a.den, &b.den);
        self.reduce(num, den)
    }

    fn sub(&self, a: &RatFn<F>, b: &RatFn<F>) -> RatFn<F> {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &RatFn<F>) -> RatFn<F> {
        RatFn {
            num: poly::neg(&self.coeff, &a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &RatFn<F>, b: &RatFn<F>) -> RatFn<F> {
        let f = &self.coeff;
        self.reduce(poly::mul(f, &a.num, &b.num), poly::mul(f, &a.den, &b.den))
    }

    fn inv(&self, a: &RatFn<F>) -> Option<RatFn<F>> {
        if a.num.is_empty() {
            return None;
        }
        Some(self.reduce(a.den.clone(), a.num.clone()))
    }

    fn from_i64(&self, n: i64) -> RatFn<F> {
        self.from_poly(poly::constant(&self.coeff, self.coeff.from_i64(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::Fq;

    #[test]
    fn fraction_arithmetic() {
        let f5 = Fq::new(5, 1).unwrap();
        let kx = RatFnField::new(f5.clone());
        let x = kx.from_poly(poly::x(&f5));
        let one = kx.one();
        // x / x = 1
        let q = kx.mul(&x, &kx.inv(&x).unwrap());
        assert_eq!(q, one);
        // (x+1)(x-1) = x^2 - 1
        let xp1 = kx.add(&x, &one);
        let xm1 = kx.sub(&x, &one);
        let prod = kx.mul(&xp1, &xm1);
        let x2 = kx.mul(&x, &x);
        assert_eq!(prod, kx.sub(&x2, &one));
    }
}
