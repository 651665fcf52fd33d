//! Truncated power series S[[t]]/t^m over a finite-field extension.
//!
//! A series is a coefficient vector of length exactly m; arithmetic is exact
//! modulo t^m.

use crate::field::Field;
use crate::hensel::LocalRing;
use crate::ArithError;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<F: Field> {
    pub coeffs: Vec<F::Elem>,
}

/// The ring S[[t]]/t^m as a context object.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesRing<F: Field> {
    pub field: F,
    pub prec: usize,
}

impl<F: Field> SeriesRing<F> {
    pub fn new(field: F, prec: usize) -> Self {
        assert!(prec >= 1);
        SeriesRing { field, prec }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> TruncSeries<F> {
        coeffs.resize(self.prec, self.field.zero());
        TruncSeries { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> TruncSeries<F> {
        let mut v = vec![self.field.zero(); self.prec];
        v[0] = c;
        TruncSeries { coeffs: v }
    }

    /// The series t.
    pub fn t(&self) -> TruncSeries<F> {
        let mut v = vec![self.field.zero(); self.prec];
        if self.prec > 1 {
            v[1] = self.field.one();
        }
        TruncSeries { coeffs: v }
    }

    pub fn check(&self, a: &TruncSeries<F>) -> Result<(), ArithError> {
        if a.coeffs.len() != self.prec {
            Err(ArithError::PrecisionMismatch {
                left: a.coeffs.len(),
                right: self.prec,
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, a: &TruncSeries<F>, b: &TruncSeries<F>) -> TruncSeries<F> {
        TruncSeries {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| self.field.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &TruncSeries<F>, b: &TruncSeries<F>) -> TruncSeries<F> {
        TruncSeries {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| self.field.sub(x, y))
                .collect(),
        }
    }

    pub fn neg(&self, a: &TruncSeries<F>) -> TruncSeries<F> {
        TruncSeries {
            coeffs: a.coeffs.iter().map(|x| self.field.neg(x)).collect(),
        }
    }

    pub fn mul(&self, a: &TruncSeries<F>, b: &TruncSeries<F>) -> TruncSeries<F> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.prec];
        for i in 0..self.prec {
            if f.is_zero(&a.coeffs[i]) {
                continue;
            }
            for j in 0..self.prec - i {
                let t = f.mul(&a.coeffs[i], &b.coeffs[j]);
                out[i + j] = f.add(&out[i + j], &t);
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Inverse of a series whose constant term is a unit.
    pub fn invert(&self, a: &TruncSeries<F>) -> Result<TruncSeries<F>, ArithError> {
        let f = &self.field;
        let c0inv = f.inv(&a.coeffs[0]).ok_or(ArithError::NotAUnit)?;
        // Newton: x -> x (2 - a x), doubling correct digits
        let mut x = self.constant(c0inv);
        let two = self.constant(f.from_i64(2));
        let mut correct = 1usize;
        while correct < self.prec {
            let ax = self.mul(a, &x);
            let corr = self.sub(&two, &ax);
            x = self.mul(&x, &corr);
            correct *= 2;
        }
        Ok(x)
    }

    pub fn is_zero(&self, a: &TruncSeries<F>) -> bool {
        a.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// t-adic valuation (None for zero modulo t^m).
    pub fn valuation(&self, a: &TruncSeries<F>) -> Option<usize> {
        a.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    pub fn truncate(&self, a: &TruncSeries<F>, m: usize) -> TruncSeries<F> {
        assert!(m <= self.prec);
        TruncSeries {
            coeffs: a.coeffs[..m].to_vec(),
        }
    }
}

impl<F: Field> LocalRing for SeriesRing<F> {
    type El = TruncSeries<F>;

    fn precision(&self) -> usize {
        self.prec
    }

    fn with_precision(&self, m: usize) -> Self {
        SeriesRing::new(self.field.clone(), m)
    }

    fn zero(&self) -> Self::El {
        self.from_coeffs(Vec::new())
    }

    fn one(&self) -> Self::El {
        self.constant(self.field.one())
    }

    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El {
        SeriesRing::add(self, a, b)
    }

    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        SeriesRing::sub(self, a, b)
    }

    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El {
        SeriesRing::mul(self, a, b)
    }

    fn is_zero(&self, a: &Self::El) -> bool {
        SeriesRing::is_zero(self, a)
    }

    fn is_unit(&self, a: &Self::El) -> bool {
        !self.field.is_zero(&a.coeffs[0])
    }

    fn invert(&self, a: &Self::El) -> Option<Self::El> {
        SeriesRing::invert(self, a).ok()
    }

    fn reduce_to(&self, a: &Self::El, m: usize) -> Self::El {
        self.truncate(a, m)
    }

    fn lift_into(&self, a: &Self::El) -> Self::El {
        // zero-pad: any lift works for Newton iteration
        self.from_coeffs(a.coeffs.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use crate::field::Field;
    use crate::fq::Fq;

    #[test]
    fn one_plus_t_times_one_minus_t() {
        let f = Fq::new(5, 1).unwrap();
        let r = SeriesRing::new(f.clone(), 2);
        let one = r.one();
        let t = r.t();
        let a = r.add(&one, &t);
        let b = r.sub(&one, &t);
        assert_eq!(r.mul(&a, &b), one);
    }

    #[test]
    fn geometric_inverse() {
        let f = Fq::new(7, 1).unwrap();
        let r = SeriesRing::new(f.clone(), 3);
        let a = r.add(&r.one(), &r.t()); // 1 + t
        let inv = r.invert(&a).unwrap();
        // 1 - t + t^2
        let expect = r.from_coeffs(vec![f.from_i64(1), f.from_i64(-1), f.from_i64(1)]);
        assert_eq!(inv, expect);
    }

    #[test]
    fn char_two_square() {
        let f = Fq::new(2, 1).unwrap();
        let r = SeriesRing::new(f.clone(), 3);
        let a = r.add(&r.one(), &r.t());
        let sq = r.mul(&a, &a); // 1 + t^2 in characteristic 2
        let expect = r.from_coeffs(vec![f.one(), f.zero(), f.one()]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn invert_non_unit_fails() {
        let f = Fq::new(5, 1).unwrap();
        let r = SeriesRing::new(f, 4);
        assert_eq!(r.invert(&r.t()).unwrap_err(), ArithError::NotAUnit);
    }
}
