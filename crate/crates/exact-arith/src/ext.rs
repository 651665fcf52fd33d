//! Extensions of a finite field by an explicit irreducible modulus.
//!
//! `ExtField<F>` is F[z]/(modulus). Nesting gives the towers the pipelines
//! need: a base F_q, then L = F_q[a]/(F) for the chosen place, then S = L[z]/(G)
//! for the residue field. Elements are coefficient vectors over the base,
//! length = extension degree.

use crate::field::{Field, FiniteField};
use crate::poly::{self, Poly};
use crate::polyfactor;
use num_bigint::BigUint;

#[derive(Clone, PartialEq, Debug)]
pub struct ExtField<F: FiniteField> {
    base: F,
    /// Monic irreducible modulus over the base, length s+1.
    modulus: Poly<F>,
}

impl<F: FiniteField> ExtField<F> {
    /// Extension by a given monic irreducible modulus. Irreducibility is checked.
    pub fn new(base: F, modulus: Poly<F>) -> Result<Self, crate::ArithError> {
        assert!(
            modulus.len() >= 2 && base.is_one(modulus.last().unwrap()),
            "modulus must be monic of degree >= 1"
        );
        if !polyfactor::is_irreducible(&base, &modulus) {
            return Err(crate::ArithError::Unsupported(
                "reducible extension modulus".into(),
            ));
        }
        Ok(ExtField { base, modulus })
    }

    /// Extension by the deterministic modulus of the given degree.
    pub fn deterministic(base: F, degree: usize) -> Self {
        let modulus = deterministic_modulus(&base, degree);
        ExtField { base, modulus }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    /// Degree over the base field.
    pub fn rel_degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The class of z.
    pub fn gen(&self) -> Vec<F::Elem> {
        let s = self.rel_degree();
        let mut v = vec![self.base.zero(); s];
        if s == 1 {
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = self.base.one();
        }
        v
    }

    /// Embed a base-field element.
    pub fn embed(&self, a: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base.zero(); self.rel_degree()];
        v[0] = a.clone();
        v
    }

    /// Coordinates over the base field (a copy of the element vector).
    pub fn coords(&self, a: &Vec<F::Elem>) -> Vec<F::Elem> {
        a.clone()
    }

    /// Evaluate a polynomial over the base field at an element of this field.
    pub fn eval_base_poly(&self, p: &Poly<F>, at: &Vec<F::Elem>) -> Vec<F::Elem> {
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, &self.embed(c));
        }
        acc
    }

    fn reduce(&self, v: Poly<F>) -> Vec<F::Elem> {
        let mut r = poly::rem(&self.base, &v, &self.modulus);
        r.resize(self.rel_degree(), self.base.zero());
        r
    }
}

impl<F: FiniteField> Field for ExtField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.rel_degree()]
    }

    fn one(&self) -> Self::Elem {
        let mut v = vec![self.base.zero(); self.rel_degree()];
        v[0] = self.base.one();
        v
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.is_zero(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let pa = poly::normalized(&self.base, a.clone());
        let pb = poly::normalized(&self.base, b.clone());
        self.reduce(poly::mul(&self.base, &pa, &pb))
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let pa = poly::normalized(&self.base, a.clone());
        if pa.is_empty() {
            return None;
        }
        poly::inv_mod(&self.base, &pa, &self.modulus).map(|r| {
            let mut r = r;
            r.resize(self.rel_degree(), self.base.zero());
            r
        })
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_i64(n))
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn degree_over_prime(&self) -> usize {
        self.base.degree_over_prime() * self.rel_degree()
    }

    fn to_prime_coords(&self, a: &Self::Elem) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.degree_over_prime());
        for c in a {
            out.extend(self.base.to_prime_coords(c));
        }
        out
    }

    fn from_prime_coords(&self, coords: &[u64]) -> Self::Elem {
        let d = self.base.degree_over_prime();
        assert_eq!(coords.len(), d * self.rel_degree());
        coords
            .chunks(d)
            .map(|ch| self.base.from_prime_coords(ch))
            .collect()
    }
}

/// First monic irreducible of the given degree over any finite field, in the
/// canonical enumeration (coefficients indexed base-|F|, constant coefficient
/// least significant, each coefficient enumerated by its prime coordinates).
pub fn deterministic_modulus<F: FiniteField>(base: &F, degree: usize) -> Poly<F> {
    assert!(degree >= 1);
    let q = base.order();
    let total = q.pow(degree as u32);
    let mut idx = BigUint::from(0u32);
    use num_integer::Integer;
    while idx < total {
        let mut cand: Poly<F> = Vec::with_capacity(degree + 1);
        let mut rest = idx.clone();
        for _ in 0..degree {
            let (quo, r) = rest.div_rem(&q);
            cand.push(base.elem_from_index(&r));
            rest = quo;
        }
        cand.push(base.one());
        if polyfactor::is_irreducible(base, &cand) {
            return cand;
        }
        idx += 1u32;
    }
    unreachable!("irreducibles of every degree exist")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::Fq;

    #[test]
    fn tower_matches_flat() {
        // F_9 built as ExtField over F_3 must match Fq(3,2)'s modulus choice.
        let f3 = Fq::new(3, 1).unwrap();
        let ext = ExtField::deterministic(f3.clone(), 2);
        let flat = Fq::new(3, 2).unwrap();
        let ext_mod: Vec<u64> = ext.modulus().iter().map(|c| c[0]).collect();
        assert_eq!(ext_mod, flat.modulus().to_vec());
    }

    #[test]
    fn nested_tower_arithmetic() {
        let f5 = Fq::new(5, 1).unwrap();
        let l = ExtField::deterministic(f5, 2);
        let s = ExtField::deterministic(l.clone(), 2);
        assert_eq!(s.degree_over_prime(), 4);
        let g = s.gen();
        let ginv = s.inv(&g).unwrap();
        assert!(s.is_one(&s.mul(&g, &ginv)));
        // Frobenius to the full order fixes everything
        let idx = s.order();
        let fixed = s.pow_biguint(&g, &idx);
        assert_eq!(fixed, g);
    }
}
