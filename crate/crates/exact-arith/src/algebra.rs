//! Finite-dimensional commutative algebras over a field, given by a
//! multiplication table, with trace forms, minimal polynomials and (in
//! positive characteristic) nilradicals.

use crate::field::{Field, FiniteField};
use crate::linalg::{self, Mat};
use crate::poly::{self, Poly};

#[derive(Clone, PartialEq, Debug)]
pub struct TableAlgebra<F: Field> {
    pub field: F,
    pub dim: usize,
    /// table[i][j][k] = k-th coordinate of e_i e_j.
    pub table: Vec<Vec<Vec<F::Elem>>>,
    /// Coordinates of the multiplicative unit.
    pub one: Vec<F::Elem>,
}

impl<F: Field> TableAlgebra<F> {
    pub fn new(field: F, table: Vec<Vec<Vec<F::Elem>>>, one: Vec<F::Elem>) -> Self {
        let dim = table.len();
        assert!(dim > 0);
        TableAlgebra {
            field,
            dim,
            table,
            one,
        }
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        for i in 0..self.dim {
            if f.is_zero(&a[i]) {
                continue;
            }
            for j in 0..self.dim {
                if f.is_zero(&b[j]) {
                    continue;
                }
                let c = f.mul(&a[i], &b[j]);
                for k in 0..self.dim {
                    if !f.is_zero(&self.table[i][j][k]) {
                        let t = f.mul(&c, &self.table[i][j][k]);
                        out[k] = f.add(&out[k], &t);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn scale(&self, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }

    /// Matrix of multiplication by a (acting on coordinate columns).
    pub fn mult_matrix(&self, a: &[F::Elem]) -> Mat<F> {
        let f = &self.field;
        let mut m = Mat::new(f, self.dim, self.dim);
        for j in 0..self.dim {
            let mut ej = self.zero();
            ej[j] = f.one();
            let col = self.mul(a, &ej);
            for i in 0..self.dim {
                *m.at_mut(i, j) = col[i].clone();
            }
        }
        m
    }

    pub fn trace(&self, a: &[F::Elem]) -> F::Elem {
        let m = self.mult_matrix(a);
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.dim {
            acc = f.add(&acc, m.at(i, i));
        }
        acc
    }

    /// Gram matrix of the trace form Tr(e_i e_j).
    pub fn trace_form(&self) -> Mat<F> {
        let f = &self.field;
        let mut g = Mat::new(f, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut ei = self.zero();
                ei[i] = f.one();
                let mut ej = self.zero();
                ej[j] = f.one();
                let prod = self.mul(&ei, &ej);
                *g.at_mut(i, j) = self.trace(&prod);
            }
        }
        g
    }

    /// The algebra is etale (separable) iff the trace form is nondegenerate.
    pub fn is_etale(&self) -> bool {
        !self.field.is_zero(&linalg::det(&self.field, &self.trace_form()))
    }

    /// Minimal polynomial of an element, monic over the base field.
    pub fn min_poly(&self, a: &[F::Elem]) -> Poly<F> {
        let f = &self.field;
        let mut powers: Vec<Vec<F::Elem>> = vec![self.one.clone()];
        loop {
            // is the last power dependent on the previous ones?
            let k = powers.len();
            let mat = Mat::from_rows(f, powers.clone()).transpose(f);
            let last = self.mul(powers.last().unwrap(), a);
            if let Some(sol) = linalg::solve(f, &mat, &last) {
                // a^k = sum sol_i a^i  ->  min poly x^k - sum sol_i x^i
                let mut mp: Poly<F> = sol.iter().map(|c| f.neg(c)).collect();
                mp.push(f.one());
                let _ = k;
                poly::trim(f, &mut mp);
                return mp;
            }
            powers.push(last);
            assert!(powers.len() <= self.dim + 1, "min poly search overran");
        }
    }
}

impl<F: FiniteField> TableAlgebra<F> {
    /// F_p-basis of the nilradical, returned as algebra coordinate vectors.
    /// Uses the kernel of the iterated Frobenius a -> a^{p^K}, p^K >= dim,
    /// which is F_p-linear.
    pub fn nilradical_fp_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let p = f.characteristic();
        let e = f.degree_over_prime();
        let fp = crate::fq::Fq::new(p, 1).unwrap();
        let n_fp = self.dim * e;
        let mut k = 0u32;
        let mut pk = 1u64;
        while (pk as usize) < self.dim {
            pk = pk.saturating_mul(p);
            k += 1;
        }
        let _ = k;
        // matrix of a -> a^{p^K} over F_p
        let mut cols: Vec<Vec<Vec<u64>>> = Vec::with_capacity(n_fp);
        for i in 0..self.dim {
            for c in 0..e {
                // basis vector: e_i * (prime basis elem c of F)
                let mut coords = vec![0u64; e];
                coords[c] = 1;
                let felem = f.from_prime_coords(&coords);
                let mut v = self.zero();
                v[i] = felem;
                // iterate frobenius K times: v^(p^K)
                let mut w = v.clone();
                let mut pw = 1u64;
                while (pw as usize) < self.dim {
                    // w = w^p by square-and-multiply on the exponent p
                    let mut acc = self.one.clone();
                    let mut base = w.clone();
                    let mut exp = p;
                    while exp > 0 {
                        if exp & 1 == 1 {
                            acc = self.mul(&acc, &base);
                        }
                        base = self.mul(&base, &base);
                        exp >>= 1;
                    }
                    w = acc;
                    pw = pw.saturating_mul(p);
                }
                // flatten w to F_p coords
                let flat: Vec<Vec<u64>> = w
                    .iter()
                    .flat_map(|x| f.to_prime_coords(x).into_iter().map(|d| vec![d]))
                    .collect();
                cols.push(flat);
            }
        }
        let mut m = Mat::new(&fp, n_fp, n_fp);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n_fp {
                *m.at_mut(i, j) = col[i].clone();
            }
        }
        let kernel = linalg::right_kernel(&fp, &m);
        // un-flatten kernel vectors to algebra coordinates
        kernel
            .into_iter()
            .map(|v| {
                (0..self.dim)
                    .map(|i| {
                        let chunk: Vec<u64> = (0..e).map(|c| v[i * e + c][0]).collect();
                        f.from_prime_coords(&chunk)
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::Fq;

    /// F_q[y]/(y^2 - d): table for basis {1, y}.
    fn quad_algebra(f: Fq, d: i64) -> TableAlgebra<Fq> {
        let dd = f.from_i64(d);
        let one = vec![f.one(), f.zero()];
        let table = vec![
            vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]],
            vec![vec![f.zero(), f.one()], vec![dd, f.zero()]],
        ];
        TableAlgebra::new(f, table, one)
    }

    #[test]
    fn etale_and_not() {
        let f3 = Fq::new(3, 1).unwrap();
        assert!(quad_algebra(f3.clone(), -1).is_etale()); // y^2 + 1 over F_3: field
        let f5 = Fq::new(5, 1).unwrap();
        assert!(quad_algebra(f5.clone(), 1).is_etale()); // split but separable
        // y^2 = 0 is not etale
        let f2 = Fq::new(2, 1).unwrap();
        let table = vec![
            vec![vec![f2.one(), f2.zero()], vec![f2.zero(), f2.one()]],
            vec![vec![f2.zero(), f2.one()], vec![f2.zero(), f2.zero()]],
        ];
        let a = TableAlgebra::new(f2.clone(), table, vec![f2.one(), f2.zero()]);
        assert!(!a.is_etale());
        let nil = a.nilradical_fp_basis();
        assert_eq!(nil.len(), 1);
    }

    #[test]
    fn min_poly_of_generator() {
        let f3 = Fq::new(3, 1).unwrap();
        let a = quad_algebra(f3.clone(), -1);
        let y = vec![f3.zero(), f3.one()];
        let mp = a.min_poly(&y);
        // y^2 + 1
        assert_eq!(mp, vec![f3.one(), f3.zero(), f3.one()]);
    }
}
