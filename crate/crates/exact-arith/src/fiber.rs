//! Splitting a finite etale algebra over a finite field into its residue
//! fields, with canonical presentations and a deterministic factor order.
//!
//! Each factor is returned as the deterministic extension of the base field
//! of the right degree together with the projection of every input basis
//! vector, so certificates serialized from the output are reproducible.

use crate::algebra::TableAlgebra;
use crate::ext::ExtField;
use crate::field::{Field, FiniteField};
use crate::intutil::splitmix64;
use crate::linalg::{self, Mat};
use crate::poly;
use crate::polyfactor;
use crate::ArithError;

/// One field factor of an etale algebra.
#[derive(Clone, Debug)]
pub struct FiberFactor<F: FiniteField> {
    /// The residue field, presented with the deterministic modulus.
    pub field: ExtField<F>,
    /// Degree over the base.
    pub degree: usize,
    /// Projection of each input basis vector.
    pub projection: Vec<Vec<F::Elem>>,
}

impl<F: FiniteField> FiberFactor<F> {
    pub fn project(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let ext = &self.field;
        let mut acc = ext.zero();
        for (c, p) in a.iter().zip(&self.projection) {
            let t = ext.mul(&ext.embed(c), p);
            acc = ext.add(&acc, &t);
        }
        acc
    }
}

/// Factor an etale commutative algebra into residue fields.
///
/// Errors with `NotEtale` when the trace form is degenerate, which signals
/// the caller to re-choose the point the fiber was taken at. Factors are
/// sorted by (degree, canonical projection key) and each projection is the
/// canonical one among its Frobenius conjugates.
pub fn factor_fiber_algebra<F: FiniteField>(
    alg: &TableAlgebra<F>,
) -> Result<Vec<FiberFactor<F>>, ArithError> {
    if !alg.is_etale() {
        return Err(ArithError::NotEtale);
    }
    let f = alg.field.clone();
    // components as (basis rows in algebra coords, unit of the component)
    let mut done: Vec<(Vec<Vec<F::Elem>>, Vec<F::Elem>)> = Vec::new();
    let mut todo: Vec<(Vec<Vec<F::Elem>>, Vec<F::Elem>)> = vec![(
        Mat::identity(&f, alg.dim).rows_vec(),
        alg.one.clone(),
    )];
    while let Some((basis, unit)) = todo.pop() {
        let k = basis.len();
        // scan for an element whose minimal polynomial splits or proves a field
        let mut state = 0xD1F0u64 ^ (k as u64);
        let mut split_done = false;
        for attempt in 0..(64 + 4 * k) {
            let cand: Vec<F::Elem> = if attempt < k {
                basis[attempt].clone()
            } else {
                // deterministic pseudo-random combination of the basis
                let mut acc = vec![f.zero(); alg.dim];
                for b in &basis {
                    let idx = num_bigint::BigUint::from(splitmix64(&mut state)) % f.order();
                    let c = f.elem_from_index(&idx);
                    for (a, x) in acc.iter_mut().zip(b) {
                        *a = f.add(a, &f.mul(&c, x));
                    }
                }
                acc
            };
            let mp = component_min_poly(alg, &basis, &unit, &cand);
            let d = poly::deg(&mp).unwrap();
            if d == k && polyfactor::is_irreducible(&f, &mp) {
                done.push((basis.clone(), unit.clone()));
                split_done = true;
                break;
            }
            let facs = polyfactor::factor_squarefree(&f, &mp);
            if facs.len() >= 2 {
                for fac in &facs {
                    let cof = poly::exact_div(&f, &mp, fac);
                    let cinv = poly::inv_mod(&f, &cof, fac).expect("coprime factors");
                    let idem_poly = poly::mulmod(&f, &cof, &cinv, &mp);
                    let idem = eval_component(alg, &unit, &cand, &idem_poly);
                    // sub-component: basis * idem, unit = idem
                    let rows: Vec<Vec<F::Elem>> =
                        basis.iter().map(|b| alg.mul(b, &idem)).collect();
                    let sub = row_space_basis(&f, rows);
                    todo.push((sub, idem));
                }
                split_done = true;
                break;
            }
            // mp irreducible but of degree < k: try another element
        }
        assert!(split_done, "failed to split an etale component");
    }

    // canonical presentation of each component
    let mut out = Vec::new();
    for (basis, unit) in done {
        let k = basis.len();
        let ext = ExtField::deterministic(f.clone(), k);
        // find a generator of the component
        let mut state = 0xA11CEu64 ^ (k as u64);
        let mut gen = None;
        for attempt in 0..(64 + 4 * k) {
            let cand: Vec<F::Elem> = if attempt < k {
                basis[attempt].clone()
            } else {
                let mut acc = vec![f.zero(); alg.dim];
                for b in &basis {
                    let idx = num_bigint::BigUint::from(splitmix64(&mut state)) % f.order();
                    let c = f.elem_from_index(&idx);
                    for (a, x) in acc.iter_mut().zip(b) {
                        *a = f.add(a, &f.mul(&c, x));
                    }
                }
                acc
            };
            let mp = component_min_poly(alg, &basis, &unit, &cand);
            if poly::deg(&mp) == Some(k) {
                gen = Some((cand, mp));
                break;
            }
        }
        let (g, mp) = gen.expect("field component has a generator");
        // basis eps, g, g^2, ..., g^(k-1) of the component
        let mut gpowers: Vec<Vec<F::Elem>> = vec![unit.clone()];
        for _ in 1..k {
            gpowers.push(alg.mul(gpowers.last().unwrap(), &g));
        }
        let gp_mat = Mat::from_rows(&f, gpowers).transpose(&f);
        // candidate projections: one per root of mp in ext
        let roots = polyfactor::roots(&ext, &poly::map_coeffs::<F, ExtField<F>>(&ext, &mp, |c| ext.embed(c)));
        assert_eq!(roots.len(), k, "min poly splits completely in the factor");
        let mut best: Option<(Vec<num_bigint::BigUint>, Vec<Vec<F::Elem>>)> = None;
        for rho in roots {
            // projection of basis vector e_i: coords of e_i * unit in g-powers,
            // evaluated at rho
            let mut proj = Vec::with_capacity(alg.dim);
            for i in 0..alg.dim {
                let mut e = vec![f.zero(); alg.dim];
                e[i] = f.one();
                let pe = alg.mul(&e, &unit);
                let coords = linalg::solve(&f, &gp_mat, &pe).expect("component element");
                let mut acc = ext.zero();
                for c in coords.iter().rev() {
                    acc = ext.mul(&acc, &rho);
                    acc = ext.add(&acc, &ext.embed(c));
                }
                proj.push(acc);
            }
            let key: Vec<num_bigint::BigUint> =
                proj.iter().map(|v| ext.elem_index(v)).collect();
            if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
                best = Some((key, proj));
            }
        }
        let (_, projection) = best.unwrap();
        out.push(FiberFactor {
            field: ext,
            degree: k,
            projection,
        });
    }
    out.sort_by(|a, b| {
        let ka: Vec<num_bigint::BigUint> =
            a.projection.iter().map(|v| a.field.elem_index(v)).collect();
        let kb: Vec<num_bigint::BigUint> =
            b.projection.iter().map(|v| b.field.elem_index(v)).collect();
        (a.degree, ka).cmp(&(b.degree, kb))
    });
    let total: usize = out.iter().map(|ft| ft.degree).sum();
    assert_eq!(total, alg.dim, "factor degrees must sum to the dimension");
    Ok(out)
}

/// Minimal polynomial of `a` inside the component spanned by `basis` with
/// unit `unit` (so the constant power is the component unit, not 1_A).
fn component_min_poly<F: FiniteField>(
    alg: &TableAlgebra<F>,
    basis: &[Vec<F::Elem>],
    unit: &[F::Elem],
    a: &[F::Elem],
) -> poly::Poly<F> {
    let f = &alg.field;
    let a = alg.mul(a, unit);
    let bmat = Mat::from_rows(f, basis.to_vec()).transpose(f);
    let mut powers: Vec<Vec<F::Elem>> = vec![unit.to_vec()];
    loop {
        // express powers in component coordinates and look for dependence
        let rows: Vec<Vec<F::Elem>> = powers
            .iter()
            .map(|p| linalg::solve(f, &bmat, p).expect("element of component"))
            .collect();
        let next = alg.mul(powers.last().unwrap(), &a);
        let next_c = linalg::solve(f, &bmat, &next).expect("element of component");
        let mat = Mat::from_rows(f, rows).transpose(f);
        if let Some(sol) = linalg::solve(f, &mat, &next_c) {
            let mut mp: poly::Poly<F> = sol.iter().map(|c| f.neg(c)).collect();
            mp.push(f.one());
            poly::trim(f, &mut mp);
            return mp;
        }
        powers.push(next);
        assert!(powers.len() <= basis.len() + 1);
    }
}

/// Evaluate a polynomial at `a` inside a component (constant term scales the
/// component unit).
fn eval_component<F: FiniteField>(
    alg: &TableAlgebra<F>,
    unit: &[F::Elem],
    a: &[F::Elem],
    p: &poly::Poly<F>,
) -> Vec<F::Elem> {
    let f = &alg.field;
    let a = alg.mul(a, unit);
    let mut acc = vec![f.zero(); alg.dim];
    for c in p.iter().rev() {
        acc = alg.mul(&acc, &a);
        let t = alg.scale(c, unit);
        acc = alg.add(&acc, &t);
    }
    acc
}

fn row_space_basis<F: Field>(f: &F, rows: Vec<Vec<F::Elem>>) -> Vec<Vec<F::Elem>> {
    let mut m = Mat::from_rows(f, rows);
    linalg::rref(f, &mut m);
    (0..m.rows)
        .map(|i| m.row(i).to_vec())
        .filter(|r| r.iter().any(|c| !f.is_zero(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use crate::field::Field;
    use crate::fq::Fq;

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
    fn inert_quadratic_gives_f9() {
        let f3 = Fq::new(3, 1).unwrap();
        let a = quad_algebra(f3, -1); // y^2 + 1 irreducible over F_3
        let factors = factor_fiber_algebra(&a).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].degree, 2);
    }

    #[test]
    fn split_quadratic_gives_two_lines() {
        let f5 = Fq::new(5, 1).unwrap();
        let a = quad_algebra(f5, 1); // y^2 - 1 splits
        let factors = factor_fiber_algebra(&a).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|ft| ft.degree == 1));
    }

    #[test]
    fn nilpotent_rejected() {
        let f2 = Fq::new(2, 1).unwrap();
        let table = vec![
            vec![vec![f2.one(), f2.zero()], vec![f2.zero(), f2.one()]],
            vec![vec![f2.zero(), f2.one()], vec![f2.zero(), f2.zero()]],
        ];
        let a = TableAlgebra::new(f2.clone(), table, vec![f2.one(), f2.zero()]);
        assert_eq!(factor_fiber_algebra(&a).unwrap_err(), ArithError::NotEtale);
    }

    #[test]
    fn projections_are_morphisms() {
        let f7 = Fq::new(7, 1).unwrap();
        let a = quad_algebra(f7.clone(), 3); // y^2 - 3; 3 is a non-residue mod 7
        let factors = factor_fiber_algebra(&a).unwrap();
        assert_eq!(factors.len(), 1);
        let ft = &factors[0];
        for i in 0..2 {
            for j in 0..2 {
                let mut ei = vec![f7.zero(); 2];
                ei[i] = f7.one();
                let mut ej = vec![f7.zero(); 2];
                ej[j] = f7.one();
                let lhs = ft.project(&a.mul(&ei, &ej));
                let rhs = ft.field.mul(&ft.project(&ei), &ft.project(&ej));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
