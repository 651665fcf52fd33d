//! Factorization of univariate polynomials over finite fields:
//! irreducibility, squarefree/distinct-degree/equal-degree splitting, roots.
//!
//! Equal-degree splitting is Cantor-Zassenhaus with a deterministic element
//! stream derived from the input polynomial, so factorizations are
//! reproducible run to run.

use crate::field::FiniteField;
use crate::intutil::{fnv1a, splitmix64};
use crate::poly::{self, Poly};
use num_bigint::BigUint;

use num_traits::One;

/// Irreducibility of a monic polynomial of degree >= 1.
pub fn is_irreducible<F: FiniteField>(f: &F, m: &Poly<F>) -> bool {
    let e = match poly::deg(m) {
        None | Some(0) => return false,
        Some(e) => e,
    };
    if e == 1 {
        return true;
    }
    let q = f.order();
    // x^{q^j} mod m for j = 1..e by repeated q-power maps
    let x = poly::x(f);
    let mut cur = x.clone();
    let mut frob = Vec::with_capacity(e);
    for _ in 0..e {
        cur = poly::pow_mod(f, &cur, &q, m);
        frob.push(cur.clone());
    }
    if frob[e - 1] != x {
        return false;
    }
    let mut rest = e;
    let mut prime_divs = Vec::new();
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            prime_divs.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        prime_divs.push(rest);
    }
    for t in prime_divs {
        let j = e / t;
        let diff = poly::sub(f, &frob[j - 1], &x);
        let g = poly::gcd(f, m, &diff);
        if poly::deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Factor a squarefree monic polynomial into monic irreducibles, sorted
/// canonically (by degree, then by the coefficient enumeration indices).
pub fn factor_squarefree<F: FiniteField>(f: &F, m: &Poly<F>) -> Vec<Poly<F>> {
    assert!(poly::deg(m).map_or(false, |d| d >= 1));
    let sf = poly::gcd(f, m, &poly::derivative(f, m));
    assert!(
        poly::deg(&sf) == Some(0),
        "factor_squarefree requires squarefree input"
    );
    let mut out = Vec::new();
    // distinct-degree
    let q = f.order();
    let mut rest = poly::monic(f, m);
    let mut h = poly::x(f);
    let mut d = 0usize;
    while poly::deg(&rest).map_or(false, |dd| dd >= 1) {
        d += 1;
        if 2 * d > poly::deg(&rest).unwrap() {
            out.push((rest.clone(), poly::deg(&rest).unwrap()));
            break;
        }
        h = poly::pow_mod(f, &h, &q, &rest);
        let g = poly::gcd(f, &rest, &poly::sub(f, &h, &poly::x(f)));
        if poly::deg(&g).map_or(false, |dd| dd >= 1) {
            out.push((g.clone(), d));
            rest = poly::exact_div(f, &rest, &g);
            h = poly::rem(f, &h, &rest);
        }
    }
    let mut irreducibles = Vec::new();
    for (prod, d) in out {
        equal_degree_split(f, &prod, d, &mut irreducibles);
    }
    irreducibles.sort_by(|a, b| canonical_poly_key(f, a).cmp(&canonical_poly_key(f, b)));
    irreducibles
}

fn canonical_poly_key<F: FiniteField>(f: &F, p: &Poly<F>) -> (usize, Vec<BigUint>) {
    (
        p.len(),
        p.iter().map(|c| f.elem_index(c)).collect::<Vec<_>>(),
    )
}

/// Split a product of distinct irreducibles, all of degree d.
fn equal_degree_split<F: FiniteField>(f: &F, m: &Poly<F>, d: usize, out: &mut Vec<Poly<F>>) {
    let n = poly::deg(m).unwrap();
    if n == d {
        out.push(poly::monic(f, m));
        return;
    }
    let q = f.order();
    // deterministic element stream seeded from the polynomial itself
    let mut state = fnv1a(
        &m.iter()
            .flat_map(|c| {
                f.to_prime_coords(c)
                    .into_iter()
                    .flat_map(|x| x.to_le_bytes())
            })
            .collect::<Vec<u8>>(),
    );
    loop {
        // random polynomial of degree < n
        let mut r: Poly<F> = (0..n)
            .map(|_| {
                let idx = BigUint::from(splitmix64(&mut state)) % f.order();
                f.elem_from_index(&idx)
            })
            .collect();
        poly::trim(f, &mut r);
        if poly::deg(&r).map_or(true, |dd| dd < 1) && n > 1 {
            continue;
        }
        let g0 = poly::gcd(f, m, &r);
        if poly::deg(&g0).map_or(false, |dd| dd >= 1) && poly::deg(&g0).unwrap() < n {
            equal_degree_split(f, &g0, d, out);
            equal_degree_split(f, &poly::exact_div(f, m, &g0), d, out);
            return;
        }
        let split = if f.characteristic() == 2 {
            // trace map T(r) = r + r^2 + r^4 + ... over F_{2^(k d)}
            let k = f.degree_over_prime() * d;
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..k {
                cur = poly::mulmod(f, &cur, &cur, m);
                acc = poly::add(f, &acc, &cur);
            }
            acc
        } else {
            // r^{(q^d - 1)/2} - 1
            let exp = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let pw = poly::pow_mod(f, &r, &exp, m);
            poly::sub(f, &pw, &poly::constant(f, f.one()))
        };
        let g = poly::gcd(f, m, &split);
        if let Some(dd) = poly::deg(&g) {
            if dd >= 1 && dd < n {
                equal_degree_split(f, &g, d, out);
                equal_degree_split(f, &poly::exact_div(f, m, &g), d, out);
                return;
            }
        }
    }
}

/// Roots in F of a nonzero polynomial (with multiplicity ignored), sorted
/// canonically by element index.
pub fn roots<F: FiniteField>(f: &F, m: &Poly<F>) -> Vec<F::Elem> {
    let mut m = poly::monic(f, m);
    if poly::deg(&m).map_or(true, |d| d == 0) {
        return Vec::new();
    }
    // strip repeated factors so the linear part is squarefree
    let der = poly::derivative(f, &m);
    if !der.is_empty() {
        let g = poly::gcd(f, &m, &der);
        if poly::deg(&g).map_or(false, |d| d >= 1) {
            m = poly::exact_div(f, &m, &g);
        }
    } else {
        // perfect p-th power: roots coincide with roots of the p-th root;
        // at desk scale we simply fall back on full gcd with x^q - x below.
    }
    let q = f.order();
    let xq = poly::pow_mod(f, &poly::x(f), &q, &m);
    let lin = poly::gcd(f, &m, &poly::sub(f, &xq, &poly::x(f)));
    if poly::deg(&lin).map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![lin];
    while let Some(g) = stack.pop() {
        let d = poly::deg(&g).unwrap();
        if d == 1 {
            out.push(f.neg(&g[0]));
            continue;
        }
        let mut factors = Vec::new();
        equal_degree_split(f, &g, 1, &mut factors);
        for fac in factors {
            stack.push(fac);
        }
    }
    out.sort_by_key(|r| f.elem_index(r));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use crate::field::Field;
    use crate::fq::Fq;

    #[test]
    fn irreducibility() {
        let f3 = Fq::new(3, 1).unwrap();
        // x^2 + 1 irreducible over F_3
        let m = vec![f3.one(), f3.zero(), f3.one()];
        assert!(is_irreducible(&f3, &m));
        // x^2 - 1 splits
        let s = vec![f3.from_i64(-1), f3.zero(), f3.one()];
        assert!(!is_irreducible(&f3, &s));
    }

    #[test]
    fn factor_split_quadratic() {
        let f5 = Fq::new(5, 1).unwrap();
        let m = vec![f5.from_i64(-1), f5.zero(), f5.one()]; // x^2 - 1
        let fac = factor_squarefree(&f5, &m);
        assert_eq!(fac.len(), 2);
        for g in &fac {
            assert_eq!(poly::deg(g), Some(1));
        }
    }

    #[test]
    fn roots_of_frobenius_poly() {
        let f7 = Fq::new(7, 1).unwrap();
        // x^3 - 1 has roots 1, 2, 4 mod 7
        let m = vec![f7.from_i64(-1), f7.zero(), f7.zero(), f7.one()];
        let rs = roots(&f7, &m);
        let vals: Vec<u64> = rs.iter().map(|r| r[0]).collect();
        assert_eq!(vals, vec![1, 2, 4]);
    }

    #[test]
    fn factor_char2() {
        let f2 = Fq::new(2, 1).unwrap();
        // x^4 + x = x (x+1) (x^2+x+1)
        let m = vec![f2.zero(), f2.one(), f2.zero(), f2.zero(), f2.one()];
        let fac = factor_squarefree(&f2, &m);
        let degs: Vec<usize> = fac.iter().map(|g| poly::deg(g).unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
    }
}
