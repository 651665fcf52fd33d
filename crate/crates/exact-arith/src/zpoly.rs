//! Integer polynomials: exact arithmetic, resultants and discriminants via
//! fraction-free determinants, and factorization over Z (modular factorization,
//! quadratic Hensel lifting, subset recombination).

use crate::fq::Fq;
use crate::intutil::{is_prime_u64, nth_root_ceil};
use crate::poly;
use crate::polyfactor;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn ztrim(p: &mut ZPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub fn zdeg(p: &ZPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigInt::zero)
                + b.get(i).cloned().unwrap_or_else(BigInt::zero)
        })
        .collect();
    ztrim(&mut out);
    out
}

pub fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigInt::zero)
                - b.get(i).cloned().unwrap_or_else(BigInt::zero)
        })
        .collect();
    ztrim(&mut out);
    out
}

pub fn zneg(a: &ZPoly) -> ZPoly {
    a.iter().map(|c| -c).collect()
}

pub fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(&mut out);
    out
}

pub fn zscale(c: &BigInt, a: &ZPoly) -> ZPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| c * x).collect()
}

pub fn zeval(p: &ZPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn zderivative(p: &ZPoly) -> ZPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out: ZPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    ztrim(&mut out);
    out
}

pub fn zlc(p: &ZPoly) -> BigInt {
    p.last().cloned().unwrap_or_else(BigInt::zero)
}

pub fn zcontent(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn zprimitive(p: &ZPoly) -> ZPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = zcontent(p);
    if zlc(p).is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Exact division over Z; None if not exact.
pub fn zdiv_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.is_empty() || a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    let blc = zlc(b);
    while rem.len() >= b.len() && !rem.is_empty() {
        let (q, r) = zlc(&rem).div_rem(&blc);
        if !r.is_zero() {
            return None;
        }
        let d = rem.len() - b.len();
        quo[d] = q.clone();
        for (i, c) in b.iter().enumerate() {
            rem[d + i] -= &q * c;
        }
        ztrim(&mut rem);
    }
    if rem.is_empty() {
        ztrim(&mut quo);
        Some(quo)
    } else {
        None
    }
}

/// gcd over Z of the primitive parts (primitive PRS), result primitive with
/// positive leading coefficient.
pub fn zgcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut a = zprimitive(a);
    let mut b = zprimitive(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // pseudo-remainder: lc(b)^(d+1) a = q b + r divides exactly throughout
        let d = a.len() as i64 - b.len() as i64;
        let mut r = zscale(&zlc(&b).pow((d + 1) as u32), &a);
        while r.len() >= b.len() && !r.is_empty() {
            let (q, rr) = zlc(&r).div_rem(&zlc(&b));
            debug_assert!(rr.is_zero());
            let deg = r.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                r[deg + i] -= &q * c;
            }
            ztrim(&mut r);
        }
        a = b;
        b = zprimitive(&r);
    }
    zprimitive(&a)
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(sw) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, sw);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Resultant via the Sylvester matrix.
pub fn zresultant(a: &ZPoly, b: &ZPoly) -> BigInt {
    let (da, db) = match (zdeg(a), zdeg(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return BigInt::zero(),
    };
    if da == 0 {
        return a[0].pow(db as u32);
    }
    if db == 0 {
        return b[0].pow(da as u32);
    }
    let n = da + db;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..db {
        for (j, c) in a.iter().enumerate() {
            m[i][i + da - j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in b.iter().enumerate() {
            m[db + i][i + db - j] = c.clone();
        }
    }
    bareiss_det(m)
}

/// Discriminant of a polynomial of degree >= 1.
pub fn zdiscriminant(f: &ZPoly) -> BigInt {
    let n = zdeg(f).expect("discriminant of zero polynomial") as i64;
    if n == 0 {
        return BigInt::one();
    }
    let res = zresultant(f, &zderivative(f));
    let lc = zlc(f);
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let (q, r) = res.div_rem(&lc);
    debug_assert!(r.is_zero());
    if sign > 0 {
        q
    } else {
        -q
    }
}

pub fn zsup_norm(f: &ZPoly) -> BigInt {
    f.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn znorm2_sq(f: &ZPoly) -> BigInt {
    f.iter().map(|c| c * c).sum()
}

// --- arithmetic of polynomials modulo m (m = p^k) ---

fn modp(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    r
}

fn zpoly_mod(f: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = f.iter().map(|c| modp(c, m)).collect();
    ztrim(&mut out);
    out
}

fn zmul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    zpoly_mod(&zmul(a, b), m)
}

/// Division with remainder by a monic polynomial, coefficients mod m.
fn zdivrem_monic_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    assert!(zlc(b).is_one());
    let mut rem = zpoly_mod(a, m);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let d = rem.len() - b.len();
        let c = zlc(&rem);
        quo[d] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            rem[d + i] = modp(&(&rem[d + i] - &c * bc), m);
        }
        ztrim(&mut rem);
    }
    (zpoly_mod(&quo, m), rem)
}

/// Symmetric representative in (-m/2, m/2].
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zpoly_symmetric(f: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = f.iter().map(|c| symmetric(c, m)).collect();
    ztrim(&mut out);
    out
}

/// One quadratic Hensel step: from f = g h (mod m) with Bezout s g + t h = 1
/// (mod m), all monic except s, t, to the same data mod m2 (m | m2 | m^2).
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m2: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = zpoly_mod(&zsub(f, &zmul(g, h)), m2);
    let (q, r) = zdivrem_monic_mod(&zmul_mod(s, &e, m2), h, m2);
    let mut gstar = zpoly_mod(&zadd(&zadd(g, &zmul_mod(t, &e, m2)), &zmul_mod(&q, g, m2)), m2);
    let hstar = zpoly_mod(&zadd(h, &r), m2);
    // coefficients above deg g are provably divisible by m2
    gstar.truncate(g.len());
    ztrim(&mut gstar);
    // lift the Bezout pair
    let b = zpoly_mod(
        &zsub(&zadd(&zmul(s, &gstar), &zmul(t, &hstar)), &[BigInt::one()].to_vec()),
        m2,
    );
    let (c, d) = zdivrem_monic_mod(&zmul_mod(s, &b, m2), &hstar, m2);
    let sstar = zpoly_mod(&zsub(s, &d), m2);
    let tstar = zpoly_mod(&zsub(t, &zadd(&zmul_mod(t, &b, m2), &zmul_mod(&c, &gstar, m2))), m2);
    (gstar, hstar, sstar, tstar)
}

/// Lift a monic factorization of monic f mod p to mod p^K, recursively.
fn hensel_multifactor(f: &ZPoly, factors: &[ZPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![zpoly_mod(f, target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let pm = BigInt::from(p);
    let mut g: ZPoly = vec![BigInt::one()];
    for fac in left {
        g = zmul_mod(&g, fac, &pm);
    }
    let mut h: ZPoly = vec![BigInt::one()];
    for fac in right {
        h = zmul_mod(&h, fac, &pm);
    }
    // Bezout over F_p
    let fp = Fq::new(p, 1).unwrap();
    let to_fp = |z: &ZPoly| -> Vec<Vec<u64>> {
        let mut v: Vec<Vec<u64>> = z
            .iter()
            .map(|c| vec![c.mod_floor(&pm).to_u64_digits().1.first().copied().unwrap_or(0)])
            .collect();
        poly::trim(&fp, &mut v);
        v
    };
    let from_fp = |v: &Vec<Vec<u64>>| -> ZPoly {
        let mut out: ZPoly = v.iter().map(|c| BigInt::from(c[0])).collect();
        ztrim(&mut out);
        out
    };
    let (gg, ss, tt) = poly::egcd(&fp, &to_fp(&g), &to_fp(&h));
    assert!(poly::deg(&gg) == Some(0), "factors not coprime mod p");
    let mut s = from_fp(&ss);
    let mut t = from_fp(&tt);
    // climb p -> p^2 -> p^4 -> ... -> target
    let mut modulus = pm.clone();
    let mut g = g;
    let mut h = h;
    while modulus < *target {
        let next = (&modulus * &modulus).min(target.clone());
        let (g2, h2, s2, t2) = hensel_step(&zpoly_mod(f, &next), &g, &h, &s, &t, &next);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        modulus = next;
    }
    let mut out = hensel_multifactor(&g, left, p, target);
    out.extend(hensel_multifactor(&h, right, p, target));
    out
}

/// Factor a nonzero integer polynomial into content and irreducible primitive
/// factors with multiplicity, each with positive leading coefficient.
pub fn zfactor(f: &ZPoly) -> (BigInt, Vec<(ZPoly, usize)>) {
    assert!(!f.is_empty());
    let mut content = zcontent(f);
    if zlc(f).is_negative() {
        content = -content;
    }
    let w = zprimitive(f);
    if zdeg(&w) == Some(0) {
        return (content, Vec::new());
    }
    // squarefree part carries one copy of every irreducible factor
    let g = zgcd(&w, &zderivative(&w));
    let sqfree = zdiv_exact(&w, &g).expect("gcd divides");
    let mut out: Vec<(ZPoly, usize)> = Vec::new();
    for fac in zfactor_squarefree(&zprimitive(&sqfree)) {
        let mut count = 0usize;
        let mut r = w.clone();
        while let Some(q) = zdiv_exact(&r, &fac) {
            count += 1;
            r = q;
        }
        out.push((fac, count));
    }
    debug_assert_eq!(
        out.iter().map(|(p, m)| (p.len() - 1) * m).sum::<usize>(),
        w.len() - 1
    );
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    (content, out)
}

pub fn zis_irreducible(f: &ZPoly) -> bool {
    match zdeg(f) {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let p = zprimitive(f);
            let (_, facs) = zfactor(&p);
            facs.len() == 1 && facs[0].1 == 1 && facs[0].0.len() == p.len()
        }
    }
}

/// Factor a primitive squarefree polynomial of degree >= 1.
fn zfactor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = zdeg(f).unwrap();
    if n == 1 {
        return vec![f.clone()];
    }
    let lc = zlc(f);
    // pick a prime keeping f squarefree mod p, preferring few modular factors
    let mut best: Option<(u64, Vec<Vec<Vec<u64>>>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 5 {
        p += 1;
        while !is_prime_u64(p) {
            p += 1;
        }
        let pb = BigInt::from(p);
        if (&lc % &pb).is_zero() {
            continue;
        }
        let fp = Fq::new(p, 1).unwrap();
        let mut fmod: Vec<Vec<u64>> = f
            .iter()
            .map(|c| vec![c.mod_floor(&pb).to_u64_digits().1.first().copied().unwrap_or(0)])
            .collect();
        poly::trim(&fp, &mut fmod);
        let der = poly::derivative(&fp, &fmod);
        if der.is_empty() || poly::deg(&poly::gcd(&fp, &fmod, &der)) != Some(0) {
            continue;
        }
        tried += 1;
        let monic = poly::monic(&fp, &fmod);
        let facs = polyfactor::factor_squarefree(&fp, &monic);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, modular) = best.expect("found a usable prime");
    // Landau-Mignotte style bound on factor coefficients, times lc
    let norm2 = nth_root_ceil(&znorm2_sq(f).magnitude().clone(), 2);
    let bound = (BigInt::from_biguint(Sign::Plus, norm2) + lc.abs())
        * BigInt::from(2).pow(n as u32 + 1)
        * lc.abs();
    let mut target = BigInt::from(p);
    while target <= &bound * 2 {
        target = &target * &target;
    }
    // lift monic factorization of f/lc mod p^K
    let lcinv_mod = mod_inverse(&lc, &target).expect("lc invertible mod p^K");
    let fmonic = zpoly_mod(&zscale(&lcinv_mod, f), &target);
    let modular_z: Vec<ZPoly> = modular
        .iter()
        .map(|g| {
            let mut v: ZPoly = g.iter().map(|c| BigInt::from(c[0])).collect();
            ztrim(&mut v);
            v
        })
        .collect();
    let lifted = hensel_multifactor(&fmonic, &modular_z, p, &target);
    // recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut fcur = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let indices: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&indices, size) {
            let lcur = zlc(&fcur);
            let mut cand: ZPoly = vec![lcur.clone()];
            for &i in &combo {
                cand = zmul_mod(&cand, &remaining[i], &target);
            }
            let cand = zprimitive(&zpoly_symmetric(&cand, &target));
            if let Some(q) = zdiv_exact(&fcur, &cand) {
                out.push(cand);
                fcur = zprimitive(&q);
                let mut keep = Vec::new();
                for (i, g) in remaining.drain(..).enumerate() {
                    if !combo.contains(&i) {
                        keep.push(g);
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if zdeg(&fcur).map_or(false, |d| d >= 1) {
        out.push(zprimitive(&fcur));
    }
    out.sort_by(|a, b| (a.len(), &*a).cmp(&(b.len(), &*b)));
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((cur, start)) = stack.pop() {
        if cur.len() == k {
            out.push(cur);
            continue;
        }
        for i in (start..items.len()).rev() {
            let mut next = cur.clone();
            next.push(items[i]);
            stack.push((next, i + 1));
        }
    }
    out
}

/// Inverse of a modulo m for gcd(a, m) = 1.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        let mut out: ZPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        ztrim(&mut out);
        out
    }

    #[test]
    fn resultant_and_discriminant() {
        // disc(x^2 + 1) = -4
        assert_eq!(zdiscriminant(&zp(&[1, 0, 1])), BigInt::from(-4));
        // disc(x^2 - 5) = 20
        assert_eq!(zdiscriminant(&zp(&[-5, 0, 1])), BigInt::from(20));
        // disc(x^3 - x - 1) = -23
        assert_eq!(zdiscriminant(&zp(&[-1, -1, 0, 1])), BigInt::from(-23));
    }

    #[test]
    fn factor_products() {
        let f = zmul(&zp(&[-2, 0, 1]), &zp(&[-3, 0, 1])); // (x^2-2)(x^2-3)
        let (c, facs) = zfactor(&f);
        assert!(c.is_one());
        assert_eq!(facs.len(), 2);
        assert!(facs.iter().all(|(_, m)| *m == 1));
        assert!(zis_irreducible(&zp(&[-2, 0, 1])));
        // x^4 + 1 factors modulo every prime but is irreducible over Z
        assert!(zis_irreducible(&zp(&[1, 0, 0, 0, 1])));
        assert!(!zis_irreducible(&zp(&[-1, 0, 1])));
    }

    #[test]
    fn factor_with_multiplicity_and_content() {
        // 6 (x-1)^2 (x+2)
        let f = zscale(
            &BigInt::from(6),
            &zmul(&zmul(&zp(&[-1, 1]), &zp(&[-1, 1])), &zp(&[2, 1])),
        );
        let (c, facs) = zfactor(&f);
        assert_eq!(c, BigInt::from(6));
        let total: usize = facs
            .iter()
            .map(|(p, m)| (p.len() - 1) * m)
            .sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn gcd_primitive() {
        let a = zmul(&zp(&[-1, 1]), &zp(&[1, 1]));
        let b = zmul(&zp(&[-1, 1]), &zp(&[3, 1]));
        assert_eq!(zgcd(&a, &b), zp(&[-1, 1]));
    }
}
