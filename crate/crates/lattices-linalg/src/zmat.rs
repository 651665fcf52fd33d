//! Integer matrices: Hermite normal form with transform and saturated
//! kernels of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type ZMat = Vec<Vec<BigInt>>;

pub fn zmat_mul(a: &ZMat, b: &ZMat) -> ZMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let p = &a[i][t] * &b[t][j];
                out[i][j] += p;
            }
        }
    }
    out
}

pub fn zmat_mul_vec(a: &ZMat, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// Row-style Hermite normal form: returns (H, U) with U unimodular and
/// U A = H, H in row echelon form with positive pivots and reduced entries
/// above each pivot.
pub fn hnf_with_transform(a: &ZMat) -> (ZMat, ZMat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut h = a.to_vec();
    let mut u: ZMat = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // euclidean reduction in column c among rows r..
        loop {
            let mut piv: Option<usize> = None;
            for i in r..rows {
                if !h[i][c].is_zero()
                    && piv.map_or(true, |p| h[i][c].abs() < h[p][c].abs())
                {
                    piv = Some(i);
                }
            }
            let Some(p) = piv else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut any = false;
            for i in r + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                // nearest-integer quotient keeps entries small
                let q = nearest_div(&h[i][c], &h[r][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &q * &h[r][j];
                        h[i][j] -= t;
                    }
                    for j in 0..rows {
                        let t = &q * &u[r][j];
                        u[i][j] -= t;
                    }
                }
                if !h[i][c].is_zero() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for j in 0..cols {
                h[r][j] = -h[r][j].clone();
            }
            for j in 0..rows {
                u[r][j] = -u[r][j].clone();
            }
        }
        // reduce entries above the pivot into [0, pivot)
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                for j in 0..cols {
                    let t = &q * &h[r][j];
                    h[i][j] -= t;
                }
                for j in 0..rows {
                    let t = &q * &u[r][j];
                    u[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    (h, u)
}

fn nearest_div(a: &BigInt, b: &BigInt) -> BigInt {
    // round(a/b) without floats
    let two = BigInt::from(2);
    let (q, r) = a.div_mod_floor(b);
    if &r * &two >= b.abs() {
        q + 1
    } else {
        q
    }
}

/// Basis of the saturated kernel {v in Z^n : M v = 0} of an integer matrix
/// with n columns; one basis vector per row of the result.
pub fn integer_kernel(m: &ZMat) -> ZMat {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    // transpose, then unimodular row reduction: zero rows of H pick out kernel
    let mt: ZMat = (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect();
    let (h, u) = hnf_with_transform(&mt);
    let mut kernel = Vec::new();
    for (i, row) in h.iter().enumerate() {
        if row.iter().all(|x| x.is_zero()) {
            kernel.push(u[i].clone());
        }
    }
    kernel
}

/// Certify saturation: the HNF of the kernel basis has all pivots 1, i.e. the
/// rows generate a direct summand of Z^n.
pub fn kernel_is_saturated(kernel: &ZMat) -> bool {
    if kernel.is_empty() {
        return true;
    }
    let (h, _) = hnf_with_transform(kernel);
    let mut pivots = Vec::new();
    for row in &h {
        if let Some(j) = row.iter().position(|x| !x.is_zero()) {
            pivots.push(row[j].clone());
        }
    }
    pivots.len() == kernel.len() && pivots.iter().all(|p| p == &BigInt::from(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(rows: &[&[i64]]) -> ZMat {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_row_vector() {
        let k = integer_kernel(&zm(&[&[2, 3]]));
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!((&v[0] * 2 + &v[1] * 3).is_zero());
        // saturated: (3, -2) not (6, -4)
        assert_eq!(v[0].abs(), BigInt::from(3));
        assert!(kernel_is_saturated(&k));
    }

    #[test]
    fn kernel_saturates_common_factor() {
        let k = integer_kernel(&zm(&[&[2, 4]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0].abs(), BigInt::from(2));
        assert_eq!(k[0][1].abs(), BigInt::from(1));
    }

    #[test]
    fn kernel_of_two_by_three() {
        let m = zm(&[&[1, 1, 1], &[0, 1, 2]]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(zmat_mul_vec(&m, v).iter().all(|x| x.is_zero()));
        // spans (1, -2, 1)
        assert_eq!(v[0].abs(), BigInt::from(1));
        assert_eq!(v[1].abs(), BigInt::from(2));
    }

    #[test]
    fn hnf_transform_is_consistent() {
        let a = zm(&[&[4, 6], &[6, 9], &[2, 5]]);
        let (h, u) = hnf_with_transform(&a);
        assert_eq!(zmat_mul(&u, &a), h);
    }
}
