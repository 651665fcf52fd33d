//! LLL reduction, all-integer variant working on the Gram matrix.
//!
//! The core maintains the integral Gram-Schmidt data (lambda, D) so every
//! step is exact integer arithmetic. Running on a Gram matrix alone makes the
//! same code serve both integer row bases and the fixed-point Gram matrices
//! coming from the canonical metric on a number field (scale the dyadic
//! entries to integers first; scaling does not change reducedness).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ZMat = Vec<Vec<BigInt>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GramLllError {
    /// The Gram matrix is not positive definite at this precision; the caller
    /// should retry with more precision.
    NotPositiveDefinite,
}

impl std::fmt::Display for GramLllError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "gram matrix not positive definite at working precision")
    }
}

impl std::error::Error for GramLllError {}

struct GramState {
    n: usize,
    g: ZMat,
    u: ZMat,
    lam: Vec<Vec<BigInt>>,
    d: Vec<BigInt>,
}

impl GramState {
    fn init(g: ZMat) -> Result<Self, GramLllError> {
        let n = g.len();
        let u: ZMat = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let mut st = GramState {
            n,
            g,
            u,
            lam: vec![vec![BigInt::zero(); n]; n],
            d: vec![BigInt::one(); n + 1],
        };
        for i in 0..n {
            for j in 0..=i {
                let mut uacc = st.g[i][j].clone();
                for k in 0..j {
                    let num = &st.d[k + 1] * &uacc - &st.lam[i][k] * &st.lam[j][k];
                    let (q, r) = num_integer::Integer::div_rem(&num, &st.d[k]);
                    debug_assert!(r.is_zero());
                    uacc = q;
                }
                if j < i {
                    st.lam[i][j] = uacc;
                } else {
                    if uacc <= BigInt::zero() {
                        return Err(GramLllError::NotPositiveDefinite);
                    }
                    st.d[i + 1] = uacc;
                }
            }
        }
        Ok(st)
    }

    fn red(&mut self, k: usize, l: usize) {
        let two_lam = &self.lam[k][l] * 2;
        if two_lam.abs() <= self.d[l + 1] {
            return;
        }
        let q = nearest_div(&self.lam[k][l], &self.d[l + 1]);
        // b_k -= q b_l
        for j in 0..self.n {
            let t = &q * &self.u[l][j];
            self.u[k][j] -= t;
        }
        for j in 0..self.n {
            let t = &q * &self.g[l][j];
            self.g[k][j] -= t;
        }
        for j in 0..self.n {
            let t = &q * &self.g[j][l];
            self.g[j][k] -= t;
        }
        for j in 0..l {
            let t = &q * &self.lam[l][j];
            self.lam[k][j] -= t;
        }
        let t = &q * &self.d[l + 1];
        self.lam[k][l] -= t;
    }

    fn swap(&mut self, k: usize) {
        self.u.swap(k - 1, k);
        self.g.swap(k - 1, k);
        for row in self.g.iter_mut() {
            row.swap(k - 1, k);
        }
        for j in 0..k.saturating_sub(1) {
            let tmp = self.lam[k][j].clone();
            self.lam[k][j] = self.lam[k - 1][j].clone();
            self.lam[k - 1][j] = tmp;
        }
        let lam = self.lam[k][k - 1].clone();
        let num = &self.d[k - 1] * &self.d[k + 1] + &lam * &lam;
        let (newd, rr) = num_integer::Integer::div_rem(&num, &self.d[k]);
        debug_assert!(rr.is_zero());
        for i in k + 1..self.n {
            let t = self.lam[i][k].clone();
            let num = &self.d[k + 1] * &self.lam[i][k - 1] - &lam * &t;
            let (q, r) = num_integer::Integer::div_rem(&num, &self.d[k]);
            debug_assert!(r.is_zero());
            self.lam[i][k] = q;
            let num = &newd * &t + &lam * &self.lam[i][k];
            let (q, r) = num_integer::Integer::div_rem(&num, &self.d[k + 1]);
            debug_assert!(r.is_zero());
            self.lam[i][k - 1] = q;
        }
        self.d[k] = newd;
    }

    fn run(&mut self, delta_num: u64, delta_den: u64) {
        let dn = BigInt::from(delta_num);
        let dd = BigInt::from(delta_den);
        let mut k = 1usize;
        while k < self.n {
            self.red(k, k - 1);
            let lam = &self.lam[k][k - 1];
            let lhs = &dd * (&self.d[k + 1] * &self.d[k - 1] + lam * lam);
            let rhs = &dn * (&self.d[k] * &self.d[k]);
            if lhs < rhs {
                self.swap(k);
                k = if k > 1 { k - 1 } else { 1 };
            } else {
                for l in (0..k.saturating_sub(1)).rev() {
                    self.red(k, l);
                }
                k += 1;
            }
        }
    }
}

fn nearest_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    if &r * 2 >= b.abs() {
        q + 1
    } else {
        q
    }
}

/// LLL-reduce an integer Gram matrix in place of a basis: returns the
/// unimodular transform U such that U B is reduced when G = B B^t.
pub fn gram_lll(g: &ZMat, delta_num: u64, delta_den: u64) -> Result<ZMat, GramLllError> {
    assert!(delta_num * 4 > delta_den && delta_num < delta_den);
    let mut st = GramState::init(g.clone())?;
    st.run(delta_num, delta_den);
    Ok(st.u)
}

/// LLL-reduce a rational symmetric positive-definite Gram matrix (the
/// fixed-point surrogate for the canonical-metric Gram): scales to integers,
/// then runs the exact core.
pub fn gram_lll_rational(
    g: &[Vec<BigRational>],
    delta_num: u64,
    delta_den: u64,
) -> Result<ZMat, GramLllError> {
    let mut scale = BigInt::one();
    for row in g {
        for x in row {
            scale = num_integer::Integer::lcm(&scale, x.denom());
        }
    }
    let gi: ZMat = g
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let v = x * BigRational::from(scale.clone());
                    debug_assert!(v.denom().is_one());
                    v.numer().clone()
                })
                .collect()
        })
        .collect();
    gram_lll(&gi, delta_num, delta_den)
}

/// LLL-reduce integer basis rows; returns (reduced rows, transform).
pub fn lll_reduce(basis: &ZMat, delta_num: u64, delta_den: u64) -> (ZMat, ZMat) {
    let n = basis.len();
    let mut g = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = basis[i]
                .iter()
                .zip(&basis[j])
                .map(|(x, y)| x * y)
                .sum();
        }
    }
    let u = gram_lll(&g, delta_num, delta_den).expect("independent rows have a PD gram");
    let reduced = crate::zmat::zmat_mul(&u, basis);
    (reduced, u)
}

/// Check size-reduction and the Lovasz condition on a Gram matrix with exact
/// rational Gram-Schmidt (independent of the incremental bookkeeping above).
pub fn lovasz_holds_gram(g: &ZMat, delta_num: u64, delta_den: u64) -> bool {
    let n = g.len();
    let q = |x: &BigInt| BigRational::from(x.clone());
    // rational GSO from the Gram matrix
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut bstar = vec![BigRational::zero(); n];
    for i in 0..n {
        // <b_i, b*_j> derived from gram and mu
        for j in 0..i {
            let mut dot = q(&g[i][j]);
            for k in 0..j {
                let t = &mu[j][k] * &mu[i][k] * &bstar[k];
                dot -= t;
            }
            mu[i][j] = if bstar[j].is_zero() {
                BigRational::zero()
            } else {
                dot / &bstar[j]
            };
        }
        let mut norm = q(&g[i][i]);
        for k in 0..i {
            let t = &mu[i][k] * &mu[i][k] * &bstar[k];
            norm -= t;
        }
        bstar[i] = norm;
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let delta = BigRational::new(BigInt::from(delta_num), BigInt::from(delta_den));
    for i in 0..n {
        for j in 0..i {
            if mu[i][j].abs() > half {
                return false;
            }
        }
        if i >= 1 {
            let lhs = &bstar[i] + &mu[i][i - 1] * &mu[i][i - 1] * &bstar[i - 1];
            let rhs = &delta * &bstar[i - 1];
            if lhs < rhs {
                return false;
            }
        }
    }
    true
}

/// Same check from basis rows.
pub fn lovasz_holds(basis: &ZMat, delta_num: u64, delta_den: u64) -> bool {
    let n = basis.len();
    let mut g = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = basis[i].iter().zip(&basis[j]).map(|(x, y)| x * y).sum();
        }
    }
    lovasz_holds_gram(&g, delta_num, delta_den)
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
    fn reduces_shear() {
        let (red, u) = lll_reduce(&zm(&[&[1, 0], &[4, 1]]), 99, 100);
        assert!(lovasz_holds(&red, 99, 100));
        // same lattice: transform unimodular, and result holds +-e1, +-e2
        let mut sorted: Vec<Vec<BigInt>> = red
            .iter()
            .map(|r| r.iter().map(|x| x.abs()).collect())
            .collect();
        sorted.sort();
        assert_eq!(sorted, zm(&[&[0, 1], &[1, 0]]));
        let det = &u[0][0] * &u[1][1] - &u[0][1] * &u[1][0];
        assert_eq!(det.abs(), BigInt::one());
    }

    #[test]
    fn orthonormal_unchanged() {
        let b = zm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let (red, _) = lll_reduce(&b, 99, 100);
        assert_eq!(red, b);
    }

    #[test]
    fn finds_short_difference() {
        let (red, _) = lll_reduce(&zm(&[&[201, 0], &[200, 1]]), 99, 100);
        assert!(lovasz_holds(&red, 99, 100));
        // exhaustive: shortest vectors of this lattice are +-(1, -1)
        let has = red
            .iter()
            .any(|r| (r[0].abs(), r[1].abs()) == (BigInt::one(), BigInt::one()));
        assert!(has, "reduced basis contains (-1, 1) up to sign: {red:?}");
    }

    #[test]
    fn gram_skew_becomes_identity() {
        let g = zm(&[&[2, 1], &[1, 1]]);
        let u = gram_lll(&g, 99, 100).unwrap();
        // G' = U G U^t must be the identity
        let gu = crate::zmat::zmat_mul(&u, &g);
        let ut: ZMat = (0..2).map(|i| (0..2).map(|j| u[j][i].clone()).collect()).collect();
        let gp = crate::zmat::zmat_mul(&gu, &ut);
        assert_eq!(gp, zm(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn gaussian_integer_gram_untouched() {
        // Gram of {1, i} in Q(i) under the canonical metric
        let g = zm(&[&[2, 0], &[0, 2]]);
        let u = gram_lll(&g, 99, 100).unwrap();
        assert_eq!(u, zm(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn rejects_indefinite() {
        let g = zm(&[&[1, 0], &[0, -1]]);
        assert_eq!(
            gram_lll(&g, 99, 100).unwrap_err(),
            GramLllError::NotPositiveDefinite
        );
    }

    #[test]
    fn random_lattice_invariants() {
        // deterministic pseudo-random basis; check lovasz + unimodularity
        let mut state = 12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 50) - 25
        };
        for _ in 0..10 {
            let b: ZMat = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| BigInt::from(next() + if i == j { 100 } else { 0 }))
                        .collect()
                })
                .collect();
            let (red, u) = lll_reduce(&b, 99, 100);
            assert!(lovasz_holds(&red, 99, 100));
            let det_b4 = exact_arith::zpoly::bareiss_det(b.clone());
            let det_red = exact_arith::zpoly::bareiss_det(red.clone());
            assert_eq!(det_b4.abs(), det_red.abs());
            let _ = u;
        }
    }
}
