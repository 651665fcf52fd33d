//! Newton/Hensel lifting of simple roots of square polynomial systems over a
//! complete local ring, with precision doubling per step.

use crate::ArithError;

/// A truncated complete local ring (S[[t]]/t^m or Z_{p^s}/p^m): enough
/// structure for Newton iteration. `reduce_to` truncates to lower precision,
/// `lift_into` re-interprets an element of a lower-precision copy in `self`
/// (any lift is acceptable for the iteration).
pub trait LocalRing: Clone {
    type El: Clone + PartialEq + std::fmt::Debug;

    fn precision(&self) -> usize;
    fn with_precision(&self, m: usize) -> Self;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn is_unit(&self, a: &Self::El) -> bool;
    fn invert(&self, a: &Self::El) -> Option<Self::El>;
    fn reduce_to(&self, a: &Self::El, m: usize) -> Self::El;
    fn lift_into(&self, a: &Self::El) -> Self::El;
}

/// Solve J x = b over a local ring by Gaussian elimination on unit pivots.
/// Succeeds iff det J is a unit.
pub fn solve_unit_system<R: LocalRing>(
    ring: &R,
    jac: &[Vec<R::El>],
    rhs: &[R::El],
) -> Option<Vec<R::El>> {
    let n = jac.len();
    let mut m: Vec<Vec<R::El>> = jac
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| ring.is_unit(&m[i][c]))?;
        m.swap(c, piv);
        let inv = ring.invert(&m[c][c]).unwrap();
        for j in c..=n {
            m[c][j] = ring.mul(&inv, &m[c][j]);
        }
        for i in 0..n {
            if i != c {
                let factor = m[i][c].clone();
                if ring.is_zero(&factor) {
                    continue;
                }
                for j in c..=n {
                    let t = ring.mul(&factor, &m[c][j]);
                    m[i][j] = ring.sub(&m[i][j], &t);
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// An evaluable square system: values and Jacobian of r equations in r
/// unknowns, at any requested precision of the ambient local ring.
pub trait LocalSystem<R: LocalRing> {
    /// (values, jacobian) at the given ring precision.
    fn eval(&self, ring: &R, point: &[R::El]) -> (Vec<R::El>, Vec<Vec<R::El>>);
}

/// Hensel-lift an approximate root known at precision m0 to precision m1.
///
/// Preconditions (checked): the equations vanish at the point to precision
/// m0, and the Jacobian determinant is a unit. Newton doubles the precision
/// each step; the result is truncated to exactly m1 digits.
pub fn lift_root<R: LocalRing, S: LocalSystem<R>>(
    ring_template: &R,
    system: &S,
    x0: &[R::El],
    m0: usize,
    m1: usize,
) -> Result<Vec<R::El>, ArithError> {
    assert!(m0 >= 1 && m1 >= m0);
    // check vanishing at m0
    let r0 = ring_template.with_precision(m0);
    let x0_r: Vec<R::El> = x0.iter().map(|x| r0.lift_into(x)).collect();
    let (vals, jac) = system.eval(&r0, &x0_r);
    if vals.iter().any(|v| !r0.is_zero(v)) {
        return Err(ArithError::NotARoot);
    }
    // Jacobian must be a unit: check at precision 1 via solvability
    let rhs0 = vec![r0.zero(); x0.len()];
    if solve_unit_system(&r0, &jac, &rhs0).is_none() {
        return Err(ArithError::JacobianNotUnit);
    }
    let mut prec = m0;
    let mut x = x0_r;
    while prec < m1 {
        let next = (prec * 2).min(m1);
        let rn = ring_template.with_precision(next);
        let mut xn: Vec<R::El> = x.iter().map(|v| rn.lift_into(v)).collect();
        let (vals, jac) = system.eval(&rn, &xn);
        let delta = solve_unit_system(&rn, &jac, &vals).ok_or(ArithError::JacobianNotUnit)?;
        for (xi, di) in xn.iter_mut().zip(&delta) {
            *xi = rn.sub(xi, di);
        }
        // one Newton step from m correct digits gives 2m
        let (check, _) = system.eval(&rn, &xn);
        if check.iter().any(|v| !rn.is_zero(v)) {
            return Err(ArithError::NotARoot);
        }
        x = xn;
        prec = next;
    }
    let rfinal = ring_template.with_precision(m1);
    Ok(x.iter().map(|v| rfinal.reduce_to(v, m1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::Fq;
    use crate::multipoly::{MultiPoly, ZRing};
    use crate::zq::ZqRing;
    use num_bigint::BigInt;

    struct IntSystem {
        eqs: Vec<MultiPoly<ZRing>>,
    }

    impl LocalSystem<ZqRing> for IntSystem {
        fn eval(&self, ring: &ZqRing, point: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<Vec<BigInt>>>) {
            let zr = ZRing;
            struct A<'a>(&'a ZqRing);
            impl<'a> crate::multipoly::EvalAlgebra<ZRing> for A<'a> {
                type El = Vec<BigInt>;
                fn zero(&self) -> Self::El {
                    LocalRing::zero(self.0)
                }
                fn one(&self) -> Self::El {
                    LocalRing::one(self.0)
                }
                fn add(&self, a: &Self::El, b: &Self::El) -> Self::El {
                    LocalRing::add(self.0, a, b)
                }
                fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El {
                    LocalRing::mul(self.0, a, b)
                }
                fn scalar(&self, c: &BigInt) -> Self::El {
                    self.0.from_int(c)
                }
            }
            let alg = A(ring);
            let vals = self.eqs.iter().map(|e| e.eval(&zr, &alg, point)).collect();
            let jac = self
                .eqs
                .iter()
                .map(|e| {
                    (0..point.len())
                        .map(|j| e.derivative(&zr, j).eval(&zr, &alg, point))
                        .collect()
                })
                .collect();
            (vals, jac)
        }
    }

    #[test]
    fn lift_sqrt2_over_z7() {
        // x^2 - 2, x0 = 3 mod 7 -> 10 mod 49 -> 108 mod 343
        let zr = ZRing;
        let mut eq = MultiPoly::<ZRing>::zero(1);
        eq.add_term(&zr, vec![2], BigInt::from(1));
        eq.add_term(&zr, vec![0], BigInt::from(-2));
        let sys = IntSystem { eqs: vec![eq] };
        let ring = ZqRing::new(7, 1, 1);
        let x0 = vec![ring.from_int(&BigInt::from(3))];
        let lifted = lift_root(&ring, &sys, &x0, 1, 2).unwrap();
        assert_eq!(lifted[0][0], BigInt::from(10));
        let lifted3 = lift_root(&ring, &sys, &x0, 1, 3).unwrap();
        assert_eq!(lifted3[0][0], BigInt::from(108));
        // truncating back is the identity on the input precision
        let back = ZqRing::new(7, 1, 3).reduce_to(&lifted3[0], 1);
        assert_eq!(back[0], BigInt::from(3));
    }

    #[test]
    fn reject_non_root() {
        let zr = ZRing;
        let mut eq = MultiPoly::<ZRing>::zero(1);
        eq.add_term(&zr, vec![2], BigInt::from(1));
        eq.add_term(&zr, vec![0], BigInt::from(-2));
        let sys = IntSystem { eqs: vec![eq] };
        let ring = ZqRing::new(7, 1, 1);
        let bad = vec![ring.from_int(&BigInt::from(2))];
        assert_eq!(lift_root(&ring, &sys, &bad, 1, 2).unwrap_err(), ArithError::NotARoot);
    }

    #[test]
    fn reject_singular_jacobian() {
        // x^2 has a double root at 0: jacobian 2x not a unit
        let zr = ZRing;
        let mut eq = MultiPoly::<ZRing>::zero(1);
        eq.add_term(&zr, vec![2], BigInt::from(1));
        let sys = IntSystem { eqs: vec![eq] };
        let ring = ZqRing::new(7, 1, 1);
        let x0 = vec![ring.from_int(&BigInt::from(0))];
        assert_eq!(
            lift_root(&ring, &sys, &x0, 1, 2).unwrap_err(),
            ArithError::JacobianNotUnit
        );
    }

    #[test]
    fn quadratic_residue_error_path() {
        // y^2 = 5 over F_7: 5 is a non-residue (5^3 = 6 mod 7), so there is no
        // initial digit and the caller must re-randomize.
        let f7 = Fq::new(7, 1).unwrap();
        use crate::field::Field;
        let five = f7.from_i64(5);
        let euler = f7.pow_u64(&five, 3);
        assert_eq!(euler, f7.from_i64(-1));
        let roots = crate::polyfactor::roots(
            &f7,
            &vec![f7.from_i64(-5), f7.zero(), f7.one()],
        );
        assert!(roots.is_empty());
    }
}
