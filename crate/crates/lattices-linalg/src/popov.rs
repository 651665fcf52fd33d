//! Polynomial matrices over a field: weak Popov reduction, unimodular row
//! reduction with transform, and minimal kernel bases with degree profiles.

use exact_arith::field::Field;
use exact_arith::poly::{self, Poly};

/// Rows of polynomials.
pub type PolyMat<F> = Vec<Vec<Poly<F>>>;

/// Non-decreasing row degrees of a minimal kernel basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeProfile(pub Vec<i64>);

impl DegreeProfile {
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Degree of a row: max entry degree (zero row: None).
pub fn row_degree<F: Field>(row: &[Poly<F>]) -> Option<usize> {
    row.iter().filter_map(|p| poly::deg(p)).max()
}

/// Pivot of a row in the weak Popov sense: the rightmost position whose entry
/// degree attains the row degree.
pub fn pivot_index<F: Field>(row: &[Poly<F>]) -> Option<usize> {
    let d = row_degree(row)?;
    (0..row.len()).rev().find(|&j| poly::deg(&row[j]) == Some(d))
}

/// Weak Popov form by repeated pivot cancellation. Returns the reduced matrix
/// together with the unimodular transform applied (U M = reduced). Zero rows
/// are kept.
pub fn weak_popov<F: Field>(f: &F, m: &PolyMat<F>) -> (PolyMat<F>, PolyMat<F>) {
    let rows = m.len();
    let mut w = m.clone();
    let mut u: PolyMat<F> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    if i == j {
                        poly::constant(f, f.one())
                    } else {
                        poly::zero::<F>()
                    }
                })
                .collect()
        })
        .collect();
    loop {
        // find two rows sharing a pivot index
        let pivots: Vec<Option<usize>> = w.iter().map(|r| pivot_index::<F>(r)).collect();
        let mut clash: Option<(usize, usize)> = None;
        'search: for i in 0..rows {
            let Some(pi) = pivots[i] else { continue };
            for j in i + 1..rows {
                if pivots[j] == Some(pi) {
                    clash = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = clash else { break };
        let (lo, hi) = if row_degree(&w[i]) <= row_degree(&w[j]) {
            (i, j)
        } else {
            (j, i)
        };
        let pc = pivots[i].unwrap();
        let dlo = poly::deg(&w[lo][pc]).unwrap();
        let dhi = poly::deg(&w[hi][pc]).unwrap();
        let c = f.div(&poly::lc(f, &w[hi][pc]), &poly::lc(f, &w[lo][pc]));
        let shift = dhi - dlo;
        // row_hi -= c x^shift row_lo
        for col in 0..w[lo].len() {
            let t = poly::shift(f, &poly::scale(f, &c, &w[lo][col]), shift);
            w[hi][col] = poly::sub(f, &w[hi][col], &t);
        }
        for col in 0..rows {
            let t = poly::shift(f, &poly::scale(f, &c, &u[lo][col]), shift);
            u[hi][col] = poly::sub(f, &u[hi][col], &t);
        }
    }
    (w, u)
}

/// Unimodular row reduction over K[x] to row echelon form (a Hermite-style
/// form): returns (H, U) with U M = H. Used to read off module kernels.
pub fn row_echelon_polymat<F: Field>(f: &F, m: &PolyMat<F>) -> (PolyMat<F>, PolyMat<F>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut h = m.clone();
    let mut u: PolyMat<F> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    if i == j {
                        poly::constant(f, f.one())
                    } else {
                        poly::zero::<F>()
                    }
                })
                .collect()
        })
        .collect();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // smallest-degree nonzero entry in column c among rows r..
            let mut piv: Option<(usize, usize)> = None;
            for i in r..rows {
                if let Some(d) = poly::deg(&h[i][c]) {
                    if piv.map_or(true, |(_, pd)| d < pd) {
                        piv = Some((i, d));
                    }
                }
            }
            let Some((p, _)) = piv else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut any = false;
            for i in r + 1..rows {
                if h[i][c].is_empty() {
                    continue;
                }
                let (q, _) = poly::divrem(f, &h[i][c], &h[r][c]);
                for col in 0..cols {
                    let t = poly::mul(f, &q, &h[r][col]);
                    h[i][col] = poly::sub(f, &h[i][col], &t);
                }
                for col in 0..rows {
                    let t = poly::mul(f, &q, &u[r][col]);
                    u[i][col] = poly::sub(f, &u[i][col], &t);
                }
                if !h[i][c].is_empty() {
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        if !h[r][c].is_empty() {
            r += 1;
        }
    }
    (h, u)
}

/// Minimal (weak Popov) basis of the right kernel {v : M v = 0} of a
/// polynomial matrix, with its non-decreasing degree profile. Rows of the
/// returned matrix are the kernel vectors.
pub fn min_kernel_basis<F: Field>(f: &F, m: &PolyMat<F>) -> (PolyMat<F>, DegreeProfile) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    // transpose so kernel vectors become left-kernel rows
    let mt: PolyMat<F> = (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect();
    let (h, u) = row_echelon_polymat(f, &mt);
    let mut kernel: PolyMat<F> = Vec::new();
    for (i, row) in h.iter().enumerate() {
        if row.iter().all(|p| p.is_empty()) {
            kernel.push(u[i].clone());
        }
    }
    if kernel.is_empty() {
        return (kernel, DegreeProfile(Vec::new()));
    }
    let (mut reduced, _) = weak_popov(f, &kernel);
    reduced.sort_by_key(|r| row_degree(r).map_or(-1, |d| d as i64));
    // normalize each row: monic pivot entry
    for row in reduced.iter_mut() {
        if let Some(p) = pivot_index::<F>(row) {
            let inv = f.inv(&poly::lc(f, &row[p])).unwrap();
            for e in row.iter_mut() {
                *e = poly::scale(f, &inv, e);
            }
        }
    }
    let profile = DegreeProfile(
        reduced
            .iter()
            .map(|r| row_degree(r).map_or(-1, |d| d as i64))
            .collect(),
    );
    (reduced, profile)
}

/// Weak Popov pivot property: all pivots distinct (directly assertable
/// minimality witness).
pub fn has_distinct_pivots<F: Field>(m: &PolyMat<F>) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for row in m {
        if let Some(p) = pivot_index::<F>(row) {
            if !seen.insert(p) {
                return false;
            }
        }
    }
    true
}

/// M v = 0 exactness check for every kernel row.
pub fn kernel_annihilates<F: Field>(f: &F, m: &PolyMat<F>, kernel: &PolyMat<F>) -> bool {
    for v in kernel {
        for row in m {
            let mut acc = poly::zero::<F>();
            for (a, b) in row.iter().zip(v) {
                acc = poly::add(f, &acc, &poly::mul(f, a, b));
            }
            if !acc.is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::fq::Fq;

    fn c(f: &Fq, v: i64) -> Poly<Fq> {
        poly::constant(f, f.from_i64(v))
    }

    #[test]
    fn kernel_of_column_map() {
        // (a, b) -> a x + b over F_3[x]: matrix [x, 1], kernel (1, -x)
        let f = Fq::new(3, 1).unwrap();
        let m: PolyMat<Fq> = vec![vec![poly::x(&f), c(&f, 1)]];
        let (k, prof) = min_kernel_basis(&f, &m);
        assert_eq!(k.len(), 1);
        assert_eq!(prof, DegreeProfile(vec![1]));
        assert!(kernel_annihilates(&f, &m, &k));
        assert!(has_distinct_pivots::<Fq>(&k));
        // spans (1, -x): first coordinate constant
        assert_eq!(poly::deg(&k[0][0]), Some(0));
        assert_eq!(poly::deg(&k[0][1]), Some(1));
    }

    #[test]
    fn kernel_needs_multiple_of_x() {
        // (a, b) -> a (x^2+1) + b x over F_5[x]: kernel (x, -(x^2+1))
        let f = Fq::new(5, 1).unwrap();
        let x2p1 = vec![f.from_i64(1), f.from_i64(0), f.from_i64(1)];
        let m: PolyMat<Fq> = vec![vec![x2p1.clone(), poly::x(&f)]];
        let (k, prof) = min_kernel_basis(&f, &m);
        assert_eq!(prof, DegreeProfile(vec![2]));
        assert!(kernel_annihilates(&f, &m, &k));
    }

    #[test]
    fn zero_map_kernel_is_identity() {
        let f = Fq::new(7, 1).unwrap();
        let m: PolyMat<Fq> = vec![vec![poly::zero::<Fq>(), poly::zero::<Fq>()]];
        let (k, prof) = min_kernel_basis(&f, &m);
        assert_eq!(k.len(), 2);
        assert_eq!(prof, DegreeProfile(vec![0, 0]));
    }

    #[test]
    fn weak_popov_transform_consistent() {
        let f = Fq::new(5, 1).unwrap();
        let m: PolyMat<Fq> = vec![
            vec![poly::x(&f), c(&f, 1)],
            vec![
                poly::mul(&f, &poly::x(&f), &poly::x(&f)),
                poly::x(&f),
            ],
        ];
        let (w, u) = weak_popov(&f, &m);
        // U M = W
        for i in 0..2 {
            for jcol in 0..2 {
                let mut acc = poly::zero::<Fq>();
                for t in 0..2 {
                    acc = poly::add(&f, &acc, &poly::mul(&f, &u[i][t], &m[t][jcol]));
                }
                assert_eq!(acc, w[i][jcol]);
            }
        }
        assert!(has_distinct_pivots::<Fq>(&w.iter().cloned().filter(|r| row_degree(r).is_some()).collect::<Vec<_>>()));
    }
}
