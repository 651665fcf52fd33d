//! Dense linear algebra over a generic exact field: elimination, rank,
//! kernel, solving, inverse, determinant, RREF.

use crate::field::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn new(f: &F, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![f.zero(); rows * cols],
        }
    }

    pub fn from_rows(f: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        let _ = f;
        Mat { rows: r, cols: c, data }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Mat::new(f, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = f.one();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F::Elem {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self, f: &F) -> Self {
        let mut t = Mat::new(f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, f: &F, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::new(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other.at(k, j));
                    *out.at_mut(i, j) = f.add(out.at(i, j), &t);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }
}

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.at(i, c))) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, pr * m.cols + j);
            }
        }
        let inv = f.inv(m.at(r, c)).unwrap();
        for j in c..m.cols {
            *m.at_mut(r, j) = f.mul(&inv, m.at(r, j));
        }
        for i in 0..m.rows {
            if i != r && !f.is_zero(m.at(i, c)) {
                let factor = m.at(i, c).clone();
                for j in c..m.cols {
                    let t = f.mul(&factor, m.at(r, j));
                    *m.at_mut(i, j) = f.sub(m.at(i, j), &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Mat<F>) -> usize {
    let mut w = m.clone();
    rref(f, &mut w).len()
}

/// Basis of the right kernel {v : M v = 0}, one vector per row of the result.
pub fn right_kernel<F: Field>(f: &F, m: &Mat<F>) -> Vec<Vec<F::Elem>> {
    let mut w = m.clone();
    let pivots = rref(f, &mut w);
    let mut free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.sort_unstable();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![f.zero(); m.cols];
        v[fc] = f.one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(w.at(ri, fc));
        }
        basis.push(v);
    }
    basis
}

/// Solve M x = b; None if inconsistent. Returns one solution.
pub fn solve<F: Field>(f: &F, m: &Mat<F>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Mat::new(f, m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            *aug.at_mut(i, j) = m.at(i, j).clone();
        }
        *aug.at_mut(i, m.cols) = b[i].clone();
    }
    let pivots = rref(f, &mut aug);
    if pivots.contains(&m.cols) {
        return None;
    }
    let mut x = vec![f.zero(); m.cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(ri, m.cols).clone();
    }
    Some(x)
}

/// Inverse of a square matrix, None if singular.
pub fn inverse<F: Field>(f: &F, m: &Mat<F>) -> Option<Mat<F>> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut aug = Mat::new(f, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            *aug.at_mut(i, j) = m.at(i, j).clone();
        }
        *aug.at_mut(i, n + i) = f.one();
    }
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    let mut out = Mat::new(f, n, n);
    for i in 0..n {
        for j in 0..n {
            *out.at_mut(i, j) = aug.at(i, n + j).clone();
        }
    }
    Some(out)
}

pub fn det<F: Field>(f: &F, m: &Mat<F>) -> F::Elem {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut w = m.clone();
    let mut acc = f.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !f.is_zero(w.at(i, c))) else {
            return f.zero();
        };
        if pr != c {
            for j in 0..n {
                w.data.swap(c * n + j, pr * n + j);
            }
            acc = f.neg(&acc);
        }
        acc = f.mul(&acc, w.at(c, c));
        let inv = f.inv(w.at(c, c)).unwrap();
        for i in c + 1..n {
            if f.is_zero(w.at(i, c)) {
                continue;
            }
            let factor = f.mul(&inv, w.at(i, c));
            for j in c..n {
                let t = f.mul(&factor, w.at(c, j));
                *w.at_mut(i, j) = f.sub(w.at(i, j), &t);
            }
        }
    }
    acc
}

/// Row space comparison via RREF equality.
pub fn same_row_space<F: Field>(f: &F, a: &Mat<F>, b: &Mat<F>) -> bool {
    if a.cols != b.cols {
        return false;
    }
    let mut wa = a.clone();
    let mut wb = b.clone();
    rref(f, &mut wa);
    rref(f, &mut wb);
    let nonzero = |m: &Mat<F>| -> Vec<Vec<F::Elem>> {
        (0..m.rows)
            .map(|i| m.row(i).to_vec())
            .filter(|r| r.iter().any(|c| !f.is_zero(c)))
            .collect()
    };
    nonzero(&wa) == nonzero(&wb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fq::Fq;
    use crate::field::Field;

    #[test]
    fn kernel_and_rank() {
        let f = Fq::new(5, 1).unwrap();
        let m = Mat::from_rows(
            &f,
            vec![
                vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)],
                vec![f.from_i64(2), f.from_i64(4), f.from_i64(6)],
            ],
        );
        assert_eq!(rank(&f, &m), 1);
        let k = right_kernel(&f, &m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let img = m.mul_vec(&f, v);
            assert!(img.iter().all(|c| f.is_zero(c)));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Fq::new(7, 1).unwrap();
        let m = Mat::from_rows(
            &f,
            vec![
                vec![f.from_i64(1), f.from_i64(2)],
                vec![f.from_i64(3), f.from_i64(5)],
            ],
        );
        let inv = inverse(&f, &m).unwrap();
        let prod = m.mul(&f, &inv);
        assert_eq!(prod, Mat::identity(&f, 2));
        assert_eq!(det(&f, &m), f.from_i64(-1));
    }
}
