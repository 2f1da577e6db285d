//! Smith normal form over the integers with exact (arbitrary-precision)
//! arithmetic and explicit unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Build from rows of machine integers. All rows must share a length;
    /// `cols` is needed to describe matrices with zero rows.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = v;
        }
    }
}

/// Result of [`snf`]: `u * m * v == s`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub(crate) v_inv: IntMatrix,
}

impl Snf {
    /// Diagonal entries `d_1 | d_2 | ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form of an arbitrary integer matrix.
///
/// Pivots are chosen by minimal absolute value. The diagonal is non-negative
/// and forms a divisibility chain with zeros last.
pub fn snf(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // col ops are mirrored onto v (same op) and v_inv (inverse row op)
    let col_add = |a: &mut IntMatrix,
                   v: &mut IntMatrix,
                   v_inv: &mut IntMatrix,
                   dst: usize,
                   src: usize,
                   q: &BigInt| {
        a.add_col(dst, src, q);
        v.add_col(dst, src, q);
        v_inv.add_row(src, dst, &-q);
    };
    let col_swap =
        |a: &mut IntMatrix, v: &mut IntMatrix, v_inv: &mut IntMatrix, x: usize, y: usize| {
            a.swap_cols(x, y);
            v.swap_cols(x, y);
            v_inv.swap_rows(x, y);
        };

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if a.get(bi, bj).abs() <= x.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            col_swap(&mut a, &mut v, &mut v_inv, t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                let nq = -q;
                a.add_row(i, t, &nq);
                u.add_row(i, t, &nq);
                dirty |= !a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                col_add(&mut a, &mut v, &mut v_inv, j, t, &-q);
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            // row and column clear; enforce divisibility on the trailing block
            let p = a.get(t, t).clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    a.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { s: a, u, v, v_inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_i64(s: &Snf) -> Vec<i64> {
        s.diagonal()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn two_by_two_example() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]], 2);
        let r = snf(&m);
        assert_eq!(diag_i64(&r), vec![2, 4]);
        assert_eq!(r.u.mul(&m).mul(&r.v), r.s);
        assert_eq!(r.v.mul(&r.v_inv), IntMatrix::identity(2));
    }

    #[test]
    fn identity_and_zero() {
        let id = IntMatrix::identity(3);
        assert_eq!(diag_i64(&snf(&id)), vec![1, 1, 1]);
        let z = IntMatrix::zeros(2, 3);
        let r = snf(&z);
        assert_eq!(r.s, z);
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn empty_matrices() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let m = IntMatrix::zeros(r, c);
            let s = snf(&m);
            assert_eq!(s.s.rows(), r);
            assert_eq!(s.s.cols(), c);
            assert!(s.diagonal().is_empty());
        }
    }

    #[test]
    fn divisibility_fixup() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(diag_i64(&snf(&m)), vec![1, 6]);
    }
}
