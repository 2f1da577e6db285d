//! Linear algebra over `Z/N`: Howell-form row echelon and diagonalization.
//!
//! Every finite abelian group handled by the crate sits inside some
//! `(Z/N)^n` modulo coordinate relations, so subgroups, kernels and
//! quotients reduce to these two routines with all arithmetic mod `N`.

use crate::arith::{
    add_mod, ext_gcd, gcd, mul_mod, neg_mod, reduce_i128, sub_mod, unit_normalizer,
};

/// `dst -= q * src` over `Z/n`, starting at column `from`.
#[inline]
fn axpy_neg(dst: &mut [u64], src: &[u64], q: u64, n: u64, from: usize) {
    if q == 0 {
        return;
    }
    for (d, &s) in dst[from..].iter_mut().zip(&src[from..]) {
        if s != 0 {
            *d = sub_mod(*d, mul_mod(q, s, n), n);
        }
    }
}

#[inline]
fn scale(v: &mut [u64], q: u64, n: u64) {
    for x in v.iter_mut() {
        *x = mul_mod(*x, q, n);
    }
}

/// `(s*a + t*b, (b/g)*a - (a/g)*b)` as a unimodular pair of row combinations,
/// where `a`, `b` are the pivot-column entries of `x` and `y`.
fn gcd_combine(x: &[u64], y: &[u64], a: u64, b: u64, n: u64) -> (Vec<u64>, Vec<u64>, u64) {
    let (g, s, t) = ext_gcd(a as i128, b as i128);
    let s = reduce_i128(s, n);
    let t = reduce_i128(t, n);
    let bg = ((b as i128 / g) % n as i128) as u64;
    let ag = ((a as i128 / g) % n as i128) as u64;
    let p: Vec<u64> = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| add_mod(mul_mod(s, xi, n), mul_mod(t, yi, n), n))
        .collect();
    let w: Vec<u64> = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| sub_mod(mul_mod(bg, xi, n), mul_mod(ag, yi, n), n))
        .collect();
    (p, w, g as u64)
}

/// Howell form of a submodule of `(Z/N)^width`, maintained incrementally.
///
/// Pivot entries divide `N`; entries of a row sitting in a later pivot column
/// are reduced below that pivot. Together with the Howell property (rows
/// with leading zeros in the first `k` columns span every module element with
/// that shape) this makes the form unique and reduction a complete
/// membership test.
#[derive(Debug, Clone)]
pub struct Howell {
    modulus: u64,
    width: usize,
    pivots: Vec<Option<Vec<u64>>>,
}

impl Howell {
    pub fn new(width: usize, modulus: u64) -> Self {
        Howell {
            modulus,
            width,
            pivots: vec![None; width],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Insert a sparse row given as `(column, integer coefficient)` pairs.
    pub fn insert_sparse(&mut self, entries: &[(usize, i64)]) {
        let n = self.modulus;
        let mut v = vec![0u64; self.width];
        for &(c, x) in entries {
            v[c] = add_mod(v[c], reduce_i128(x as i128, n), n);
        }
        self.insert(v);
    }

    /// Insert a dense row whose entries are already reduced mod `N`.
    pub fn insert(&mut self, v: Vec<u64>) {
        debug_assert_eq!(v.len(), self.width);
        let n = self.modulus;
        if n == 1 {
            return;
        }
        let mut stack = vec![v];
        while let Some(mut v) = stack.pop() {
            let mut j = 0;
            loop {
                while j < self.width && v[j] == 0 {
                    j += 1;
                }
                if j == self.width {
                    break;
                }
                let Some(p) = self.pivots[j].take() else {
                    self.install(j, v, &mut stack);
                    break;
                };
                let (a, b) = (p[j], v[j]);
                if b % a == 0 {
                    axpy_neg(&mut v, &p, b / a, n, j);
                    self.pivots[j] = Some(p);
                } else {
                    let (newp, w, _) = gcd_combine(&p, &v, a, b, n);
                    self.install(j, newp, &mut stack);
                    v = w;
                }
            }
        }
    }

    /// Make `v` (nonzero at `j`, zero before) the pivot row of column `j`.
    fn install(&mut self, j: usize, mut v: Vec<u64>, stack: &mut Vec<Vec<u64>>) {
        let n = self.modulus;
        let u = unit_normalizer(v[j], n);
        if u != 1 {
            scale(&mut v[j..], u, n);
        }
        let h = v[j];
        if h != 1 {
            let mut w = v.clone();
            scale(&mut w[j..], n / h, n);
            if w.iter().any(|&x| x != 0) {
                stack.push(w);
            }
        }
        self.reduce_tail(&mut v, j + 1);
        for i in 0..j {
            let Some(mut row) = self.pivots[i].take() else {
                continue;
            };
            if row[j] >= h {
                let q = row[j] / h;
                axpy_neg(&mut row, &v, q, n, j);
                self.reduce_tail(&mut row, j + 1);
            }
            self.pivots[i] = Some(row);
        }
        self.pivots[j] = Some(v);
    }

    fn reduce_tail(&self, v: &mut [u64], from: usize) {
        let n = self.modulus;
        for k in from..self.width {
            if v[k] == 0 {
                continue;
            }
            if let Some(p) = &self.pivots[k] {
                if v[k] >= p[k] {
                    let q = v[k] / p[k];
                    axpy_neg(v, p, q, n, k);
                }
            }
        }
    }

    /// Reduce `v` against pivots in columns `< upto`. Returns `true` when the
    /// first `upto` entries end up zero (i.e. membership restricted to those
    /// columns succeeded).
    pub fn reduce(&self, v: &mut [u64], upto: usize) -> bool {
        let n = self.modulus;
        if n == 1 {
            v.iter_mut().for_each(|x| *x = 0);
            return true;
        }
        for j in 0..upto.min(self.width) {
            if v[j] == 0 {
                continue;
            }
            match &self.pivots[j] {
                Some(p) if v[j].is_multiple_of(p[j]) => {
                    let q = v[j] / p[j];
                    axpy_neg(v, p, q, n, j);
                }
                _ => return false,
            }
        }
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, self.width)
    }

    /// Pivot rows in column order: `(pivot column, row)`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &Vec<u64>)> {
        self.pivots
            .iter()
            .enumerate()
            .filter_map(|(j, p)| p.as_ref().map(|r| (j, r)))
    }

    /// Generators of `{x : r . x = 0 for every row r}`.
    ///
    /// Unit pivots are eliminated by back-substitution; only the columns
    /// without a unit pivot go through [`diagonalize`].
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let n = self.modulus;
        let w = self.width;
        if n == 1 {
            return Vec::new();
        }
        let unit: Vec<bool> = self
            .pivots
            .iter()
            .enumerate()
            .map(|(j, p)| p.as_ref().is_some_and(|r| r[j] == 1))
            .collect();
        let free: Vec<usize> = (0..w).filter(|&j| !unit[j]).collect();
        let rest: Vec<Vec<u64>> = self
            .rows()
            .filter(|&(j, _)| !unit[j])
            .map(|(_, r)| free.iter().map(|&c| r[c]).collect())
            .collect();
        let small = diagonalize(rest, free.len(), n, false).kernel();
        small
            .into_iter()
            .map(|y| {
                let mut x = vec![0u64; w];
                for (&c, &v) in free.iter().zip(&y) {
                    x[c] = v;
                }
                for (j, r) in self.rows() {
                    if unit[j] {
                        let mut acc = 0u64;
                        for (&c, &v) in free.iter().zip(&y) {
                            if v != 0 && r[c] != 0 {
                                acc = add_mod(acc, mul_mod(r[c], v, n), n);
                            }
                        }
                        x[j] = neg_mod(acc, n);
                    }
                }
                x
            })
            .collect()
    }

    /// Pivot value per column (`N` where a column has no pivot).
    pub fn pivot_values(&self) -> Vec<u64> {
        self.pivots
            .iter()
            .enumerate()
            .map(|(j, p)| p.as_ref().map_or(self.modulus, |r| r[j]))
            .collect()
    }
}

impl PartialEq for Howell {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.width == other.width && self.pivots == other.pivots
    }
}

impl Eq for Howell {}

/// Diagonalization `U * A * V = D` over `Z/N` with `V` (and optionally
/// `V^{-1}`) tracked. `U` is not recorded.
#[derive(Debug, Clone)]
pub struct Diagonal {
    pub modulus: u64,
    /// One entry per column; `0` where no pivot was found.
    pub diag: Vec<u64>,
    /// `cols x cols`, row-major by row index.
    pub v: Vec<Vec<u64>>,
    pub v_inv: Option<Vec<Vec<u64>>>,
}

impl Diagonal {
    /// Cyclic order of the quotient coordinate `t`: `gcd(d_t, N)`.
    pub fn quotient_order(&self, t: usize) -> u64 {
        gcd(self.diag[t], self.modulus)
    }

    /// Generators of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let n = self.modulus;
        let cols = self.diag.len();
        let mut out = Vec::new();
        for t in 0..cols {
            let mult = n / gcd(self.diag[t], n);
            let g: Vec<u64> = (0..cols).map(|i| mul_mod(self.v[i][t], mult, n)).collect();
            if g.iter().any(|&x| x != 0) {
                out.push(g);
            }
        }
        out
    }
}

pub fn diagonalize(mut a: Vec<Vec<u64>>, cols: usize, n: u64, want_inv: bool) -> Diagonal {
    let rows = a.len();
    let identity = |k: usize| -> Vec<Vec<u64>> {
        (0..k)
            .map(|i| (0..k).map(|j| u64::from(i == j) % n.max(1)).collect())
            .collect()
    };
    let mut v = identity(cols);
    let mut v_inv = want_inv.then(|| identity(cols));
    let mut diag = vec![0u64; cols];
    if n == 1 {
        return Diagonal {
            modulus: n,
            diag,
            v,
            v_inv,
        };
    }

    for t in 0..rows.min(cols) {
        // pivot with smallest gcd against N; stop at the first unit
        let mut best: Option<(u64, usize, usize)> = None;
        'search: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x == 0 {
                    continue;
                }
                let g = gcd(x, n);
                if best.is_none_or(|(bg, _, _)| g < bg) {
                    best = Some((g, i, j));
                    if g == 1 {
                        break 'search;
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else {
            break;
        };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            if let Some(vi) = v_inv.as_mut() {
                vi.swap(t, pj);
            }
        }
        let u = unit_normalizer(a[t][t], n);
        if u != 1 {
            scale(&mut a[t], u, n);
        }

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                let b = a[i][t];
                if b == 0 {
                    continue;
                }
                let d = a[t][t];
                if b.is_multiple_of(d) {
                    let (top, rest) = a.split_at_mut(i);
                    axpy_neg(&mut rest[0], &top[t], b / d, n, t);
                } else {
                    let (p, w, _) = gcd_combine(&a[t], &a[i], d, b, n);
                    a[t] = p;
                    a[i] = w;
                    changed = true;
                }
            }
            for k in t + 1..cols {
                let b = a[t][k];
                if b == 0 {
                    continue;
                }
                let d = a[t][t];
                if b.is_multiple_of(d) {
                    // col_k -= q col_t ; V likewise ; V^{-1}: row_t += q row_k
                    let q = b / d;
                    for row in a.iter_mut() {
                        if row[t] != 0 {
                            row[k] = sub_mod(row[k], mul_mod(q, row[t], n), n);
                        }
                    }
                    for row in v.iter_mut() {
                        if row[t] != 0 {
                            row[k] = sub_mod(row[k], mul_mod(q, row[t], n), n);
                        }
                    }
                    if let Some(vi) = v_inv.as_mut() {
                        let (lo, hi) = vi.split_at_mut(k);
                        let (rt, rk) = (&mut lo[t], &hi[0]);
                        for (x, &y) in rt.iter_mut().zip(rk.iter()) {
                            if y != 0 {
                                *x = add_mod(*x, mul_mod(q, y, n), n);
                            }
                        }
                    }
                } else {
                    let (g, s, x) = ext_gcd(d as i128, b as i128);
                    let s = reduce_i128(s, n);
                    let x = reduce_i128(x, n);
                    let bg = (b as i128 / g) as u64 % n;
                    let dg = (d as i128 / g) as u64 % n;
                    // (col_t, col_k) <- (s col_t + x col_k, bg col_t - dg col_k)
                    let mix = |m: &mut Vec<Vec<u64>>| {
                        for row in m.iter_mut() {
                            let (ct, ck) = (row[t], row[k]);
                            if ct == 0 && ck == 0 {
                                continue;
                            }
                            row[t] = add_mod(mul_mod(s, ct, n), mul_mod(x, ck, n), n);
                            row[k] = sub_mod(mul_mod(bg, ct, n), mul_mod(dg, ck, n), n);
                        }
                    };
                    mix(&mut a);
                    mix(&mut v);
                    if let Some(vi) = v_inv.as_mut() {
                        // (row_t, row_k) <- (dg row_t + bg row_k, x row_t - s row_k)
                        let (lo, hi) = vi.split_at_mut(k);
                        let (rt, rk) = (&mut lo[t], &mut hi[0]);
                        for (p, q) in rt.iter_mut().zip(rk.iter_mut()) {
                            let (yt, yk) = (*p, *q);
                            *p = add_mod(mul_mod(dg, yt, n), mul_mod(bg, yk, n), n);
                            *q = sub_mod(mul_mod(x, yt, n), mul_mod(s, yk, n), n);
                        }
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag[t] = a[t][t];
    }
    Diagonal {
        modulus: n,
        diag,
        v,
        v_inv,
    }
}

/// `-x mod n` for every entry.
pub fn negate(v: &mut [u64], n: u64) {
    for x in v.iter_mut() {
        *x = neg_mod(*x, n);
    }
}
