//! Dense matrices: a generic field-valued matrix with Gaussian elimination,
//! plus integer-matrix routines (Bareiss determinant, Hermite and Smith
//! forms, characteristic polynomial, linear solving mod prime powers).

use super::field::Field;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<F: Field> {
    pub field: F,
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Mat { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Mat { field, rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Mat::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other.get(k, j));
                    let s = f.add(out.get(i, j), &t);
                    out.set(i, j, s);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.get(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let pi = f.inv(self.get(r, c)).expect("pivot invertible");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &pi);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(self.get(i, c)) {
                    continue;
                }
                let m = self.get(i, c).clone();
                for j in c..self.cols {
                    let t = f.mul(&m, self.get(r, j));
                    let v = f.sub(self.get(i, j), &t);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, fc));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field.clone();
        let mut aug = Mat::zeros(f.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut aug = Mat::zeros(f.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref();
        if pivots.len() < n {
            return None;
        }
        let mut out = Mat::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return f.zero();
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            det = f.mul(&det, m.get(c, c));
            let pi = f.inv(m.get(c, c)).unwrap();
            for i in c + 1..n {
                if f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = f.mul(m.get(i, c), &pi);
                for j in c..n {
                    let t = f.mul(&factor, m.get(c, j));
                    let v = f.sub(m.get(i, j), &t);
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

// ---------------------------------------------------------------------------
// Integer matrices, stored as row-major Vec<Vec<BigInt>>.

pub type ZMat = Vec<Vec<BigInt>>;

pub fn zmat_from_i64(rows: &[Vec<i64>]) -> ZMat {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn zmat_identity(n: usize) -> ZMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn zmat_mul(a: &ZMat, b: &ZMat) -> ZMat {
    let (n, k) = (a.len(), b.len());
    let m = b.first().map(|r| r.len()).unwrap_or(0);
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn zmat_transpose(a: &ZMat) -> ZMat {
    let n = a.len();
    let m = a.first().map(|r| r.len()).unwrap_or(0);
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn zmat_mul_vec(a: &ZMat, v: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Fraction-free determinant (Bareiss).
pub fn zmat_det(a: &ZMat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: ZMat = a.to_vec();
    let mut sign = BigInt::one();
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
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Row-style Hermite normal form; returns (H, U) with U unimodular and
/// U * A = H, H in lower-staircase form with nonnegative pivots.
pub fn hnf_with_transform(a: &ZMat) -> (ZMat, ZMat) {
    let n = a.len();
    let m = a.first().map(|r| r.len()).unwrap_or(0);
    let mut h = a.to_vec();
    let mut u = zmat_identity(n);
    let mut row = 0;
    for col in 0..m {
        // clear below using gcd steps
        loop {
            let mut best: Option<usize> = None;
            for i in row..n {
                if !h[i][col].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) => {
                            if h[i][col].abs() < h[b][col].abs() {
                                Some(i)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(p) = best else { break };
            h.swap(row, p);
            u.swap(row, p);
            let mut done = true;
            let pivot = h[row][col].clone();
            for i in row + 1..n {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = num_integer::Integer::div_floor(&h[i][col], &pivot);
                if !q.is_zero() {
                    for j in 0..m {
                        let t = &h[row][j] * &q;
                        h[i][j] -= t;
                    }
                    for j in 0..n {
                        let t = &u[row][j] * &q;
                        u[i][j] -= t;
                    }
                }
                if !h[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[row][col].is_zero() {
            continue;
        }
        if h[row][col].is_negative() {
            for j in 0..m {
                h[row][j] = -h[row][j].clone();
            }
            for j in 0..n {
                u[row][j] = -u[row][j].clone();
            }
        }
        // reduce rows above
        let pivot = h[row][col].clone();
        for i in 0..row {
            let q = num_integer::Integer::div_floor(&h[i][col], &pivot);
            if !q.is_zero() {
                for j in 0..m {
                    let t = &h[row][j] * &q;
                    h[i][j] -= t;
                }
                for j in 0..n {
                    let t = &u[row][j] * &q;
                    u[i][j] -= t;
                }
            }
        }
        row += 1;
        if row == n {
            break;
        }
    }
    (h, u)
}

/// Smith normal form with transforms: returns (D, U, V) with U A V = D,
/// U and V unimodular, D diagonal with d_1 | d_2 | ... nonnegative.
pub fn smith_with_transform(a: &ZMat) -> (ZMat, ZMat, ZMat) {
    let n = a.len();
    let m = a.first().map(|r| r.len()).unwrap_or(0);
    let mut w = a.to_vec();
    let mut u = zmat_identity(n);
    let mut v = zmat_identity(m);
    let k = n.min(m);
    let mut top = 0;
    while top < k {
        let mut found = None;
        'outer: for i in top..n {
            for j in top..m {
                if !w[i][j].is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        w.swap(top, pi);
        u.swap(top, pi);
        for r in w.iter_mut() {
            r.swap(top, pj);
        }
        for r in v.iter_mut() {
            r.swap(top, pj);
        }
        loop {
            let mut dirty = false;
            for i in top + 1..n {
                if w[i][top].is_zero() {
                    continue;
                }
                let (g, s, t) = extgcd_bigint(&w[top][top], &w[i][top]);
                let a0 = &w[top][top] / &g;
                let b0 = &w[i][top] / &g;
                for j in 0..m {
                    let x = w[top][j].clone();
                    let y = w[i][j].clone();
                    w[top][j] = &s * &x + &t * &y;
                    w[i][j] = -&b0 * &x + &a0 * &y;
                }
                for j in 0..n {
                    let x = u[top][j].clone();
                    let y = u[i][j].clone();
                    u[top][j] = &s * &x + &t * &y;
                    u[i][j] = -&b0 * &x + &a0 * &y;
                }
            }
            for j in top + 1..m {
                if w[top][j].is_zero() {
                    continue;
                }
                let (g, s, t) = extgcd_bigint(&w[top][top], &w[top][j]);
                let a0 = &w[top][top] / &g;
                let b0 = &w[top][j] / &g;
                for i in 0..n {
                    let x = w[i][top].clone();
                    let y = w[i][j].clone();
                    w[i][top] = &s * &x + &t * &y;
                    w[i][j] = -&b0 * &x + &a0 * &y;
                }
                for i in 0..m {
                    let x = v[i][top].clone();
                    let y = v[i][j].clone();
                    v[i][top] = &s * &x + &t * &y;
                    v[i][j] = -&b0 * &x + &a0 * &y;
                }
                dirty = true;
            }
            if !dirty {
                break;
            }
        }
        let mut fixed = false;
        for i in top + 1..n {
            for j in top + 1..m {
                if !(&w[i][j] % &w[top][top]).is_zero() {
                    for jj in 0..m {
                        let t = w[i][jj].clone();
                        w[top][jj] += t;
                    }
                    for jj in 0..n {
                        let t = u[i][jj].clone();
                        u[top][jj] += t;
                    }
                    fixed = true;
                    break;
                }
            }
            if fixed {
                break;
            }
        }
        if fixed {
            continue;
        }
        if w[top][top].is_negative() {
            for j in 0..m {
                w[top][j] = -w[top][j].clone();
            }
            for j in 0..n {
                u[top][j] = -u[top][j].clone();
            }
        }
        top += 1;
    }
    (w, u, v)
}

/// Diagonal entries d_1 | d_2 | ... of the Smith normal form (nonnegative,
/// padded with zeros up to min(rows, cols)).
pub fn smith_diagonal(a: &ZMat) -> Vec<BigInt> {
    let n = a.len();
    let m = a.first().map(|r| r.len()).unwrap_or(0);
    let mut w = a.to_vec();
    let k = n.min(m);
    let mut diag = Vec::with_capacity(k);
    let mut top = 0;
    while top < k {
        // find a nonzero entry in the remaining block
        let mut found = None;
        'outer: for i in top..n {
            for j in top..m {
                if !w[i][j].is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        w.swap(top, pi);
        for r in w.iter_mut() {
            r.swap(top, pj);
        }
        loop {
            // clear column
            let mut dirty = false;
            for i in top + 1..n {
                if w[i][top].is_zero() {
                    continue;
                }
                let (g, s, t) = extgcd_bigint(&w[top][top], &w[i][top]);
                let a0 = &w[top][top] / &g;
                let b0 = &w[i][top] / &g;
                for j in top..m {
                    let x = w[top][j].clone();
                    let y = w[i][j].clone();
                    w[top][j] = &s * &x + &t * &y;
                    w[i][j] = -&b0 * &x + &a0 * &y;
                }
            }
            // clear row
            for j in top + 1..m {
                if w[top][j].is_zero() {
                    continue;
                }
                let (g, s, t) = extgcd_bigint(&w[top][top], &w[top][j]);
                let a0 = &w[top][top] / &g;
                let b0 = &w[top][j] / &g;
                for i in top..n {
                    let x = w[i][top].clone();
                    let y = w[i][j].clone();
                    w[i][top] = &s * &x + &t * &y;
                    w[i][j] = -&b0 * &x + &a0 * &y;
                }
                dirty = true; // row ops can refill the column
            }
            if !dirty {
                break;
            }
        }
        // enforce divisibility into later entries
        let mut fixed = false;
        for i in top + 1..n {
            for j in top + 1..m {
                if !(&w[i][j] % &w[top][top]).is_zero() {
                    for jj in top..m {
                        let t = w[i][jj].clone();
                        w[top][jj] += t;
                    }
                    fixed = true;
                    break;
                }
            }
            if fixed {
                break;
            }
        }
        if fixed {
            continue;
        }
        diag.push(w[top][top].abs());
        top += 1;
    }
    while diag.len() < k {
        diag.push(BigInt::zero());
    }
    diag
}

fn extgcd_bigint(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// Coefficients of the characteristic polynomial det(xI - A), ascending,
/// computed fraction-free (Faddeev-LeVerrier; divisions are exact).
pub fn charpoly(a: &ZMat) -> Vec<BigInt> {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = zmat_identity(n);
    for k in 1..=n {
        m = zmat_mul(a, &m);
        let tr: BigInt = (0..n).map(|i| m[i][i].clone()).sum();
        let c = -tr / BigInt::from(k as i64);
        coeffs[n - k] = c.clone();
        for i in 0..n {
            m[i][i] += &c;
        }
    }
    coeffs
}

/// One solution of `A x = b` over Z/m for m a prime power p^k, or None.
/// Pivots are chosen with minimal p-valuation; a pivot of positive valuation
/// must divide the row it eliminates or the system is rejected.
pub fn solve_mod_prime_power(a: &ZMat, b: &[BigInt], p: &BigInt, k: u32) -> Result<Vec<BigInt>> {
    let modulus = p.pow(k);
    let n = a.len();
    let m = a.first().map(|r| r.len()).unwrap_or(0);
    let mut w: ZMat = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r: Vec<BigInt> = row.iter().map(|x| x.mod_floor(&modulus)).collect();
            r.push(bi.mod_floor(&modulus));
            r
        })
        .collect();
    let val = |x: &BigInt| -> u32 {
        if x.is_zero() {
            return k;
        }
        let mut v = 0;
        let mut y = x.clone();
        while (&y % p).is_zero() {
            y /= p;
            v += 1;
            if v >= k {
                break;
            }
        }
        v
    };
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0;
    for col in 0..m {
        if row >= n {
            break;
        }
        let Some((pr, pv)) = (row..n)
            .map(|i| (i, val(&w[i][col])))
            .filter(|&(_, v)| v < k)
            .min_by_key(|&(_, v)| v)
        else {
            continue;
        };
        w.swap(row, pr);
        // make pivot p^pv * unit; normalize the unit away
        let unit = &w[row][col] / p.pow(pv);
        let uinv = mod_inverse(&unit, &modulus)
            .ok_or_else(|| Error::Internal("pivot unit not invertible".into()))?;
        for j in col..=m {
            w[row][j] = (&w[row][j] * &uinv).mod_floor(&modulus);
        }
        for i in 0..n {
            if i == row || w[i][col].is_zero() {
                continue;
            }
            if val(&w[i][col]) < pv {
                return Err(Error::Singular("system has no solution at this precision".into()));
            }
            let f = &w[i][col] / p.pow(pv);
            for j in col..=m {
                let t = (&f * &w[row][j]).mod_floor(&modulus);
                w[i][j] = (&w[i][j] - t).mod_floor(&modulus);
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    for i in row..n {
        if !w[i][m].is_zero() {
            return Err(Error::Singular("inconsistent linear system".into()));
        }
    }
    let mut x = vec![BigInt::zero(); m];
    for &(r, c) in &pivots {
        let pv = val(&(w[r][c].clone()));
        // pivot is p^pv; solve p^pv * x = rhs
        if pv == 0 {
            x[c] = w[r][m].clone();
        } else {
            let pk = p.pow(pv);
            if !(&w[r][m] % &pk).is_zero() {
                return Err(Error::Singular("no solution: divisibility fails".into()));
            }
            x[c] = (&w[r][m] / pk).mod_floor(&modulus);
        }
    }
    Ok(x)
}

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
    use crate::exact::rat::Rationals;
    use num_rational::BigRational;

    fn qmat(rows: &[Vec<i64>]) -> Mat<Rationals> {
        let f = Rationals;
        Mat::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    #[test]
    fn solve_and_kernel() {
        let a = qmat(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.kernel().len(), 2);
        let b = vec![
            BigRational::from_integer(BigInt::from(6)),
            BigRational::from_integer(BigInt::from(12)),
        ];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn bareiss_det() {
        let a = zmat_from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        assert_eq!(zmat_det(&a), BigInt::from(4));
    }

    #[test]
    fn hnf_is_unimodular_transform() {
        let a = zmat_from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (h, u) = hnf_with_transform(&a);
        assert_eq!(zmat_mul(&u, &a), h);
        assert_eq!(zmat_det(&u).abs(), BigInt::one());
    }

    #[test]
    fn smith_transforms_multiply_back() {
        let a = zmat_from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (d, u, v) = smith_with_transform(&a);
        assert_eq!(zmat_mul(&zmat_mul(&u, &a), &v), d);
        assert_eq!(zmat_det(&u).abs(), BigInt::one());
        assert_eq!(zmat_det(&v).abs(), BigInt::one());
        let diag: Vec<BigInt> = (0..3).map(|i| d[i][i].clone()).collect();
        assert_eq!(diag, smith_diagonal(&a));
    }

    #[test]
    fn smith_of_diagonalizable() {
        let a = zmat_from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let d = smith_diagonal(&a);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn charpoly_of_companion() {
        // companion of x^2 - x - 1
        let a = zmat_from_i64(&[vec![0, 1], vec![1, 1]]);
        let c = charpoly(&a);
        assert_eq!(c, vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn solve_mod_prime_power_basic() {
        let p = BigInt::from(29);
        let a = zmat_from_i64(&[vec![1, 2], vec![3, 4]]);
        let b = vec![BigInt::from(5), BigInt::from(6)];
        let x = solve_mod_prime_power(&a, &b, &p, 4).unwrap();
        let m = p.pow(4);
        let r = zmat_mul_vec(&a, &x);
        assert!((&r[0] - &b[0]).mod_floor(&m).is_zero());
        assert!((&r[1] - &b[1]).mod_floor(&m).is_zero());
    }
}
