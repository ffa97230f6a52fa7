//! Exact LLL reduction operating on a Gram matrix, with the unimodular
//! transform tracked. Works for positive definite inputs; all arithmetic is
//! in BigRational so there are no precision issues.

use super::mat::{zmat_identity, zmat_mul, zmat_transpose, ZMat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// LLL-reduce the lattice with Gram matrix `gram` (positive definite).
/// Returns (reduced_gram, u) with u * gram * u^T = reduced_gram and
/// det u = +-1. `delta` defaults to 99/100 when None.
pub fn lll_reduce(gram: &ZMat, delta: Option<BigRational>) -> (ZMat, ZMat) {
    let n = gram.len();
    if n == 0 {
        return (vec![], vec![]);
    }
    let delta = delta.unwrap_or_else(|| {
        BigRational::new(BigInt::from(99), BigInt::from(100))
    });
    let mut u = zmat_identity(n);
    // current Gram of the working basis
    let mut g: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();

    // Gram-Schmidt data recomputed incrementally: mu[i][j] for j < i, b[i] = |b_i*|^2
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut b = vec![BigRational::zero(); n];
    let gs = |g: &Vec<Vec<BigRational>>,
              mu: &mut Vec<Vec<BigRational>>,
              b: &mut Vec<BigRational>,
              upto: usize| {
        for i in 0..=upto {
            let mut bi = g[i][i].clone();
            for j in 0..i {
                // <b_i, b_j*> = g[i][j] - sum_{k<j} mu[j][k] <b_i, b_k*>
                let mut ip = g[i][j].clone();
                for k in 0..j {
                    ip -= &mu[j][k] * &mu[i][k] * &b[k];
                }
                mu[i][j] = if b[j].is_zero() { BigRational::zero() } else { &ip / &b[j] };
                bi -= &mu[i][j] * &ip;
            }
            b[i] = bi;
        }
    };
    gs(&g, &mut mu, &mut b, n - 1);

    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut k = 1;
    while k < n {
        // size reduce row k against rows below it
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let q = mu[k][j].round().to_integer();
                row_op(&mut g, &mut u, k, j, &q);
                gs(&g, &mut mu, &mut b, k);
            }
        }
        let lhs = b[k].clone();
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            g.swap(k, k - 1);
            for r in g.iter_mut() {
                r.swap(k, k - 1);
            }
            u.swap(k, k - 1);
            gs(&g, &mut mu, &mut b, n - 1);
            k = k.max(2) - 1;
        }
    }

    let out = zmat_mul(&zmat_mul(&u, gram), &zmat_transpose(&u));
    (out, u)
}

fn row_op(g: &mut Vec<Vec<BigRational>>, u: &mut ZMat, k: usize, j: usize, q: &BigInt) {
    // b_k -= q b_j; update Gram symmetrically
    let n = g.len();
    let qq = BigRational::from_integer(q.clone());
    for c in 0..n {
        let t = &qq * &g[j][c];
        g[k][c] -= t;
    }
    for r in g.iter_mut() {
        let t = &qq * &r[j];
        r[k] -= t;
    }
    for c in 0..u[j].len() {
        let t = q * &u[j][c];
        u[k][c] -= t;
    }
}

/// All-integer LLL on explicit basis rows (delta = 3/4), using the
/// classical lambda / d bookkeeping so no rational arithmetic appears.
/// Much faster than the Gram variant when entries are thousands of bits.
/// Returns the reduced basis rows spanning the same lattice.
pub fn lll_reduce_rows(basis: &ZMat) -> ZMat {
    let n = basis.len();
    if n == 0 {
        return vec![];
    }
    let mut b: ZMat = basis.to_vec();
    let dot = |x: &[BigInt], y: &[BigInt]| -> BigInt { x.iter().zip(y).map(|(a, c)| a * c).sum() };
    // 1-indexed d[0..=n], lam[k][l] for 1 <= l < k <= n
    let mut d = vec![BigInt::one(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[1] = dot(&b[0], &b[0]);
    let mut k = 2usize;
    let mut kmax = 1usize;

    macro_rules! red {
        ($k:expr, $l:expr) => {{
            let (k, l) = ($k, $l);
            if (&lam[k][l] * BigInt::from(2)).abs() > d[l] {
                let q = BigRational::new(lam[k][l].clone(), d[l].clone()).round().to_integer();
                for c in 0..b[0].len() {
                    let t = &q * &b[l - 1][c];
                    b[k - 1][c] -= t;
                }
                let t = &q * &d[l];
                lam[k][l] -= t;
                for i in 1..l {
                    let t = &q * &lam[l][i];
                    lam[k][i] -= t;
                }
            }
        }};
    }

    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&b[k - 1], &b[j - 1]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    d[k] = u;
                }
            }
            assert!(!d[k].is_zero(), "basis rows must be linearly independent");
        }
        loop {
            red!(k, k - 1);
            // Lovasz test with delta = 3/4
            let lhs = BigInt::from(4) * (&d[k] * &d[k - 2] + &lam[k][k - 1] * &lam[k][k - 1]);
            if lhs < BigInt::from(3) * &d[k - 1] * &d[k - 1] {
                // swap rows k and k-1
                b.swap(k - 1, k - 2);
                for j in 1..k - 1 {
                    let t = lam[k][j].clone();
                    lam[k][j] = lam[k - 1][j].clone();
                    lam[k - 1][j] = t;
                }
                let l = lam[k][k - 1].clone();
                let big = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
                for i in k + 1..=kmax {
                    let t = lam[i][k].clone();
                    lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
                    lam[i][k - 1] = (&big * &t + &l * &lam[i][k]) / &d[k];
                }
                d[k - 1] = big;
                k = k.max(3) - 1;
            } else {
                for l in (1..k - 1).rev() {
                    red!(k, l);
                }
                k += 1;
                break;
            }
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::{zmat_det, zmat_from_i64};
    use num_traits::Signed;

    #[test]
    fn reduces_skewed_basis() {
        // basis (1,0), (1000, 1) of Z^2: gram [[1,1000],[1000,1000001]]
        let gram = zmat_from_i64(&[vec![1, 1000], vec![1000, 1000001]]);
        let (red, u) = lll_reduce(&gram, None);
        assert_eq!(red, zmat_from_i64(&[vec![1, 0], vec![0, 1]]));
        assert_eq!(zmat_det(&u).abs(), num_bigint::BigInt::one());
        assert_eq!(zmat_mul(&zmat_mul(&u, &gram), &zmat_transpose(&u)), red);
    }

    #[test]
    fn identity_fixed() {
        let gram = zmat_from_i64(&[vec![2, 0], vec![0, 3]]);
        let (red, _) = lll_reduce(&gram, None);
        assert_eq!(red, gram);
    }

    #[test]
    fn row_variant_matches_gram_variant() {
        let basis = zmat_from_i64(&[vec![1, 0, 0], vec![1000, 1, 0], vec![0, 999, 1]]);
        let rows = lll_reduce_rows(&basis);
        // compare against the Gram-based reduction of the same lattice
        let gram = zmat_mul(&basis, &zmat_transpose(&basis));
        let (red, _) = lll_reduce(&gram, None);
        let got = zmat_mul(&rows, &zmat_transpose(&rows));
        assert_eq!(got[0][0], red[0][0]);
        // the reduced rows still span the same lattice: determinant up to sign
        assert_eq!(zmat_det(&rows).abs(), zmat_det(&basis).abs());
    }

    #[test]
    fn row_variant_finds_short_relation() {
        // lattice containing (-2, 0, 1, 0): rows (e_i | 17^i) and (0 | M)
        // with M = 17^2 - 2 * 1... instead: v with v^2 = 2 mod M
        let m = 7i64.pow(9);
        let mut v = 3i64;
        for _ in 0..5 {
            let inv = crate::exact::mat::mod_inverse(
                &BigInt::from((2 * v).rem_euclid(m)),
                &BigInt::from(m),
            )
            .unwrap();
            let corr = (BigInt::from(v) * BigInt::from(v) - BigInt::from(2)) * inv;
            use num_integer::Integer;
            v = (BigInt::from(v) - corr)
                .mod_floor(&BigInt::from(m))
                .try_into()
                .unwrap();
        }
        assert_eq!((v * v).rem_euclid(m), 2);
        // scale the residue column so near-relations cost more than relations
        let basis = zmat_from_i64(&[
            vec![1, 0, 0, m],
            vec![0, 1, 0, v * m],
            vec![0, 0, 1, (v * v).rem_euclid(m) * m],
            vec![0, 0, 0, m * m],
        ]);
        let rows = lll_reduce_rows(&basis);
        assert!(rows.iter().any(|r| {
            let r: Vec<i64> = r.iter().map(|x| x.try_into().unwrap()).collect();
            r == [-2, 0, 1, 0] || r == [2, 0, -1, 0]
        }));
    }
}
