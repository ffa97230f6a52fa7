//! Spectral radius of an integer matrix: exact characteristic polynomial
//! plus Sturm-sequence bisection isolating the largest real eigenvalue.

use crate::exact::mat::{charpoly, ZMat};
use crate::exact::poly::Poly;
use crate::exact::rat::Rationals;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct SalemData {
    /// Characteristic polynomial det(xI - M), ascending integer coefficients.
    pub char_poly: Vec<BigInt>,
    /// Interval (lo, hi] of width < 1e-12 containing the largest real root.
    pub spectral_radius: (BigRational, BigRational),
}

impl SalemData {
    pub fn radius_f64(&self) -> f64 {
        self.spectral_radius.1.to_f64().unwrap_or(f64::NAN)
    }
}

fn sign_changes(seq: &[Poly<Rationals>], x: &BigRational) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(l) = last {
            if l != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Sturm chain of the squarefree part of p.
fn sturm_chain(p: &Poly<Rationals>) -> Vec<Poly<Rationals>> {
    let sqfree = p.div_exact(&p.gcd(&p.derivative())).unwrap().monic();
    let mut seq = vec![sqfree.clone(), sqfree.derivative()];
    loop {
        let last = &seq[seq.len() - 1];
        if last.deg() <= 0 {
            break;
        }
        let r = seq[seq.len() - 2].rem(last).unwrap();
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

fn int_to_ratpoly(p: &[BigInt]) -> Poly<Rationals> {
    Poly::new(Rationals, p.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

/// Number of distinct real roots of p in the half-open interval (lo, hi].
pub fn sturm_count(p: &[BigInt], lo: &BigRational, hi: &BigRational) -> usize {
    let pq = int_to_ratpoly(p);
    if pq.is_zero() {
        return 0;
    }
    let seq = sturm_chain(&pq);
    sign_changes(&seq, lo) - sign_changes(&seq, hi)
}

/// Largest real root of the characteristic polynomial of M, isolated by
/// bisection on the Sturm chain to width below 1e-12.
pub fn dynamical_degree(m: &ZMat) -> crate::error::Result<SalemData> {
    let cp = charpoly(m);
    let seq = sturm_chain(&int_to_ratpoly(&cp));
    // Cauchy bound: all roots lie in [-b, b], b = 1 + max |c_i / c_n|
    let lead = cp.last().cloned().unwrap_or_else(BigInt::one);
    let mut maxc = BigRational::zero();
    for c in &cp[..cp.len().saturating_sub(1)] {
        let r = BigRational::new(c.abs(), lead.abs());
        if r > maxc {
            maxc = r;
        }
    }
    let bound = maxc + BigRational::one();
    let mut lo = -bound.clone();
    let mut hi = bound;
    let count =
        |a: &BigRational, b: &BigRational| sign_changes(&seq, a) - sign_changes(&seq, b);
    if count(&lo, &hi) == 0 {
        return Err(crate::error::Error::Domain("matrix has no real eigenvalue".into()));
    }
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
    while &hi - &lo >= eps {
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        if count(&mid, &hi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(SalemData { char_poly: cp, spectral_radius: (lo, hi) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::zmat_identity;

    #[test]
    fn identity_radius_is_one() {
        let s = dynamical_degree(&zmat_identity(3)).unwrap();
        assert!(s.spectral_radius.0 < BigRational::one());
        assert!(BigRational::one() <= s.spectral_radius.1);
        assert!((s.radius_f64() - 1.0).abs() < 1e-11);
    }

    #[test]
    fn fibonacci_matrix_golden_ratio() {
        let m = crate::exact::mat::zmat_from_i64(&[vec![1, 1], vec![1, 0]]);
        let s = dynamical_degree(&m).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((s.radius_f64() - phi).abs() < 1e-11);
    }

    #[test]
    fn companion_of_lehmer_polynomial() {
        // x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1
        let c: Vec<i64> = vec![1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1];
        let n = 10;
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for i in 1..n {
            m[i][i - 1] = BigInt::one();
        }
        for i in 0..n {
            m[i][n - 1] = BigInt::from(-c[i]);
        }
        let s = dynamical_degree(&m).unwrap();
        assert!((s.radius_f64() - 1.17628081825991).abs() < 1e-11);
    }

    #[test]
    fn sturm_counts_roots_of_cubic() {
        // x^3 - x has roots -1, 0, 1
        let p = vec![BigInt::zero(), BigInt::from(-1), BigInt::zero(), BigInt::one()];
        let r = |a: i64, b: i64| {
            sturm_count(
                &p,
                &BigRational::from_integer(BigInt::from(a)),
                &BigRational::from_integer(BigInt::from(b)),
            )
        };
        assert_eq!(r(-2, 2), 3);
        assert_eq!(r(0, 2), 1);
        assert_eq!(r(-2, 0), 2);
    }
}
