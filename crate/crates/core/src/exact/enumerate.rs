//! Short vector enumeration in positive definite lattices via exact
//! rational Cholesky and depth-first search over coordinate ranges.
//! Includes a coset variant (shifted lattice points of given norm) used
//! when hunting for roots in a fixed residue class.

use super::mat::ZMat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Unit-triangular Cholesky data: q[i][i] = d_i > 0, q[i][j] for j > i.
fn cholesky(gram: &ZMat) -> Result<Vec<Vec<BigRational>>> {
    let n = gram.len();
    let mut q: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    for i in 0..n {
        for k in 0..i {
            let dk = q[k][k].clone();
            let qki = q[k][i].clone();
            for j in i..n {
                let t = &dk * &qki * &q[k][j];
                q[i][j] -= t;
            }
        }
        if !q[i][i].is_positive() {
            return Err(Error::Domain("gram matrix is not positive definite".into()));
        }
        let di = q[i][i].clone();
        for j in i + 1..n {
            q[i][j] = &q[i][j] / &di;
        }
    }
    Ok(q)
}

/// Integer upper bound on sqrt of a nonnegative rational.
fn sqrt_upper(t: &BigRational) -> BigInt {
    if t.is_negative() {
        return BigInt::zero();
    }
    let c = t.ceil().to_integer();
    c.sqrt() + BigInt::one()
}

fn search(
    q: &[Vec<BigRational>],
    shift: &[BigRational],
    bound: &BigRational,
    level: usize,
    rem: BigRational,
    partial: &mut Vec<BigInt>,
    centers: &mut Vec<BigRational>,
    out: &mut Vec<(Vec<BigInt>, BigRational)>,
    exact: bool,
) {
    let _ = bound;
    if rem.is_negative() {
        return;
    }
    let i = level;
    // center c_i = s_i + sum_{j>i} q[i][j] (x_j + s_j)
    let mut c = shift[i].clone();
    for j in i + 1..q.len() {
        let xs = BigRational::from_integer(partial[j].clone()) + &shift[j];
        c += &q[i][j] * xs;
    }
    let t = &rem / &q[i][i];
    let r = sqrt_upper(&t);
    let lo = (-&c - BigRational::from_integer(r.clone())).ceil().to_integer();
    let hi = (-&c + BigRational::from_integer(r)).floor().to_integer();
    let mut x = lo;
    while x <= hi {
        let y = BigRational::from_integer(x.clone()) + &c;
        let contrib = &q[i][i] * &y * &y;
        if contrib <= rem {
            partial[i] = x.clone();
            if i == 0 {
                let used = &rem - &contrib;
                // norm achieved = bound_slack accother way: total = bound - used? track directly
                let achieved = centers[0].clone() - used; // centers[0] holds the target norm budget
                if !exact || achieved == centers[1] {
                    let v: Vec<BigInt> = partial.clone();
                    if v.iter().any(|z| !z.is_zero()) || shift.iter().any(|s| !s.is_zero()) {
                        out.push((v, achieved.clone()));
                    }
                }
            } else {
                let next_rem = &rem - &contrib;
                search(q, shift, bound, i - 1, next_rem, partial, centers, out, exact);
            }
        }
        x += BigInt::one();
    }
}

fn enumerate_impl(
    gram: &ZMat,
    shift: &[BigRational],
    bound: &BigRational,
    exact_target: Option<&BigRational>,
) -> Result<Vec<(Vec<BigInt>, BigInt)>> {
    let n = gram.len();
    if n == 0 {
        return Ok(vec![]);
    }
    let q = cholesky(gram)?;
    let mut partial = vec![BigInt::zero(); n];
    let mut out = Vec::new();
    // centers[0] carries the total budget, centers[1] the exact target (if any)
    let mut centers = vec![
        bound.clone(),
        exact_target.cloned().unwrap_or_else(BigRational::zero),
    ];
    search(
        &q,
        shift,
        bound,
        n - 1,
        bound.clone(),
        &mut partial,
        &mut centers,
        &mut out,
        exact_target.is_some(),
    );
    out.into_iter()
        .map(|(v, norm)| {
            debug_assert!(norm.is_integer() || shift.iter().any(|s| !s.is_zero()));
            Ok((v, norm.to_integer()))
        })
        .collect()
}

/// All nonzero vectors v with v G v^T <= bound, one representative per
/// +-pair, with their norms. Gram must be positive definite.
pub fn short_vectors(gram: &ZMat, bound: &BigInt) -> Result<Vec<(Vec<BigInt>, BigInt)>> {
    let zero_shift = vec![BigRational::zero(); gram.len()];
    let all = enumerate_impl(
        gram,
        &zero_shift,
        &BigRational::from_integer(bound.clone()),
        None,
    )?;
    // keep the sign whose first nonzero coordinate is positive
    let mut out: Vec<(Vec<BigInt>, BigInt)> = all
        .into_iter()
        .filter(|(v, _)| {
            v.iter().find(|z| !z.is_zero()).map(|z| z.is_positive()).unwrap_or(false)
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// All x in Z^n with (x + shift) G (x + shift)^T equal to `target` exactly.
/// Both signs are returned (the coset is generally not symmetric).
pub fn coset_vectors_of_norm(
    gram: &ZMat,
    shift: &[BigRational],
    target: &BigRational,
) -> Result<Vec<Vec<BigInt>>> {
    if target.is_negative() {
        return Ok(vec![]);
    }
    let q = cholesky(gram)?;
    let n = gram.len();
    let mut partial = vec![BigInt::zero(); n];
    let mut out = Vec::new();
    let mut centers = vec![target.clone(), target.clone()];
    search(&q, shift, target, n - 1, target.clone(), &mut partial, &mut centers, &mut out, true);
    Ok(out.into_iter().map(|(v, _)| v).collect())
}

/// Vector count sanity helper: number of vectors of each norm up to bound.
pub fn norm_histogram(gram: &ZMat, bound: &BigInt) -> Result<Vec<(BigInt, usize)>> {
    let mut hist: std::collections::BTreeMap<BigInt, usize> = Default::default();
    for (_, norm) in short_vectors(gram, bound)? {
        *hist.entry(norm).or_insert(0) += 2; // count both signs
    }
    Ok(hist.into_iter().collect())
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::zmat_from_i64;

    #[test]
    fn rank_one() {
        let gram = zmat_from_i64(&[vec![2]]);
        let v = short_vectors(&gram, &BigInt::from(2)).unwrap();
        assert_eq!(v, vec![(vec![BigInt::one()], BigInt::from(2))]);
    }

    #[test]
    fn square_lattice_norm_counts() {
        let gram = zmat_from_i64(&[vec![1, 0], vec![0, 1]]);
        let h = norm_histogram(&gram, &BigInt::from(2)).unwrap();
        // norm 1: (+-1,0),(0,+-1); norm 2: four diagonal vectors
        assert_eq!(h, vec![(BigInt::from(1), 4), (BigInt::from(2), 4)]);
    }

    #[test]
    fn a2_minimal_vectors() {
        let gram = zmat_from_i64(&[vec![2, -1], vec![-1, 2]]);
        let v = short_vectors(&gram, &BigInt::from(2)).unwrap();
        assert_eq!(v.len(), 3); // 6 roots up to sign
        assert!(v.iter().all(|(_, n)| *n == BigInt::from(2)));
    }

    #[test]
    fn coset_shifted_square() {
        let gram = zmat_from_i64(&[vec![1, 0], vec![0, 1]]);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let shift = vec![half.clone(), half.clone()];
        let target = BigRational::new(BigInt::one(), BigInt::from(2));
        let v = coset_vectors_of_norm(&gram, &shift, &target).unwrap();
        // (x+1/2)^2 + (y+1/2)^2 = 1/2 has the four solutions x,y in {0,-1}
        assert_eq!(v.len(), 4);
    }
}
