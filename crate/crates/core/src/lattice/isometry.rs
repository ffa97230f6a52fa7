//! Definite lattice isometry testing and automorphism-group counting by
//! backtracking over short-vector images of a basis.

use super::IntegralLattice;
use crate::error::{Error, Result};
use crate::exact::enumerate::{norm_histogram, short_vectors};
use crate::exact::mat::ZMat;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

struct Search {
    n: usize,
    /// Pairing targets: images w_i must satisfy w_i . g2 . w_j = g1[i][j].
    g1: Vec<Vec<i64>>,
    /// Candidate image vectors in the codomain basis, both signs.
    cand: Vec<Vec<i64>>,
    /// Precomputed g2 * candidate for O(n) pairing checks.
    cand_gw: Vec<Vec<i64>>,
    cand_norm: Vec<i64>,
}

fn to_i64_mat(m: &ZMat) -> Result<Vec<Vec<i64>>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::Unsupported("entry exceeds i64".into())))
                .collect()
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Search {
    fn new(g1: &ZMat, g2: &ZMat) -> Result<Self> {
        let n = g1.len();
        let g1i = to_i64_mat(g1)?;
        let g2i = to_i64_mat(g2)?;
        let bound = g1i.iter().enumerate().map(|(i, r)| r[i]).max().unwrap_or(0);
        let mut cand = Vec::new();
        if n > 0 && bound > 0 {
            for (v, _) in short_vectors(g2, &BigInt::from(bound))? {
                let vi: Vec<i64> = v.iter().map(|x| x.to_i64().unwrap()).collect();
                let neg: Vec<i64> = vi.iter().map(|x| -x).collect();
                cand.push(vi);
                cand.push(neg);
            }
        }
        let cand_gw: Vec<Vec<i64>> =
            cand.iter().map(|w| g2i.iter().map(|row| dot(row, w)).collect()).collect();
        let cand_norm: Vec<i64> = cand.iter().zip(&cand_gw).map(|(w, gw)| dot(w, gw)).collect();
        Ok(Search { n, g1: g1i, cand, cand_gw, cand_norm })
    }

    /// Candidate k is a valid image of e_level given the chosen prefix.
    fn fits(&self, k: usize, level: usize, chosen: &[usize]) -> bool {
        if self.cand_norm[k] != self.g1[level][level] {
            return false;
        }
        for (j, &cj) in chosen.iter().enumerate() {
            if dot(&self.cand_gw[k], &self.cand[cj]) != self.g1[level][j] {
                return false;
            }
        }
        true
    }

    /// Try to extend the chosen prefix to a full isometry.
    fn complete(&self, chosen: &mut Vec<usize>) -> bool {
        let level = chosen.len();
        if level == self.n {
            return true;
        }
        for k in 0..self.cand.len() {
            if self.fits(k, level, chosen) {
                chosen.push(k);
                if self.complete(chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}

/// An integer matrix T with T^t g1 T = g2 when the positive definite
/// lattices are isometric, None otherwise. Column i of T is the image of
/// the i-th basis vector of L2 expressed in the basis of L1.
pub fn is_isometric_definite(l1: &IntegralLattice, l2: &IntegralLattice) -> Result<Option<ZMat>> {
    if !l1.is_positive_definite() || !l2.is_positive_definite() {
        return Err(Error::Domain("isometry testing needs positive definite lattices".into()));
    }
    if l1.rank() != l2.rank() || l1.det() != l2.det() {
        return Ok(None);
    }
    let n = l1.rank();
    if n == 0 {
        return Ok(Some(vec![]));
    }
    let maxdiag = |g: &ZMat| g.iter().enumerate().map(|(i, r)| r[i].clone()).max().unwrap();
    let bound = maxdiag(&l1.gram).min(maxdiag(&l2.gram));
    if norm_histogram(&l1.gram, &bound)? != norm_histogram(&l2.gram, &bound)? {
        return Ok(None);
    }
    // search images in l1 of the basis of l2, so T columns live in l1
    let s = Search::new(&l2.gram, &l1.gram)?;
    let mut chosen = Vec::new();
    if !s.complete(&mut chosen) {
        return Ok(None);
    }
    let mut t = vec![vec![BigInt::zero(); n]; n];
    for (i, &k) in chosen.iter().enumerate() {
        for r in 0..n {
            t[r][i] = BigInt::from(s.cand[k][r]);
        }
    }
    debug_assert!(super::verify_isometry_between(&t, &l1.gram, &l2.gram));
    Ok(Some(t))
}

/// Order of the orthogonal group O(L) of a definite lattice, computed by a
/// stabilizer chain: the group order is the product over basis vectors of
/// the number of extendable images of e_i fixing e_0..e_{i-1}.
pub fn automorphism_count(l: &IntegralLattice) -> Result<BigInt> {
    let pos = if l.is_negative_definite() { l.negated() } else { l.clone() };
    if !pos.is_positive_definite() {
        return Err(Error::Domain("automorphism counting needs a definite lattice".into()));
    }
    let n = pos.rank();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let s = Search::new(&pos.gram, &pos.gram)?;
    // index of basis vector e_i among the signed candidates
    let basis_index = |i: usize| -> usize {
        s.cand
            .iter()
            .position(|w| w.iter().enumerate().all(|(r, &x)| x == i64::from(r == i)))
            .expect("basis vector must appear among candidates of its own norm")
    };
    let mut order = BigInt::one();
    let mut prefix: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut extendable = 0u64;
        for k in 0..s.cand.len() {
            if !s.fits(k, i, &prefix) {
                continue;
            }
            let mut chosen = prefix.clone();
            chosen.push(k);
            if s.complete(&mut chosen) {
                extendable += 1;
            }
        }
        order *= BigInt::from(extendable);
        prefix.push(basis_index(i));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IntegralLattice;

    fn lat(rows: &[Vec<i64>]) -> IntegralLattice {
        IntegralLattice::from_i64(rows).unwrap()
    }

    #[test]
    fn aut_of_rank_one() {
        assert_eq!(automorphism_count(&lat(&[vec![1]])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn aut_of_a2_is_12() {
        let a2 = lat(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(automorphism_count(&a2).unwrap(), BigInt::from(12));
    }

    #[test]
    fn aut_of_square_lattice_is_8() {
        assert_eq!(automorphism_count(&lat(&[vec![2, 0], vec![0, 2]])).unwrap(), BigInt::from(8));
    }

    #[test]
    fn aut_counts_negative_definite_input() {
        let a2neg = lat(&[vec![-2, 1], vec![1, -2]]);
        assert_eq!(automorphism_count(&a2neg).unwrap(), BigInt::from(12));
    }

    #[test]
    fn e8_automorphism_order() {
        let e8 = lat(&[
            vec![2, -1, 0, 0, 0, 0, 0, 0],
            vec![-1, 2, -1, 0, 0, 0, 0, 0],
            vec![0, -1, 2, -1, 0, 0, 0, 0],
            vec![0, 0, -1, 2, -1, 0, 0, 0],
            vec![0, 0, 0, -1, 2, -1, 0, -1],
            vec![0, 0, 0, 0, -1, 2, -1, 0],
            vec![0, 0, 0, 0, 0, -1, 2, 0],
            vec![0, 0, 0, 0, -1, 0, 0, 2],
        ]);
        assert_eq!(automorphism_count(&e8).unwrap(), BigInt::from(696729600u64));
    }

    #[test]
    fn isometric_pair_found_and_verified() {
        let g1 = lat(&[vec![2, 1], vec![1, 4]]);
        // same form in a changed basis
        let u = crate::exact::mat::zmat_from_i64(&[vec![1, 1], vec![0, 1]]);
        let g2m = crate::exact::mat::zmat_mul(
            &crate::exact::mat::zmat_mul(&crate::exact::mat::zmat_transpose(&u), &g1.gram),
            &u,
        );
        let g2 = IntegralLattice::new(g2m).unwrap();
        let t = is_isometric_definite(&g1, &g2).unwrap().expect("isometry must exist");
        assert!(crate::lattice::verify_isometry_between(&t, &g1.gram, &g2.gram));
    }

    #[test]
    fn non_isometric_same_det() {
        let a = lat(&[vec![2, 0], vec![0, 8]]);
        let b = lat(&[vec![4, 0], vec![0, 4]]);
        assert!(is_isometric_definite(&a, &b).unwrap().is_none());
    }

    #[test]
    fn indefinite_rejected() {
        let u = lat(&[vec![0, 1], vec![1, 0]]);
        assert!(automorphism_count(&u).is_err());
        assert!(is_isometric_definite(&u, &u).is_err());
    }
}
