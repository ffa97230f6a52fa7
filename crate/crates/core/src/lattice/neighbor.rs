//! Kneser p-neighbors: construction of L(v) = L_v + Z(v/p) from a seed
//! vector, enumeration of admissible seed classes, and the isotropic
//! vector realizing the neighbor inside U + L.

use super::IntegralLattice;
use crate::error::{Error, Result};
use crate::exact::fp::Fp;
use crate::exact::mat::{hnf_with_transform, zmat_mul_vec, Mat, ZMat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn mod_p(x: &BigInt, p: &BigInt) -> BigInt {
    x.mod_floor(p)
}

fn check_seed(l: &IntegralLattice, p: u64, v: &[BigInt]) -> Result<()> {
    let pb = BigInt::from(p);
    if v.len() != l.rank() {
        return Err(Error::Domain("seed length must equal lattice rank".into()));
    }
    if l.rank() < 3 {
        return Err(Error::Domain("neighbor construction needs rank >= 3".into()));
    }
    if (l.det() % &pb).is_zero() {
        return Err(Error::Domain("p must not divide the determinant".into()));
    }
    if v.iter().all(|x| (x % &pb).is_zero()) {
        return Err(Error::Domain("seed must not lie in pL".into()));
    }
    let norm = l.norm(v);
    if !(&norm % (&pb * &pb)).is_zero() {
        return Err(Error::Domain("seed norm must vanish mod p^2".into()));
    }
    Ok(())
}

/// Gram matrix of the p-neighbor L(v) = L_v + Z(v/p), where
/// L_v = {x in L : x.v = 0 mod p}. Computed from a Hermite basis of the
/// scaled sublattice p L(v) inside L, so the result is exactly integral.
pub fn p_neighbor(l: &IntegralLattice, p: u64, v: &[BigInt]) -> Result<IntegralLattice> {
    check_seed(l, p, v)?;
    let n = l.rank();
    let pb = BigInt::from(p);
    let f = Fp::new(p);
    let gv = zmat_mul_vec(&l.gram, v);
    // kernel of x -> x.Gv mod p gives L_v together with pZ^n
    let row: Vec<u64> = gv.iter().map(|x| f.reduce_bigint(x)).collect();
    let kernel = Mat::from_rows(f, vec![row]).kernel();
    let p2 = &pb * &pb;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for k in kernel {
        rows.push(k.iter().map(|&x| BigInt::from(x) * &pb).collect());
    }
    for i in 0..n {
        let mut r = vec![BigInt::zero(); n];
        r[i] = p2.clone();
        rows.push(r);
    }
    rows.push(v.to_vec());
    let (h, _) = hnf_with_transform(&rows);
    let basis: ZMat = h.into_iter().take(n).collect();
    if basis.iter().any(|r| r.iter().all(|x| x.is_zero())) {
        return Err(Error::Internal("neighbor basis has deficient rank".into()));
    }
    // Gram of L(v) = B G B^t / p^2 for the scaled basis B of p L(v)
    let mut gram = vec![vec![BigInt::zero(); n]; n];
    let imgs: Vec<Vec<BigInt>> = basis.iter().map(|b| zmat_mul_vec(&l.gram, b)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut acc = BigInt::zero();
            for k in 0..n {
                acc += &basis[i][k] * &imgs[j][k];
            }
            let (q, r) = acc.div_rem(&p2);
            if !r.is_zero() {
                return Err(Error::Internal("neighbor gram not divisible by p^2".into()));
            }
            gram[i][j] = q;
        }
    }
    let out = IntegralLattice::new(gram)?;
    debug_assert_eq!(out.det().abs(), l.det().abs());
    Ok(out)
}

/// One admissible seed per projective class of v mod p, in lexicographic
/// order of the class representative. Each emitted v satisfies
/// v^2 = 0 mod p^2, strengthened to mod 2p^2 when L is even so that the
/// neighbor stays even.
pub fn neighbor_seeds(l: &IntegralLattice, p: u64) -> Result<Vec<Vec<BigInt>>> {
    let pb = BigInt::from(p);
    if (l.det() % &pb).is_zero() {
        return Err(Error::Domain("p must not divide the determinant".into()));
    }
    let n = l.rank();
    let mut out = Vec::new();
    // projective representatives: first nonzero coordinate equals 1
    let mut x = vec![BigInt::zero(); n];
    loop {
        // advance odometer over {0..p-1}^n
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            x[i] += 1u32;
            if x[i] < pb {
                break;
            }
            x[i] = BigInt::zero();
        }
        match x.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_one() => {}
            _ => continue,
        }
        if let Some(v) = lift_seed(l, p, &x) {
            out.push(v);
        }
    }
}

/// Lift a projective class x mod p to a seed v = x + p w with the right
/// norm divisibility, or None when the class is not isotropic enough.
fn lift_seed(l: &IntegralLattice, p: u64, x: &[BigInt]) -> Option<Vec<BigInt>> {
    let pb = BigInt::from(p);
    let norm = l.norm(x);
    let gx = zmat_mul_vec(&l.gram, x);
    let even = l.is_even();
    if p == 2 {
        // class invariant: v^2 mod 4 is fixed on x + 2L
        if !(&norm % 4u32).is_zero() {
            return None;
        }
        if !even {
            return Some(x.to_vec());
        }
        // even lattice: fix v^2 mod 8 using v = x + 2 e_j with (Gx)_j odd
        if (&norm % 8u32).is_zero() {
            return Some(x.to_vec());
        }
        let j = gx.iter().position(|c| c.is_odd())?;
        let mut v = x.to_vec();
        v[j] += 2u32;
        debug_assert!((l.norm(&v) % 8u32).is_zero());
        Some(v)
    } else {
        // odd p: class must be isotropic mod p, then one Hensel step
        if !mod_p(&norm, &pb).is_zero() {
            return None;
        }
        let j = gx.iter().position(|c| !mod_p(c, &pb).is_zero())?;
        // v = x + p c e_j; c kills the norm mod p^2 (mod 2p^2 when even)
        let c = if even {
            let s = &norm / (BigInt::from(2) * &pb);
            let inv = crate::exact::mat::mod_inverse(&mod_p(&gx[j], &pb), &pb)?;
            mod_p(&(-s * inv), &pb)
        } else {
            let m = &norm / &pb;
            let inv = crate::exact::mat::mod_inverse(&mod_p(&(BigInt::from(2) * &gx[j]), &pb), &pb)?;
            mod_p(&(-m * inv), &pb)
        };
        let mut v = x.to_vec();
        v[j] += &pb * c;
        let target = if even { BigInt::from(2) * &pb * &pb } else { &pb * &pb };
        debug_assert!((l.norm(&v) % target).is_zero());
        Some(v)
    }
}

/// The isotropic vector f2 = -(v^2 / 2p) f1 + p e1 + v inside U + L,
/// whose hyperbolic complement realizes the p-neighbor L(v). The ambient
/// basis is (f1, e1, basis of L) with f1^2 = e1^2 = 0, f1.e1 = 1.
pub fn neighbor_isotropic(
    l1: &IntegralLattice,
    v: &[BigInt],
    p: u64,
) -> Result<(Vec<BigInt>, IntegralLattice)> {
    if !l1.is_even() {
        return Err(Error::Domain("isotropic realization needs an even lattice".into()));
    }
    check_seed(l1, p, v)?;
    let pb = BigInt::from(p);
    let norm = l1.norm(v);
    if !(&norm % (BigInt::from(2) * &pb * &pb)).is_zero() {
        return Err(Error::Domain("seed norm must vanish mod 2p^2".into()));
    }
    let n = l1.rank();
    let mut ambient = vec![vec![BigInt::zero(); n + 2]; n + 2];
    ambient[0][1] = BigInt::one();
    ambient[1][0] = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            ambient[i + 2][j + 2] = l1.gram[i][j].clone();
        }
    }
    let ambient = IntegralLattice::new(ambient)?;
    let mut f2 = vec![-(&norm / (BigInt::from(2) * &pb)), pb.clone()];
    f2.extend(v.iter().cloned());
    let f1: Vec<BigInt> =
        std::iter::once(BigInt::one()).chain(std::iter::repeat(BigInt::zero()).take(n + 1)).collect();
    // the defining identities, checked rather than trusted
    if !ambient.norm(&f2).is_zero() || ambient.pair(&f2, &f1) != pb {
        return Err(Error::Internal("isotropic certificate failed".into()));
    }
    Ok((f2, ambient))
}
