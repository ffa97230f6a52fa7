//! Hyperbolic-plane bookkeeping in lattices of signature (1, n-1):
//! orthogonal complements of hyperbolic pairs, Weyl-group nefification of
//! isotropic classes, and brute-force search for isotropic vectors with
//! small pairing against an isometry image.

use super::IntegralLattice;
use crate::error::{Error, Result};
use crate::exact::enumerate::{coset_vectors_of_norm, short_vectors};
use crate::exact::mat::{hnf_with_transform, zmat_mul, zmat_mul_vec, Mat, ZMat};
use crate::exact::rat::Rationals;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Basis of the saturated sublattice {x : x.G.c = 0 for all columns c}.
/// Rows of the result are lattice coordinates.
fn perp_basis(gram: &ZMat, columns: &[Vec<BigInt>]) -> ZMat {
    let n = gram.len();
    let a: ZMat = (0..n)
        .map(|i| {
            columns
                .iter()
                .map(|c| {
                    let mut acc = BigInt::zero();
                    for j in 0..n {
                        acc += &gram[i][j] * &c[j];
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let (h, u) = hnf_with_transform(&a);
    let mut out = Vec::new();
    for (i, row) in h.iter().enumerate() {
        if row.iter().all(|x| x.is_zero()) {
            out.push(u[i].clone());
        }
    }
    out
}

/// Gram of {f, e'}^perp for a hyperbolic pair (f isotropic, e.f = 1,
/// e' = e - (e^2/2) f made isotropic) plus the rational projection onto
/// the complement: column i of the matrix expresses the projection of the
/// i-th basis vector in the complement basis.
pub fn hyperbolic_complement(
    n: &IntegralLattice,
    f: &[BigInt],
    e: &[BigInt],
) -> Result<(IntegralLattice, ZMat, Vec<Vec<BigRational>>)> {
    if !n.norm(f).is_zero() {
        return Err(Error::Domain("f must be isotropic".into()));
    }
    if !n.pair(e, f).is_one() {
        return Err(Error::Domain("e.f must equal 1".into()));
    }
    let e_sq = n.norm(e);
    if e_sq.is_odd() {
        return Err(Error::Domain("e^2 must be even".into()));
    }
    // replace e by the isotropic partner e' = e - (e^2/2) f
    let half = &e_sq / BigInt::from(2);
    let eprime: Vec<BigInt> = e.iter().zip(f).map(|(a, b)| a - &half * b).collect();
    debug_assert!(n.norm(&eprime).is_zero());
    let basis = perp_basis(&n.gram, &[f.to_vec(), eprime.clone()]);
    let rank = n.rank();
    if basis.len() != rank - 2 {
        return Err(Error::Internal("hyperbolic complement has wrong rank".into()));
    }
    let gram = {
        let imgs: Vec<Vec<BigInt>> = basis.iter().map(|b| zmat_mul_vec(&n.gram, b)).collect();
        (0..basis.len())
            .map(|i| {
                (0..basis.len())
                    .map(|j| {
                        let mut acc = BigInt::zero();
                        for k in 0..rank {
                            acc += &basis[i][k] * &imgs[j][k];
                        }
                        acc
                    })
                    .collect()
            })
            .collect::<ZMat>()
    };
    let complement = IntegralLattice::new(gram)?;
    // projection x -> x - (x.e') f - (x.f) e', written in the complement basis
    let q = Rationals;
    let basis_t = Mat::from_rows(
        q,
        (0..rank)
            .map(|k| {
                basis
                    .iter()
                    .map(|b| BigRational::from_integer(b[k].clone()))
                    .collect()
            })
            .collect(),
    );
    let mut proj: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); rank]; rank - 2];
    for i in 0..rank {
        let mut x = vec![BigInt::zero(); rank];
        x[i] = BigInt::one();
        let a = n.pair(&x, &eprime);
        let b = n.pair(&x, f);
        let img: Vec<BigRational> = (0..rank)
            .map(|k| BigRational::from_integer(&x[k] - &a * &f[k] - &b * &eprime[k]))
            .collect();
        let coords = basis_t
            .solve(&img)
            .ok_or_else(|| Error::Internal("projection does not land in the complement".into()))?;
        for (r, c) in coords.into_iter().enumerate() {
            proj[r][i] = c;
        }
    }
    Ok((complement, basis, proj))
}

/// All roots r (r^2 = -2) with prescribed pairing r.h = m > 0, for h with
/// h^2 > 0 in a hyperbolic lattice.
fn roots_with_height(g: &ZMat, h: &[BigInt], m: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    let gh = zmat_mul_vec(g, h);
    // particular solution of x.gh = m and the kernel of the pairing
    let col: ZMat = gh.iter().map(|x| vec![x.clone()]).collect();
    let (hn, u) = hnf_with_transform(&col);
    let gcd = hn[0][0].clone();
    let (q, r) = m.div_rem(&gcd);
    if !r.is_zero() {
        return Ok(vec![]);
    }
    let xp: Vec<BigInt> = u[0].iter().map(|x| x * &q).collect();
    let kernel: ZMat = (1..g.len()).map(|i| u[i].clone()).collect();
    // x = xp + y K; expand x.G.x = c0 + 2 y.b - y.Q.y with Q = -K G K^t
    let gk = zmat_mul(&kernel, g);
    let qmat: ZMat = (0..kernel.len())
        .map(|i| {
            (0..kernel.len())
                .map(|j| {
                    let mut acc = BigInt::zero();
                    for k in 0..g.len() {
                        acc += &gk[i][k] * &kernel[j][k];
                    }
                    -acc
                })
                .collect()
        })
        .collect();
    let b: Vec<BigInt> = (0..kernel.len())
        .map(|i| {
            let mut acc = BigInt::zero();
            for k in 0..g.len() {
                acc += &gk[i][k] * &xp[k];
            }
            acc
        })
        .collect();
    let c0 = {
        let gx = zmat_mul_vec(g, &xp);
        xp.iter().zip(&gx).map(|(a, c)| a * c).sum::<BigInt>()
    };
    // complete the square: (y - s) Q (y - s)^t = c0 + s.Q.s + 2 at x^2 = -2
    let qr = Mat::from_rows(
        Rationals,
        qmat.iter()
            .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect(),
    );
    let brat: Vec<BigRational> = b.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let s = qr
        .solve(&brat)
        .ok_or_else(|| Error::Domain("height hyperplane is degenerate".into()))?;
    let mut target = BigRational::from_integer(c0 + BigInt::from(2));
    for (i, si) in s.iter().enumerate() {
        for (j, sj) in s.iter().enumerate() {
            target += si * BigRational::from_integer(qmat[i][j].clone()) * sj;
        }
    }
    let shift: Vec<BigRational> = s.iter().map(|x| -x).collect();
    let mut out = Vec::new();
    for y in coset_vectors_of_norm(&qmat, &shift, &target)? {
        let mut root = xp.clone();
        for (i, yi) in y.iter().enumerate() {
            for k in 0..g.len() {
                root[k] += yi * &kernel[i][k];
            }
        }
        out.push(root);
    }
    out.sort();
    Ok(out)
}

/// Move the isotropic class f into the nef chamber fixed by `interior`
/// using reflections in norm -2 roots. Returns the final vector and the
/// word of reflecting roots, applied left to right.
pub fn weyl_nefify(
    n: &IntegralLattice,
    f: &[BigInt],
    interior: &[BigInt],
) -> Result<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    let (pos, negs) = n.signature()?;
    if pos != 1 || negs + 1 != n.rank() {
        return Err(Error::Domain("nefification needs signature (1, n-1)".into()));
    }
    if !n.norm(f).is_zero() {
        return Err(Error::Domain("f must be isotropic".into()));
    }
    let h_sq = n.norm(interior);
    if !h_sq.is_positive() {
        return Err(Error::Domain("interior must have positive square".into()));
    }
    // chamber interior must not lie on a wall that touches f
    let wall_basis = perp_basis(&n.gram, &[interior.to_vec()]);
    if !wall_basis.is_empty() {
        let wall_gram: ZMat = {
            let imgs: Vec<Vec<BigInt>> =
                wall_basis.iter().map(|b| zmat_mul_vec(&n.gram, b)).collect();
            (0..wall_basis.len())
                .map(|i| {
                    (0..wall_basis.len())
                        .map(|j| {
                            let mut acc = BigInt::zero();
                            for k in 0..n.rank() {
                                acc -= &wall_basis[i][k] * &imgs[j][k];
                            }
                            acc
                        })
                        .collect()
                })
                .collect()
        };
        for (y, norm) in short_vectors(&wall_gram, &BigInt::from(2))? {
            if norm != BigInt::from(2) {
                continue;
            }
            let root: Vec<BigInt> = (0..n.rank())
                .map(|k| {
                    let mut acc = BigInt::zero();
                    for (i, yi) in y.iter().enumerate() {
                        acc += yi * &wall_basis[i][k];
                    }
                    acc
                })
                .collect();
            if !n.pair(&root, f).is_zero() {
                return Err(Error::Domain("interior vector lies on a wall meeting f".into()));
            }
        }
    }
    let mut cur: Vec<BigInt> = if n.pair(f, interior).is_negative() {
        f.iter().map(|x| -x).collect()
    } else {
        f.to_vec()
    };
    let mut word: Vec<Vec<BigInt>> = Vec::new();
    let mut guard = 0usize;
    loop {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Internal("nefification did not terminate".into()));
        }
        let d = n.pair(&cur, interior);
        if d.is_negative() {
            return Err(Error::Internal("nefification left the positive cone".into()));
        }
        // a separating root r has 0 < r.interior < cur.interior
        let mut violator: Option<Vec<BigInt>> = None;
        let dmax = d.to_i64().ok_or_else(|| Error::Unsupported("pairing exceeds i64".into()))?;
        'outer: for m in 1..dmax.max(1) {
            for r in roots_with_height(&n.gram, interior, &BigInt::from(m))? {
                if n.pair(&r, &cur).is_negative() {
                    violator = Some(r);
                    break 'outer;
                }
            }
        }
        match violator {
            None => return Ok((cur, word)),
            Some(r) => {
                // reflection x -> x + (x.r) r for r^2 = -2
                let c = n.pair(&cur, &r);
                for k in 0..n.rank() {
                    let t = &c * &r[k];
                    cur[k] += t;
                }
                word.push(r);
            }
        }
    }
}

/// Search the box of primitive vectors with coordinates bounded by
/// `budget` for isotropic f minimizing the pairing f.G.(M f) >= 0.
/// Shells of increasing max-abs coordinate; ties broken lexicographically.
pub fn nef_isotropic_search(
    g: &ZMat,
    m: &ZMat,
    budget: u32,
) -> Result<(Vec<BigInt>, BigInt)> {
    let n = g.len();
    if n == 0 {
        return Err(Error::NotFound("no isotropic vector within budget".into()));
    }
    let gi: Vec<Vec<i64>> = g
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::Unsupported("entry exceeds i64".into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let gm = zmat_mul(g, m);
    let gmi: Vec<Vec<i64>> = gm
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::Unsupported("entry exceeds i64".into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut best: Option<(BigInt, u32, Vec<i64>)> = None;
    let mut f = vec![0i64; n];
    for shell in 1..=budget {
        search_shell(&gi, &gmi, shell as i64, 0, &mut f, 0, &mut |f, pairing| {
            if pairing < 0 {
                return;
            }
            // primitive, one representative per +- pair
            let mut gcd = 0i64;
            for &x in f.iter() {
                gcd = gcd.gcd(&x.abs());
            }
            if gcd != 1 {
                return;
            }
            if f.iter().find(|&&x| x != 0).map(|&x| x < 0).unwrap_or(true) {
                return;
            }
            let p = BigInt::from(pairing);
            let better = match &best {
                None => true,
                Some((bp, bs, bf)) => {
                    p < *bp || (p == *bp && *bs == shell && f < bf.as_slice())
                }
            };
            if better {
                best = Some((p, shell, f.to_vec()));
            }
        });
        if let Some((p, s, _)) = &best {
            // later shells cannot improve a zero pairing found earlier
            if p.is_zero() && *s == shell {
                break;
            }
        }
    }
    match best {
        Some((p, _, f)) => Ok((f.into_iter().map(BigInt::from).collect(), p)),
        None => Err(Error::NotFound("no isotropic vector within budget".into())),
    }
}

/// Recursive coordinate assignment over the box [-b, b]^n, keeping the
/// partial norm and pairing accumulators exact in i64 and only reporting
/// vectors that touch the shell boundary and are isotropic.
fn search_shell(
    g: &[Vec<i64>],
    gm: &[Vec<i64>],
    b: i64,
    level: usize,
    f: &mut Vec<i64>,
    norm: i64,
    report: &mut impl FnMut(&[i64], i64),
) {
    let n = g.len();
    if level == n {
        if norm == 0 && f.iter().any(|&x| x.abs() == b) && f.iter().any(|&x| x != 0) {
            // full pairing f^t (G M) f, computed only on isotropic hits
            let mut pairing = 0i64;
            for i in 0..n {
                if f[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    pairing += f[i] * gm[i][j] * f[j];
                }
            }
            report(f, pairing);
        }
        return;
    }
    for c in -b..=b {
        f[level] = c;
        // norm contribution of coordinate `level` against the prefix
        let mut delta = c * c * g[level][level];
        for j in 0..level {
            delta += 2 * c * g[level][j] * f[j];
        }
        search_shell(g, gm, b, level + 1, f, norm + delta, report);
    }
    f[level] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::zmat_from_i64;

    fn u_plus_a1() -> IntegralLattice {
        IntegralLattice::from_i64(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -2]]).unwrap()
    }

    fn bv(coords: &[i64]) -> Vec<BigInt> {
        coords.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn complement_of_u_in_u_plus_a1() {
        let n = u_plus_a1();
        let (c, _basis, proj) = hyperbolic_complement(&n, &bv(&[1, 0, 0]), &bv(&[0, 1, 0])).unwrap();
        assert_eq!(c.gram, zmat_from_i64(&[vec![-2]]));
        // the A1 generator projects to itself
        assert_eq!(proj[0][2], BigRational::one());
    }

    #[test]
    fn complement_with_norm_minus_two_section() {
        // e has e^2 = -2: the isotropic partner trick must kick in
        let n = IntegralLattice::from_i64(&[vec![0, 1, 0], vec![1, -2, 0], vec![0, 0, -2]]).unwrap();
        let (c, _basis, _proj) =
            hyperbolic_complement(&n, &bv(&[1, 0, 0]), &bv(&[0, 1, 0])).unwrap();
        assert_eq!(c.gram, zmat_from_i64(&[vec![-2]]));
    }

    #[test]
    fn nefify_fixes_nothing_when_already_nef() {
        let n = u_plus_a1();
        let f = bv(&[0, 1, 0]);
        let h = bv(&[3, 4, 1]);
        let (w, word) = weyl_nefify(&n, &f, &h).unwrap();
        assert_eq!(w, f);
        assert!(word.is_empty());
    }

    #[test]
    fn nefify_reflects_across_one_wall() {
        // (1,0,0) pairs -1 with the root (1,-1,0) in the chamber of h;
        // one reflection lands on (0,1,0)
        let n = u_plus_a1();
        let start = bv(&[1, 0, 0]);
        let h = bv(&[3, 4, 1]);
        let (w, word) = weyl_nefify(&n, &start, &h).unwrap();
        assert_eq!(w, bv(&[0, 1, 0]));
        assert_eq!(word.len(), 1);
    }

    #[test]
    fn nefify_rejects_interior_on_a_wall() {
        let n = u_plus_a1();
        // h = (1,1,0) is orthogonal to the root (1,-1,0) which meets f
        assert!(weyl_nefify(&n, &bv(&[1, 0, 0]), &bv(&[1, 1, 0])).is_err());
    }

    #[test]
    fn nefify_reflects_order_two_example() {
        // basis (o, f) with o^2 = -2, o.f = 1, f^2 = 0: the class o + f
        // pairs -1 with the root o, one reflection lands on f
        let n = IntegralLattice::from_i64(&[vec![-2, 1], vec![1, 0]]).unwrap();
        let start = bv(&[1, 1]);
        let h = bv(&[1, 3]);
        assert!(n.norm(&start).is_zero());
        let (w, word) = weyl_nefify(&n, &start, &h).unwrap();
        assert_eq!(w, bv(&[0, 1]));
        assert_eq!(word.len(), 1);
    }

    #[test]
    fn isotropic_search_in_u() {
        // both isotropic classes of U pair 1 with their swap image
        let g = zmat_from_i64(&[vec![0, 1], vec![1, 0]]);
        let swap = zmat_from_i64(&[vec![0, 1], vec![1, 0]]);
        let (f, p) = nef_isotropic_search(&g, &swap, 2).unwrap();
        assert_eq!(p, BigInt::from(1));
        assert_eq!(f, bv(&[0, 1]));
    }

    #[test]
    fn isotropic_search_identity_gives_zero() {
        let g = zmat_from_i64(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -2]]);
        let id = crate::exact::mat::zmat_identity(3);
        let (_, p) = nef_isotropic_search(&g, &id, 1).unwrap();
        assert_eq!(p, BigInt::zero());
    }

    #[test]
    fn no_isotropic_vector_reports_not_found() {
        let g = zmat_from_i64(&[vec![2, 0], vec![0, 2]]);
        let id = crate::exact::mat::zmat_identity(2);
        assert!(nef_isotropic_search(&g, &id, 3).is_err());
    }
}
