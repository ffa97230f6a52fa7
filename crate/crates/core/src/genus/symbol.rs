//! Local symbols of integral quadratic lattices: p-adic Jordan
//! decomposition and the 2-adic canonical form (oddity fusion and sign
//! walking), which together decide local isometry.

use crate::error::{Error, Result};
use crate::exact::mat::ZMat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

/// One Jordan constituent at scale p^scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanBlock {
    pub scale: u32,
    pub rank: usize,
    /// +1 or -1: Legendre class of the unit determinant (odd p), or the
    /// mod-8 class {1,7} vs {3,5} at p = 2.
    pub sign: i8,
    /// p = 2 only: true when the block contains an odd (type I) diagonal part.
    pub odd: bool,
    /// p = 2 only: trace oddity mod 8 (0 for type II blocks).
    pub oddity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSymbol {
    pub p: BigInt,
    pub blocks: Vec<JordanBlock>,
}

fn val_p(x: &BigRational, p: &BigInt) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let mut v: i64 = 0;
    let mut n = x.numer().clone();
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    let mut d = x.denom().clone();
    while (&d % p).is_zero() {
        d /= p;
        v -= 1;
    }
    Some(v)
}

/// Unit part x / p^v as an integer mod p^k (x must be p-integral up to the
/// denominator being a p-unit).
fn unit_part_mod(x: &BigRational, p: &BigInt, v: i64, modulus: &BigInt) -> BigInt {
    let mut n = x.numer().clone();
    let mut d = x.denom().clone();
    let mut v = v;
    while v > 0 {
        if (&n % p).is_zero() {
            n /= p;
        } else {
            d *= p;
        }
        v -= 1;
    }
    while v < 0 {
        if (&d % p).is_zero() {
            d /= p;
        } else {
            n *= p;
        }
        v += 1;
    }
    let dinv = crate::exact::mat::mod_inverse(&d.mod_floor(modulus), modulus)
        .expect("denominator is a p-unit");
    (n.mod_floor(modulus) * dinv).mod_floor(modulus)
}

fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    // a assumed a p-unit, p odd
    let e = (p - BigInt::one()) / BigInt::from(2);
    let r = a.modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Compute the Jordan decomposition of a symmetric integer Gram matrix over
/// Z_p and return the local symbol (uncanonicalized at p = 2).
pub fn local_symbol(gram: &ZMat, p: &BigInt) -> Result<LocalSymbol> {
    let n = gram.len();
    if n == 0 {
        return Ok(LocalSymbol { p: p.clone(), blocks: vec![] });
    }
    let mut g: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    if g.iter().enumerate().any(|(i, r)| r.iter().enumerate().any(|(j, x)| *x != g[j][i].clone())) {
        return Err(Error::Domain("gram matrix must be symmetric".into()));
    }
    let two = p == &BigInt::from(2);
    // collected unit data per scale
    struct Acc {
        ones: Vec<BigInt>,   // unit diagonal entries mod 8 (or mod p)
        twos: Vec<BigInt>,   // 2x2 even block determinants mod 8 (p = 2 only)
    }
    let mut per_scale: std::collections::BTreeMap<u32, Acc> = Default::default();
    let mut active: Vec<usize> = (0..n).collect();

    while !active.is_empty() {
        // minimum valuation over the active block
        let mut minv: Option<(i64, usize, usize)> = None;
        for (ai, &i) in active.iter().enumerate() {
            for &j in &active[ai..] {
                if let Some(v) = val_p(&g[i][j], p) {
                    if minv.map(|(mv, _, _)| v < mv).unwrap_or(true) {
                        minv = Some((v, i, j));
                    }
                }
            }
        }
        let Some((v, mi, mj)) = minv else {
            return Err(Error::Domain("gram matrix is degenerate".into()));
        };
        if v < 0 {
            return Err(Error::Internal("negative scale in integral lattice".into()));
        }
        let scale = v as u32;
        let modulus = if two { BigInt::from(8) } else { p.clone() };
        // prefer a diagonal pivot of minimal valuation
        let diag_pivot = active
            .iter()
            .copied()
            .find(|&i| val_p(&g[i][i], p) == Some(v));
        if let Some(i) = diag_pivot {
            let u = unit_part_mod(&g[i][i], p, v, &modulus);
            per_scale
                .entry(scale)
                .or_insert_with(|| Acc { ones: vec![], twos: vec![] })
                .ones
                .push(u);
            // symmetric clearing of row/column i against a snapshot of the
            // pivot row (later rows must see the original values)
            let others: Vec<usize> = active.iter().copied().filter(|&k| k != i).collect();
            let pivot = g[i][i].clone();
            let prow: Vec<BigRational> = g[i].clone();
            for &k in &others {
                if g[k][i].is_zero() {
                    continue;
                }
                let c = &g[k][i] / &pivot;
                for &l in &others {
                    let t = &c * &prow[l];
                    g[k][l] -= t;
                }
                g[k][i] = BigRational::zero();
                g[i][k] = BigRational::zero();
            }
            // the matching column operation is a no-op on the remaining block
            active.retain(|&k| k != i);
        } else if !two {
            // odd p: make the min valuation appear on the diagonal
            let (i, j) = (mi, mj);
            for l in 0..n {
                let t = g[j][l].clone();
                g[i][l] += t;
            }
            for k in 0..n {
                let t = g[k][j].clone();
                g[k][i] += t;
            }
            // diagonal now has valuation v at i; loop again
        } else {
            // p = 2: split off the even 2x2 block at (mi, mj)
            let (i, j) = (mi, mj);
            let b = [
                [g[i][i].clone(), g[i][j].clone()],
                [g[j][i].clone(), g[j][j].clone()],
            ];
            let det = &b[0][0] * &b[1][1] - &b[0][1] * &b[1][0];
            let dv = val_p(&det, p).expect("even block nondegenerate");
            debug_assert_eq!(dv, 2 * v);
            let du = unit_part_mod(&det, p, dv, &modulus);
            per_scale
                .entry(scale)
                .or_insert_with(|| Acc { ones: vec![], twos: vec![] })
                .twos
                .push(du);
            // clear other rows against the block using its inverse; snapshot
            // the two pivot rows first
            let others: Vec<usize> = active.iter().copied().filter(|&k| k != i && k != j).collect();
            let prow_i: Vec<BigRational> = g[i].clone();
            let prow_j: Vec<BigRational> = g[j].clone();
            for &k in &others {
                let (ri, rj) = (g[k][i].clone(), g[k][j].clone());
                if ri.is_zero() && rj.is_zero() {
                    continue;
                }
                // coefficients (ci, cj) with row_k -= ci row_i + cj row_j
                let ci = (&ri * &b[1][1] - &rj * &b[0][1]) / &det;
                let cj = (&rj * &b[0][0] - &ri * &b[1][0]) / &det;
                for &l in &others {
                    let t = &ci * &prow_i[l] + &cj * &prow_j[l];
                    g[k][l] -= t;
                }
                g[k][i] = BigRational::zero();
                g[k][j] = BigRational::zero();
                g[i][k] = BigRational::zero();
                g[j][k] = BigRational::zero();
            }
            active.retain(|&k| k != i && k != j);
        }
    }

    let mut blocks = Vec::new();
    for (scale, acc) in per_scale {
        let rank = acc.ones.len() + 2 * acc.twos.len();
        let (sign, odd, oddity) = if two {
            let mut s: i8 = 1;
            let mut t = BigInt::zero();
            for u in &acc.ones {
                let m8 = u.mod_floor(&BigInt::from(8)).to_u8().unwrap();
                if m8 == 3 || m8 == 5 {
                    s = -s;
                }
                t += u;
            }
            let mut odd4 = 0u8;
            for d in &acc.twos {
                let m8 = d.mod_floor(&BigInt::from(8)).to_u8().unwrap();
                // det 7 mod 8: U-type (sign +, oddity 0); det 3 mod 8: V-type
                if m8 == 3 {
                    s = -s;
                    odd4 = (odd4 + 4) % 8;
                } else {
                    debug_assert_eq!(m8, 7);
                }
            }
            let oddity = ((t.mod_floor(&BigInt::from(8)).to_u8().unwrap() + odd4) % 8) as u8;
            (s, !acc.ones.is_empty(), if acc.ones.is_empty() { 0 } else { oddity })
        } else {
            let mut s: i8 = 1;
            for u in &acc.ones {
                s *= legendre(u, p);
            }
            (s, false, 0)
        };
        blocks.push(JordanBlock { scale, rank, sign, odd, oddity });
    }
    Ok(LocalSymbol { p: p.clone(), blocks })
}

/// Canonicalize a 2-adic symbol by oddity fusion and sign walking so that
/// equality of canonical symbols decides 2-adic isometry.
pub fn canonicalize_2adic(sym: &LocalSymbol) -> LocalSymbol {
    assert_eq!(sym.p, BigInt::from(2));
    let mut blocks = sym.blocks.clone();
    if blocks.is_empty() {
        return sym.clone();
    }
    // compartments: maximal runs of odd blocks at consecutive scales
    let compartments = compartments_of(&blocks);
    // oddity fusion: total oddity lives on the first block of the compartment
    for comp in &compartments {
        let total: u8 = comp.iter().map(|&i| blocks[i].oddity as u32).sum::<u32>() as u8 % 8;
        for &i in comp {
            blocks[i].oddity = 0;
        }
        blocks[comp[0]].oddity = total;
    }
    // trains: maximal runs of blocks at consecutive scales
    let trains = trains_of(&blocks);
    // sign walking: push negative signs toward the front of each train,
    // adding 4 to the oddity of every compartment touching either end of
    // the walked step
    for train in &trains {
        let t = train.len();
        for i in 0..t.saturating_sub(1) {
            let here = train[t - 1 - i];
            if blocks[here].sign == -1 {
                blocks[here].sign = 1;
                let prev = train[t - 2 - i];
                blocks[prev].sign = -blocks[prev].sign;
                let compartments = compartments_of(&blocks);
                for comp in &compartments {
                    if comp.contains(&here) || comp.contains(&prev) {
                        let first = comp[0];
                        blocks[first].oddity = (blocks[first].oddity + 4) % 8;
                    }
                }
            }
        }
    }
    LocalSymbol { p: sym.p.clone(), blocks }
}

fn compartments_of(blocks: &[JordanBlock]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let adjacent = cur
            .last()
            .map(|&j| blocks[j].scale + 1 == b.scale)
            .unwrap_or(false);
        if b.odd && (cur.is_empty() || adjacent) {
            cur.push(i);
        } else {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if b.odd {
                cur.push(i);
            }
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn trains_of(blocks: &[JordanBlock]) -> Vec<Vec<usize>> {
    // a zero-rank scale between two blocks still links them into one train
    // (each adjacent scale pair only needs one nonzero member), so blocks
    // whose scales differ by at most 2 share a train
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let adjacent = cur
            .last()
            .map(|&j| blocks[j].scale + 2 >= b.scale)
            .unwrap_or(false);
        if cur.is_empty() || adjacent {
            cur.push(i);
        } else {
            out.push(std::mem::take(&mut cur));
            cur.push(i);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

impl LocalSymbol {
    /// Canonical form suitable for equality comparison.
    pub fn canonical(&self) -> LocalSymbol {
        if self.p == BigInt::from(2) {
            canonicalize_2adic(self)
        } else {
            self.clone()
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p.to_string(),
            "blocks": self.blocks.iter().map(|b| {
                if self.p == BigInt::from(2) {
                    json!({
                        "scale": b.scale,
                        "rank": b.rank,
                        "sign": b.sign,
                        "type": if b.odd { "I" } else { "II" },
                        "oddity": b.oddity,
                    })
                } else {
                    json!({"scale": b.scale, "rank": b.rank, "sign": b.sign})
                }
            }).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::zmat_from_i64;

    fn sym(rows: &[Vec<i64>], p: i64) -> LocalSymbol {
        local_symbol(&zmat_from_i64(rows), &BigInt::from(p)).unwrap()
    }

    #[test]
    fn hyperbolic_plane_at_3() {
        let s = sym(&[vec![0, 1], vec![1, 0]], 3);
        assert_eq!(s.blocks.len(), 1);
        let b = &s.blocks[0];
        assert_eq!((b.scale, b.rank), (0, 2));
        // det -1 is a nonsquare mod 3
        assert_eq!(b.sign, -1);
    }

    #[test]
    fn diag_1_3_at_3() {
        let s = sym(&[vec![1, 0], vec![0, 3]], 3);
        assert_eq!(
            s.blocks,
            vec![
                JordanBlock { scale: 0, rank: 1, sign: 1, odd: false, oddity: 0 },
                JordanBlock { scale: 1, rank: 1, sign: 1, odd: false, oddity: 0 },
            ]
        );
    }

    #[test]
    fn hyperbolic_plane_at_2_is_even_u() {
        let s = sym(&[vec![0, 1], vec![1, 0]], 2);
        let b = &s.blocks[0];
        // U: type II, det -1 = 7 mod 8, sign +1, oddity 0
        assert_eq!((b.scale, b.rank, b.sign, b.odd, b.oddity), (0, 2, 1, false, 0));
    }

    #[test]
    fn a2_at_2_is_even_v() {
        let s = sym(&[vec![2, 1], vec![1, 2]], 2);
        let b = &s.blocks[0];
        // V: det 3 mod 8, sign -1, oddity contribution folded into type II 0
        assert_eq!((b.scale, b.rank, b.sign, b.odd, b.oddity), (0, 2, -1, false, 0));
    }

    #[test]
    fn odd_diag_at_2() {
        let s = sym(&[vec![1, 0], vec![0, 5]], 2);
        let b = &s.blocks[0];
        assert_eq!((b.scale, b.rank, b.odd), (0, 2, true));
        assert_eq!(b.oddity, 6); // 1 + 5 mod 8
        assert_eq!(b.sign, -1); // 5 mod 8
    }

    #[test]
    fn canonical_symbol_is_basis_independent() {
        use crate::exact::mat::{zmat_mul, zmat_transpose};
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = 3 + (rng.gen::<u32>() % 2) as usize;
            let g: Vec<Vec<i64>> = {
                let mut m = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in 0..=i {
                        let v = (rng.gen::<i32>() % 9 - 4) as i64;
                        m[i][j] = v;
                        m[j][i] = v;
                    }
                    m[i][i] *= 2; // keep a healthy mix of even entries
                }
                m
            };
            let g = zmat_from_i64(&g);
            if crate::exact::mat::zmat_det(&g).is_zero() {
                continue;
            }
            // random unimodular transform from elementary row additions
            let mut u = crate::exact::mat::zmat_identity(n);
            for _ in 0..6 {
                let i = rng.gen::<usize>() % n;
                let mut j = rng.gen::<usize>() % n;
                if i == j {
                    j = (j + 1) % n;
                }
                let c = BigInt::from((rng.gen::<i32>() % 5 - 2) as i64);
                for k in 0..n {
                    let t = &u[j][k] * &c;
                    u[i][k] += t;
                }
            }
            let g2 = zmat_mul(&zmat_mul(&u, &g), &zmat_transpose(&u));
            for p in [2i64, 3, 5] {
                let a = local_symbol(&g, &BigInt::from(p)).unwrap().canonical();
                let b = local_symbol(&g2, &BigInt::from(p)).unwrap().canonical();
                assert_eq!(a, b, "p = {p}, gram = {g:?}, transformed = {g2:?}");
            }
        }
    }
}
