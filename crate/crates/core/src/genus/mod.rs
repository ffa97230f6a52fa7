//! Genus-level reasoning: local symbols at every relevant prime, genus
//! equality, Hasse-invariant consistency, and the shorthand genus label.

pub mod symbol;

pub use symbol::{local_symbol, JordanBlock, LocalSymbol};

use crate::error::{Error, Result};
use crate::exact::mat::{zmat_det, ZMat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Diagonal of a rational congruent diagonalization of a symmetric matrix
/// (zero determinant rejected).
pub fn rational_diagonal(gram: &ZMat) -> Result<Vec<BigRational>> {
    let n = gram.len();
    let mut g: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&first) = active.first() {
        let pivot_idx = active.iter().copied().find(|&i| !g[i][i].is_zero());
        let i = match pivot_idx {
            Some(i) => i,
            None => {
                // all diagonal zero: find g[i][j] != 0 and merge rows
                let mut found = None;
                'outer: for &i in &active {
                    for &j in &active {
                        if i != j && !g[i][j].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                let Some((i, j)) = found else {
                    return Err(Error::Domain("gram matrix is degenerate".into()));
                };
                for l in 0..n {
                    let t = g[j][l].clone();
                    g[i][l] += t;
                }
                for k in 0..n {
                    let t = g[k][j].clone();
                    g[k][i] += t;
                }
                i
            }
        };
        let _ = first;
        let pivot = g[i][i].clone();
        out.push(pivot.clone());
        let others: Vec<usize> = active.iter().copied().filter(|&k| k != i).collect();
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
        active.retain(|&k| k != i);
    }
    Ok(out)
}

/// Signature (n_plus, n_minus) by exact diagonalization.
pub fn signature(gram: &ZMat) -> Result<(usize, usize)> {
    let d = rational_diagonal(gram)?;
    let pos = d.iter().filter(|x| x.is_positive()).count();
    Ok((pos, d.len() - pos))
}

pub fn is_even(gram: &ZMat) -> bool {
    gram.iter().enumerate().all(|(i, r)| r[i].is_even())
}

fn val_int(x: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut v = 0;
    let mut u = x.clone();
    while (&u % p).is_zero() {
        u /= p;
        v += 1;
    }
    (v, u)
}

fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    let a = a.mod_floor(p);
    let e = (p - BigInt::one()) / BigInt::from(2);
    let r = a.modpow(&e, p);
    if r.is_one() {
        1
    } else if r.is_zero() {
        0
    } else {
        -1
    }
}

/// Hilbert symbol (a, b)_p for nonzero rationals, p prime or None for the
/// real place.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, p: Option<&BigInt>) -> i8 {
    assert!(!a.is_zero() && !b.is_zero());
    let Some(p) = p else {
        return if a.is_negative() && b.is_negative() { -1 } else { 1 };
    };
    // valuations and unit parts of a, b at p
    let vp = |x: &BigRational| -> (i64, BigInt) {
        let (vn, un) = val_int(x.numer(), p);
        let (vd, ud) = val_int(x.denom(), p);
        // un * ud stands in for the unit un/ud: ud ≡ ud^{-1} mod 8 for odd
        // ud, and Legendre symbols see ud and ud^{-1} identically
        (vn as i64 - vd as i64, un * ud)
    };
    let (alpha, ua) = vp(a);
    let (beta, ub) = vp(b);
    if p == &BigInt::from(2) {
        // (-1)^{e(u)e(v) + alpha w(v) + beta w(u)}, e(u) = (u-1)/2, w(u) = (u^2-1)/8
        let m8 = BigInt::from(8);
        let u = inv_adjusted(&ua, &m8);
        let v = inv_adjusted(&ub, &m8);
        let e = |x: &BigInt| ((x - 1u8).mod_floor(&m8) / 2u8).mod_floor(&BigInt::from(2));
        let w = |x: &BigInt| {
            let sq: BigInt = x * x - 1;
            (sq / BigInt::from(8)).mod_floor(&BigInt::from(2))
        };
        let exp = (e(&u) * e(&v) + BigInt::from(alpha) * w(&v) + BigInt::from(beta) * w(&u))
            .mod_floor(&BigInt::from(2));
        if exp.is_zero() {
            1
        } else {
            -1
        }
    } else {
        let mut s: i8 = 1;
        if (alpha * beta) % 2 != 0 && (p.mod_floor(&BigInt::from(4)) == BigInt::from(3)) {
            s = -s;
        }
        if beta % 2 != 0 {
            s *= legendre(&ua, p);
        }
        if alpha % 2 != 0 {
            s *= legendre(&ub, p);
        }
        s
    }
}

/// The unit numerator/denominator product reduced to a residue where the
/// denominator has been inverted.
fn inv_adjusted(u: &BigInt, modulus: &BigInt) -> BigInt {
    // u arrives as numer_unit * denom_unit; both odd here, and x ≡ x^{-1}
    // mod 8 for odd x, so the product is already the right residue mod 8
    u.mod_floor(modulus)
}

/// Hasse-Witt invariant of the rational quadratic space at p (None = real
/// place): product of Hilbert symbols over pairs of a diagonalization.
pub fn hasse_invariant(gram: &ZMat, p: Option<&BigInt>) -> Result<i8> {
    let d = rational_diagonal(gram)?;
    let mut s: i8 = 1;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            s *= hilbert_symbol(&d[i], &d[j], p);
        }
    }
    Ok(s)
}

/// All primes where local data can differ: 2 and odd divisors of det.
pub fn relevant_primes(gram: &ZMat) -> Vec<BigInt> {
    let det = zmat_det(gram).abs();
    let mut primes = vec![BigInt::from(2)];
    let mut rem = det;
    let mut p = BigInt::from(3);
    while &p * &p <= rem {
        if (&rem % &p).is_zero() {
            primes.push(p.clone());
            while (&rem % &p).is_zero() {
                rem /= &p;
            }
        }
        p += 2;
    }
    if rem > BigInt::one() && rem.is_odd() {
        primes.push(rem);
    }
    primes
}

/// Verify the product formula: the Hasse invariant over all places
/// (including the real one) multiplies to +1.
pub fn hasse_product_is_one(gram: &ZMat) -> Result<bool> {
    let d = rational_diagonal(gram)?;
    let mut primes = vec![BigInt::from(2)];
    for x in &d {
        for part in [x.numer().abs(), x.denom().clone()] {
            let mut rem = part;
            while rem.is_even() {
                rem /= BigInt::from(2);
            }
            let mut p = BigInt::from(3);
            while &p * &p <= rem {
                if (&rem % &p).is_zero() {
                    if !primes.contains(&p) {
                        primes.push(p.clone());
                    }
                    while (&rem % &p).is_zero() {
                        rem /= &p;
                    }
                }
                p += 2;
            }
            if rem > BigInt::one() && !primes.contains(&rem) {
                primes.push(rem);
            }
        }
    }
    let mut prod = hasse_invariant(gram, None)?;
    for p in &primes {
        prod *= hasse_invariant(gram, Some(p))?;
    }
    Ok(prod == 1)
}

/// Genus equality: rank, signature, and canonical local symbols at 2 and at
/// every odd prime dividing either determinant.
pub fn same_genus(g1: &ZMat, g2: &ZMat) -> Result<bool> {
    if g1.len() != g2.len() {
        return Ok(false);
    }
    if signature(g1)? != signature(g2)? {
        return Ok(false);
    }
    if zmat_det(g1) != zmat_det(g2) {
        return Ok(false);
    }
    let mut primes = relevant_primes(g1);
    for p in relevant_primes(g2) {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    for p in &primes {
        let s1 = local_symbol(g1, p)?.canonical();
        let s2 = local_symbol(g2, p)?.canonical();
        if s1 != s2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shorthand genus label like "II_(1,15) 7^-1 13^-2": parity roman numeral,
/// signature pair, then p^(sign * det-valuation) per odd prime divisor.
pub fn genus_label(gram: &ZMat) -> Result<String> {
    let (np, nm) = signature(gram)?;
    let parity = if is_even(gram) { "II" } else { "I" };
    let det = zmat_det(gram).abs();
    let mut parts = vec![format!("{parity}_({np},{nm})")];
    for p in relevant_primes(gram) {
        if p == BigInt::from(2) {
            continue;
        }
        let (v, _) = val_int(&det, &p);
        if v == 0 {
            continue;
        }
        let sym = local_symbol(gram, &p)?;
        let mut sign: i8 = 1;
        for b in &sym.blocks {
            if b.scale > 0 {
                sign *= b.sign;
            }
        }
        let signed = if sign >= 0 { v as i64 } else { -(v as i64) };
        parts.push(format!("{p}^{signed}"));
    }
    Ok(parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::zmat_from_i64;

    #[test]
    fn signature_of_hyperbolic_plane() {
        let u = zmat_from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(signature(&u).unwrap(), (1, 1));
        assert!(is_even(&u));
    }

    #[test]
    fn hilbert_symbol_basics() {
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        // (-1,-1)_2 = -1, (-1,-1)_inf = -1, (-1,-1)_p = 1 for odd p
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Some(&BigInt::from(2))), -1);
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), None), -1);
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Some(&BigInt::from(5))), 1);
        // (2,3)_3: alpha=0, beta=1 -> legendre(2|3) = -1
        assert_eq!(hilbert_symbol(&q(2), &q(3), Some(&BigInt::from(3))), -1);
        // (5,5)_5 = (5,-1)_5 = legendre(-1|5) = 1
        assert_eq!(hilbert_symbol(&q(5), &q(5), Some(&BigInt::from(5))), 1);
    }

    #[test]
    fn hasse_product_formula_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut tested = 0;
        while tested < 25 {
            let n = 2 + (rng.gen::<u32>() % 3) as usize;
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    let v = (rng.gen::<i32>() % 11 - 5) as i64;
                    m[i][j] = v;
                    m[j][i] = v;
                }
            }
            let g = zmat_from_i64(&m);
            if zmat_det(&g).is_zero() {
                continue;
            }
            assert!(hasse_product_is_one(&g).unwrap(), "gram {m:?}");
            tested += 1;
        }
    }

    #[test]
    fn same_genus_rejects_parity_mismatch() {
        let a = zmat_from_i64(&[vec![2, 0], vec![0, 2]]);
        let b = zmat_from_i64(&[vec![1, 0], vec![0, 4]]);
        assert!(!same_genus(&a, &b).unwrap());
        assert!(same_genus(&a, &a).unwrap());
    }

    #[test]
    fn genus_label_format() {
        let u = zmat_from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(genus_label(&u).unwrap(), "II_(1,1)");
        let d = zmat_from_i64(&[vec![2, 1], vec![1, 4]]);
        // det 7; the scale-1 block at 7 has rank 1
        let label = genus_label(&d).unwrap();
        assert!(label.starts_with("II_(2,0) 7^"), "{label}");
    }
}
