//! Univariate polynomial factorization: distinct/equal degree splitting
//! over finite fields, and Hensel-based factorization over the rationals.
//! Randomized splitting uses a PRNG seeded from the input so results are
//! reproducible run to run.

use super::field::{Field, FiniteField};
#[cfg(test)]
use super::field::Ring;
use super::poly::Poly;
use super::rat::Rationals;
use super::zn::Zn;
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Monic irreducible factors with multiplicities, plus the leading unit:
/// f = unit * prod q_i^{e_i}.
pub fn factor_finite<F: FiniteField>(f: &Poly<F>) -> Result<(F::Elem, Vec<(Poly<F>, usize)>)> {
    let k = f.field.clone();
    if f.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let unit = f.leading().unwrap().clone();
    let mut factors = Vec::new();
    collect_factors_finite(&f.monic(), 1, &mut factors)?;
    factors.sort_by(|a, b| cmp_poly(&k, &a.0, &b.0));
    Ok((unit, factors))
}

fn cmp_poly<F: FiniteField>(k: &F, a: &Poly<F>, b: &Poly<F>) -> std::cmp::Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        for i in (0..=a.deg().max(0) as usize).rev() {
            let o = k.index_of(&a.coeff(i)).cmp(&k.index_of(&b.coeff(i)));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn collect_factors_finite<F: FiniteField>(
    f: &Poly<F>,
    mult: usize,
    out: &mut Vec<(Poly<F>, usize)>,
) -> Result<()> {
    if f.deg() <= 0 {
        return Ok(());
    }
    let k = f.field.clone();
    let d = f.derivative();
    if d.is_zero() {
        // perfect p-th power: f = g(x^p)
        let p = k
            .characteristic()
            .ok_or_else(|| Error::Internal("char 0 poly with zero derivative".into()))?;
        let p = p.to_usize().ok_or_else(|| Error::Unsupported("characteristic too large".into()))?;
        let root = pth_root_poly(f, p)?;
        return collect_factors_finite(&root, mult * p, out);
    }
    let g = f.gcd(&d);
    let sqf = f.div_exact(&g)?;
    let mut rem = f.clone();
    for q in factor_squarefree_finite(&sqf)? {
        let e = f.valuation_at(&q).unwrap();
        rem = rem.div_exact(&q.pow(e as u64))?;
        out.push((q, mult * e));
    }
    // remaining part carries the factors with multiplicity divisible by p
    collect_factors_finite(&rem.monic(), mult, out)
}

fn pth_root_poly<F: FiniteField>(f: &Poly<F>, p: usize) -> Result<Poly<F>> {
    let k = f.field.clone();
    let q = k.order();
    let exp = &q / BigUint::from(p); // c^(q/p) is the p-th root in F_q
    let mut coeffs = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            coeffs.push(pow_elem(&k, c, &exp));
        } else if !k.is_zero(c) {
            return Err(Error::Internal("not a p-th power".into()));
        }
    }
    Ok(Poly::new(k, coeffs))
}

fn pow_elem<F: Field>(k: &F, a: &F::Elem, e: &BigUint) -> F::Elem {
    let mut acc = k.one();
    let mut base = a.clone();
    let mut e = e.clone();
    while !e.is_zero() {
        if e.bit(0) {
            acc = k.mul(&acc, &base);
        }
        e >>= 1;
        if !e.is_zero() {
            base = k.mul(&base, &base);
        }
    }
    acc
}

/// Factor a squarefree monic polynomial into monic irreducibles.
fn factor_squarefree_finite<F: FiniteField>(f: &Poly<F>) -> Result<Vec<Poly<F>>> {
    let k = f.field.clone();
    let q = k.order();
    let mut out = Vec::new();
    let x = Poly::x(k.clone());
    let mut h = x.clone();
    let mut rem = f.clone();
    let mut d = 1usize;
    while rem.deg() >= 2 * d as i64 {
        h = h.pow_mod(&q, &rem)?;
        let g = h.sub(&x).gcd(&rem);
        if g.deg() > 0 {
            split_equal_degree(&g, d, &mut out)?;
            rem = rem.div_exact(&g)?.monic();
            h = h.rem(&rem)?;
        }
        d += 1;
    }
    if rem.deg() > 0 {
        out.push(rem.monic());
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of degree-d irreducibles.
fn split_equal_degree<F: FiniteField>(
    f: &Poly<F>,
    d: usize,
    out: &mut Vec<Poly<F>>,
) -> Result<()> {
    let k = f.field.clone();
    if f.deg() as usize == d {
        out.push(f.monic());
        return Ok(());
    }
    let q = k.order();
    // (q^d - 1) / 2; the field order is odd throughout this pipeline
    let qd = pow_biguint(&q, d as u32);
    let exp = (&qd - BigUint::one()) / BigUint::from(2u32);
    let mut rng = seeded_rng_finite(f);
    loop {
        let a = random_poly(&k, f.deg() as usize, &mut rng);
        if a.deg() < 1 {
            continue;
        }
        let b = a.pow_mod(&exp, f)?;
        let g = b.sub(&Poly::one(k.clone())).gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            split_equal_degree(&g, d, out)?;
            split_equal_degree(&f.div_exact(&g)?.monic(), d, out)?;
            return Ok(());
        }
    }
}

fn pow_biguint(b: &BigUint, e: u32) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn seeded_rng_finite<F: FiniteField>(f: &Poly<F>) -> ChaCha8Rng {
    let k = &f.field;
    let mut seed = 0x9e3779b97f4a7c15u64;
    for c in f.coeffs() {
        let idx = k.index_of(c);
        let low = (&idx % BigUint::from(u64::MAX)).to_u64().unwrap_or(0);
        seed = seed.rotate_left(13) ^ low.wrapping_mul(0xbf58476d1ce4e5b9);
    }
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_poly<F: FiniteField>(k: &F, deg_below: usize, rng: &mut ChaCha8Rng) -> Poly<F> {
    let q = k.order();
    let coeffs = (0..deg_below)
        .map(|_| {
            let r: u64 = rng.gen();
            k.elem_from_index(&(BigUint::from(r) % &q))
        })
        .collect();
    Poly::new(k.clone(), coeffs)
}

pub fn is_irreducible_finite<F: FiniteField>(f: &Poly<F>) -> Result<bool> {
    if f.deg() < 1 {
        return Ok(false);
    }
    let (_, factors) = factor_finite(f)?;
    Ok(factors.len() == 1 && factors[0].1 == 1)
}

/// Roots of f in the base field, without multiplicity.
pub fn roots_finite<F: FiniteField>(f: &Poly<F>) -> Result<Vec<F::Elem>> {
    let (_, factors) = factor_finite(f)?;
    let k = f.field.clone();
    Ok(factors
        .into_iter()
        .filter(|(q, _)| q.deg() == 1)
        .map(|(q, _)| k.neg(&q.coeff(0)))
        .collect())
}

// ---------------------------------------------------------------------------
// Rational factorization via integer Hensel lifting.

/// f = unit * prod q_i^{e_i} with q_i monic irreducible over Q.
pub fn factor_rational(
    f: &Poly<Rationals>,
) -> Result<(BigRational, Vec<(Poly<Rationals>, usize)>)> {
    if f.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let unit = f.leading().unwrap().clone();
    let mut factors: Vec<(Poly<Rationals>, usize)> = Vec::new();
    let mut rem = f.monic();
    while rem.deg() > 0 {
        let g = rem.gcd(&rem.derivative());
        let sqf = rem.div_exact(&g)?;
        for q in factor_squarefree_rational(&sqf)? {
            let e = rem.valuation_at(&q).unwrap();
            factors.push((q.clone(), e));
            rem = rem.div_exact(&q.pow(e as u64))?;
        }
    }
    factors.sort_by(|a, b| {
        a.0.deg().cmp(&b.0.deg()).then_with(|| format!("{:?}", a.0.coeffs()).cmp(&format!("{:?}", b.0.coeffs())))
    });
    Ok((unit, factors))
}

/// Primitive integer coefficients and content of a monic-after-scaling poly.
fn to_primitive_integer(f: &Poly<Rationals>) -> (Vec<BigInt>, BigRational) {
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    (prim, BigRational::new(content, den))
}

/// Factor a squarefree monic rational polynomial into monic irreducibles.
fn factor_squarefree_rational(f: &Poly<Rationals>) -> Result<Vec<Poly<Rationals>>> {
    let q = Rationals;
    if f.deg() <= 1 {
        return Ok(if f.deg() == 1 { vec![f.monic()] } else { vec![] });
    }
    // scale to an integer polynomial; monicize by y = lc * x
    let (prim, _) = to_primitive_integer(f);
    let lc = prim.last().unwrap().clone();
    let n = prim.len() - 1;
    // g(y) = lc^(n-1) f(y / lc) is monic with integer coefficients
    let g: Vec<BigInt> = prim
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == n {
                return BigInt::one();
            }
            let mut v = c.clone();
            for _ in 0..(n - 1 - i) {
                v *= &lc;
            }
            v
        })
        .collect();
    let monic_factors = factor_monic_integer(&g)?;
    // map back: factor of f is primitive part of h(lc * x)
    let mut out = Vec::new();
    for h in monic_factors {
        let d = h.len() - 1;
        let scaled: Vec<BigRational> = h
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut v = c.clone();
                for _ in 0..i {
                    v *= &lc;
                }
                BigRational::from_integer(v)
            })
            .collect();
        let _ = d;
        out.push(Poly::new(q.clone(), scaled).monic());
    }
    Ok(out)
}

/// Zassenhaus on a monic squarefree integer polynomial; returns monic
/// integer factors (ascending coefficient vectors).
fn factor_monic_integer(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    use super::fp::Fp;
    let n = f.len() - 1;
    if n == 1 {
        return Ok(vec![f.to_vec()]);
    }
    // pick a prime where f stays squarefree
    let mut chosen = None;
    for &p in &[
        1031u64, 1033, 1039, 1049, 1051, 1061, 1063, 1069, 1087, 1091, 1093, 1097, 1103, 1109,
        1117, 1123, 1129, 1151,
    ] {
        let k = Fp::new(p);
        let fp = Poly::new(
            k.clone(),
            f.iter().map(|c| k.reduce_bigint(c)).collect(),
        );
        if fp.deg() == n as i64 && fp.gcd(&fp.derivative()).deg() == 0 {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.ok_or_else(|| Error::Internal("no good prime for factorization".into()))?;
    let k = Fp::new(p);
    let fp = Poly::new(k.clone(), f.iter().map(|c| k.reduce_bigint(c)).collect());
    let (_, modp) = factor_finite(&fp)?;
    let modp: Vec<Poly<Fp>> = modp.into_iter().map(|(q, _)| q).collect();
    if modp.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }
    // lift precision above twice the factor coefficient bound
    let bound = mignotte_bound(f);
    let mut kexp = 1u32;
    let mut pk = BigInt::from(p);
    let two_bound = &bound * 2;
    while pk <= two_bound {
        pk = &pk * &pk;
        kexp *= 2;
    }
    let zn = Zn::new(pk.clone());
    let fz = Poly::new(zn.clone(), f.iter().map(|c| zn.reduce(c)).collect());
    let lifted = hensel_lift_tree(
        &fz,
        &modp
            .iter()
            .map(|q| Poly::new(zn.clone(), q.coeffs().iter().map(|&c| BigInt::from(c)).collect()))
            .collect::<Vec<_>>(),
        BigInt::from(p),
        kexp,
    )?;
    // subset recombination
    let mut avail: Vec<Poly<Zn>> = lifted;
    let mut rem: Vec<BigInt> = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= avail.len() {
        let idxs: Vec<usize> = (0..avail.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod = Poly::one(zn.clone());
            for &i in &combo {
                prod = prod.mul(&avail[i]);
            }
            let cand: Vec<BigInt> = prod.coeffs().iter().map(|c| zn.symmetric(c)).collect();
            if let Some(quot) = divide_integer_poly(&rem, &cand) {
                out.push(pad_to_full(&cand, prod.deg() as usize));
                rem = quot;
                let mut keep = Vec::new();
                for (i, a) in avail.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(a);
                    }
                }
                avail = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rem.len() > 1 {
        out.push(rem);
    }
    Ok(out)
}

fn pad_to_full(c: &[BigInt], deg: usize) -> Vec<BigInt> {
    let mut v = c.to_vec();
    v.resize(deg + 1, BigInt::zero());
    if v[deg].is_zero() {
        v[deg] = BigInt::one(); // symmetric rep of a monic lead is 1 unless truncated
    }
    v
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact division of integer polynomials (monic divisor); None if not exact.
fn divide_integer_poly(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    if d.is_empty() || f.len() < d.len() {
        return None;
    }
    let dd = d.len() - 1;
    if !d[dd].is_one() {
        return None;
    }
    let mut rem = f.to_vec();
    let mut quo = vec![BigInt::zero(); f.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if !c.is_zero() {
            for j in 0..=dd {
                let t = &c * &d[j];
                rem[i - dd + j] -= t;
            }
        }
        quo[i - dd] = c;
    }
    if rem.iter().take(dd).all(|x| x.is_zero()) {
        Some(quo)
    } else {
        None
    }
}

/// Coefficient bound for monic divisors: (n+1)^(1/2) 2^n max|f_i|, rounded up.
fn mignotte_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let maxc = f.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::one);
    let sqrt_part = BigInt::from(((n as f64 + 1.0).sqrt().ceil()) as i64 + 1);
    sqrt_part * (BigInt::one() << n) * maxc
}

/// Quadratic Hensel lifting of a factor list along a balanced tree.
fn hensel_lift_tree(
    f: &Poly<Zn>,
    factors_mod_p: &[Poly<Zn>],
    p: BigInt,
    kexp: u32,
) -> Result<Vec<Poly<Zn>>> {
    if factors_mod_p.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let mid = factors_mod_p.len() / 2;
    let zn = f.field.clone();
    let zp = Zn::new(p.clone());
    let to_zp = |q: &Poly<Zn>| Poly::new(zp.clone(), q.coeffs().iter().map(|c| zp.reduce(c)).collect());
    let mut g0 = Poly::one(zp.clone());
    for q in &factors_mod_p[..mid] {
        g0 = g0.mul(&to_zp(q));
    }
    let mut h0 = Poly::one(zp.clone());
    for q in &factors_mod_p[mid..] {
        h0 = h0.mul(&to_zp(q));
    }
    let (g, h) = hensel_lift_pair(f, &g0, &h0, &p, kexp)?;
    let left: Vec<Poly<Zn>> = factors_mod_p[..mid].to_vec();
    let right: Vec<Poly<Zn>> = factors_mod_p[mid..].to_vec();
    let mut out = hensel_lift_tree(&g, &left, p.clone(), kexp)?;
    out.extend(hensel_lift_tree(&h, &right, p, kexp)?);
    let _ = zn;
    Ok(out)
}

/// Lift f = g h from mod p to mod p^(2^j) >= the modulus of f's ring.
fn hensel_lift_pair(
    f: &Poly<Zn>,
    g0: &Poly<Zn>,
    h0: &Poly<Zn>,
    p: &BigInt,
    kexp: u32,
) -> Result<(Poly<Zn>, Poly<Zn>)> {
    // Bezout mod p
    let zp = g0.field.clone();
    let (one, s0, t0) = g0.extended_gcd(h0);
    if one.deg() != 0 {
        return Err(Error::Internal("hensel factors not coprime".into()));
    }
    let target = f.field.modulus.clone();
    let mut m = p.clone();
    let mut g = lift_ring(g0, &zp, &target);
    let mut h = lift_ring(h0, &zp, &target);
    let mut s = lift_ring(&s0, &zp, &target);
    let mut t = lift_ring(&t0, &zp, &target);
    let zn = f.field.clone();
    let mut steps = 0u32;
    while &m < &target && steps < kexp + 2 {
        // e = f - g h; q,r = (s e) / h; g += t e + q g; h += r
        let e = f.sub(&g.mul(&h));
        let (q, r) = s.mul(&e).divrem(&h)?;
        g = g.add(&t.mul(&e)).add(&q.mul(&g));
        h = h.add(&r);
        // refresh Bezout: b = s g + t h - 1; c,d = (s b)/h; s -= d; t -= t b + c g
        let b = s.mul(&g).add(&t.mul(&h)).sub(&Poly::one(zn.clone()));
        let (c, d) = s.mul(&b).divrem(&h)?;
        s = s.sub(&d);
        t = t.sub(&t.mul(&b)).sub(&c.mul(&g));
        m = &m * &m;
        steps += 1;
    }
    Ok((g, h))
}

fn lift_ring(q: &Poly<Zn>, _from: &Zn, target: &BigInt) -> Poly<Zn> {
    let zn = Zn::new(target.clone());
    Poly::new(zn.clone(), q.coeffs().iter().map(|c| zn.reduce(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fp::Fp;

    fn qpoly(c: &[i64]) -> Poly<Rationals> {
        Poly::from_i64(Rationals, c)
    }

    #[test]
    fn finite_split_of_difference_of_squares() {
        let k = Fp::new(29);
        let f = Poly::from_i64(k.clone(), &[-1, 0, 1]); // t^2 - 1
        let (unit, factors) = factor_finite(&f).unwrap();
        assert_eq!(unit, 1);
        let fs: Vec<_> = factors.iter().map(|(q, e)| (q.coeffs().to_vec(), *e)).collect();
        assert_eq!(fs, vec![(vec![1, 1], 1), (vec![28, 1], 1)]);
    }

    #[test]
    fn finite_sum_of_squares_splits_mod_29() {
        let k = Fp::new(29);
        let f = Poly::from_i64(k.clone(), &[1, 0, 1]); // x^2 + 1 = (x-12)(x+12)
        let (_, factors) = factor_finite(&f).unwrap();
        let roots: Vec<u64> = factors.iter().map(|(q, _)| k.neg(&q.coeff(0))).collect();
        let mut roots = roots;
        roots.sort();
        assert_eq!(roots, vec![12, 17]);
    }

    #[test]
    fn finite_high_multiplicity() {
        let k = Fp::new(5);
        // (x+1)^5 (x+2)^2: derivative vanishing branch exercised
        let f = Poly::from_i64(k.clone(), &[1, 1]).pow(5).mul(&Poly::from_i64(k.clone(), &[2, 1]).pow(2));
        let (_, factors) = factor_finite(&f).unwrap();
        let mut fs: Vec<_> = factors.iter().map(|(q, e)| (q.coeffs().to_vec(), *e)).collect();
        fs.sort();
        assert_eq!(fs, vec![(vec![1, 1], 5), (vec![2, 1], 2)]);
    }

    #[test]
    fn rational_cyclotomic_product() {
        // x^4 - 1 = (x-1)(x+1)(x^2+1) over Q
        let f = qpoly(&[-1, 0, 0, 0, 1]);
        let (_, factors) = factor_rational(&f).unwrap();
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|(_, e)| *e == 1));
        let degs: Vec<i64> = factors.iter().map(|(q, _)| q.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn rational_irreducible_stays_whole() {
        // Salem-type degree 10 polynomial; irreducible over Q
        let f = qpoly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let (_, factors) = factor_rational(&f).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.deg(), 10);
    }

    #[test]
    fn rational_nonmonic_with_multiplicity() {
        // 4(2x+1)^2 (x-3)
        let g = qpoly(&[1, 2]);
        let f = g.mul(&g).mul(&qpoly(&[-3, 1])).scale(&BigRational::from_integer(BigInt::from(4)));
        let (unit, factors) = factor_rational(&f).unwrap();
        let prod = factors
            .iter()
            .fold(Poly::one(Rationals), |acc, (q, e)| acc.mul(&q.pow(*e as u64)))
            .scale(&unit);
        assert_eq!(prod, f);
        assert_eq!(factors.iter().map(|(_, e)| *e).max(), Some(2));
    }
}
