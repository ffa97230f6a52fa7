//! p-adic lifting and recognition: multivariate Newton iteration on a
//! precision ladder of powers of two, LLL-based recognition of residues
//! as roots of integer polynomials, and recognition inside a fixed
//! number field with a denominator slot.

use crate::error::{Error, Result};
use crate::exact::lll::lll_reduce_rows;
use crate::exact::mat::{solve_mod_prime_power, ZMat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A vector of residues modulo p^k, one per unknown.
#[derive(Clone, Debug, PartialEq)]
pub struct PadicVector {
    pub p: BigInt,
    pub k: u32,
    pub entries: Vec<BigInt>,
    pub labels: Vec<String>,
}

impl PadicVector {
    pub fn new(p: BigInt, k: u32, entries: Vec<BigInt>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != entries.len() {
            return Err(Error::Domain("one label per entry required".into()));
        }
        let m = p.pow(k);
        let entries = entries.into_iter().map(|e| e.mod_floor(&m)).collect();
        Ok(PadicVector { p, k, entries, labels })
    }

    pub fn modulus(&self) -> BigInt {
        self.p.pow(self.k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p.to_string(),
            "k": self.k,
            "labels": self.labels,
            "entries": self.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field {k}")));
        let p: BigInt = get("p")?
            .as_str()
            .ok_or_else(|| Error::Parse("p must be a decimal string".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad integer for p".into()))?;
        let k = get("k")?.as_u64().ok_or_else(|| Error::Parse("k must be an integer".into()))? as u32;
        let labels: Vec<String> = get("labels")?
            .as_array()
            .ok_or_else(|| Error::Parse("labels must be an array".into()))?
            .iter()
            .map(|l| l.as_str().map(str::to_owned).ok_or_else(|| Error::Parse("bad label".into())))
            .collect::<Result<_>>()?;
        let entries: Vec<BigInt> = get("entries")?
            .as_array()
            .ok_or_else(|| Error::Parse("entries must be an array".into()))?
            .iter()
            .map(|e| {
                e.as_str()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse("entries must be decimal strings".into()))
            })
            .collect::<Result<_>>()?;
        PadicVector::new(p, k, entries, labels)
    }
}

/// A square polynomial system g(z) = 0 with its Jacobian, both evaluated
/// modulo a supplied modulus.
pub struct NewtonSystem {
    pub unknowns: usize,
    pub residual: Box<dyn Fn(&[BigInt], &BigInt) -> Vec<BigInt> + Send + Sync>,
    pub jacobian: Box<dyn Fn(&[BigInt], &BigInt) -> ZMat + Send + Sync>,
}

fn min_valuation(v: &[BigInt], p: &BigInt, cap: u32) -> u32 {
    let mut best = cap;
    for x in v {
        if x.is_zero() {
            continue;
        }
        let mut y = x.clone();
        let mut val = 0;
        while val < best && (&y % p).is_zero() {
            y /= p;
            val += 1;
        }
        best = best.min(val);
        if best == 0 {
            break;
        }
    }
    best
}

/// The 12-unknown system for sections of y^2 = x^3 + a x + a t^7 + c with
/// x, y monic of degrees 4 and 6; unknowns (x0..x3, y0..y5, a, c),
/// equations the coefficients of t^0..t^11.
pub fn family_section_system() -> NewtonSystem {
    let split = |z: &[BigInt]| -> (Vec<BigInt>, Vec<BigInt>, BigInt, BigInt) {
        let mut x = z[0..4].to_vec();
        x.push(BigInt::one());
        let mut y = z[4..10].to_vec();
        y.push(BigInt::one());
        (x, y, z[10].clone(), z[11].clone())
    };
    let residual = move |z: &[BigInt], m: &BigInt| -> Vec<BigInt> {
        let (x, y, a, c) = split(z);
        let mut g = vec![BigInt::zero(); 13];
        for i in 0..7 {
            for j in 0..7 {
                g[i + j] = (&g[i + j] + &y[i] * &y[j]).mod_floor(m);
            }
        }
        let mut x2 = vec![BigInt::zero(); 9];
        for i in 0..5 {
            for j in 0..5 {
                x2[i + j] = (&x2[i + j] + &x[i] * &x[j]).mod_floor(m);
            }
        }
        for i in 0..9 {
            for j in 0..5 {
                g[i + j] = (&g[i + j] - &x2[i] * &x[j]).mod_floor(m);
            }
        }
        for i in 0..5 {
            g[i] = (&g[i] - &a * &x[i]).mod_floor(m);
        }
        g[7] = (&g[7] - &a).mod_floor(m);
        g[0] = (&g[0] - &c).mod_floor(m);
        debug_assert!(g[12].is_zero(), "degree-12 terms must cancel by monicity");
        g.truncate(12);
        g
    };
    let jacobian = move |z: &[BigInt], m: &BigInt| -> ZMat {
        let (x, y, a, _) = split(z);
        // s = 3 x^2 + a
        let mut s = vec![BigInt::zero(); 9];
        for i in 0..5 {
            for j in 0..5 {
                s[i + j] = (&s[i + j] + BigInt::from(3) * &x[i] * &x[j]).mod_floor(m);
            }
        }
        s[0] = (&s[0] + &a).mod_floor(m);
        let mut jac = vec![vec![BigInt::zero(); 12]; 12];
        for (d, row) in jac.iter_mut().enumerate() {
            for j in 0..4 {
                if d >= j && d - j < 9 {
                    row[j] = (-&s[d - j]).mod_floor(m);
                }
            }
            for j in 0..6 {
                if d >= j && d - j < 7 {
                    row[4 + j] = (BigInt::from(2) * &y[d - j]).mod_floor(m);
                }
            }
            let mut da = if d < 5 { -&x[d] } else { BigInt::zero() };
            if d == 7 {
                da -= 1;
            }
            row[10] = da.mod_floor(m);
            if d == 0 {
                row[11] = (-BigInt::one()).mod_floor(m);
            }
        }
        jac
    };
    NewtonSystem { unknowns: 12, residual: Box::new(residual), jacobian: Box::new(jacobian) }
}

/// The seed for the characteristic-29 section with x(t) = t^4 + 7t^3 +
/// 7t^2 + 27t + 16 on y^2 = x^3 + 19x + 19t^7 + 15.
pub fn family_seed_29() -> PadicVector {
    let labels = ["x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3", "y4", "y5", "a", "c"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let entries = [16, 27, 7, 7, 23, 20, 15, 25, 18, 25, 19, 15]
        .iter()
        .map(|&v| BigInt::from(v))
        .collect();
    PadicVector::new(BigInt::from(29), 1, entries, labels).unwrap()
}

/// Newton iteration with precision doubling: from g(seed) = 0 mod p^k to
/// g(z) = 0 mod p^target_k, target_k = 2^m k. The residual valuation must
/// at least double each step.
pub fn newton_lift(sys: &NewtonSystem, seed: &PadicVector, target_k: u32) -> Result<PadicVector> {
    let mut k = seed.k;
    if target_k < k || (target_k % k != 0) || !(target_k / k).is_power_of_two() {
        return Err(Error::Domain("target precision must be a power of two times the seed precision".into()));
    }
    let p = &seed.p;
    if min_valuation(&(sys.residual)(&seed.entries, &p.pow(k)), p, k) < k {
        return Err(Error::Domain("seed does not solve the system at its own precision".into()));
    }
    let jac1 = (sys.jacobian)(&seed.entries, &p.pow(seed.k.max(1)));
    if solve_mod_prime_power(&jac1, &vec![BigInt::zero(); sys.unknowns], p, 1).is_err() {
        return Err(Error::Singular("Jacobian is singular modulo p at the seed".into()));
    }
    let mut z = seed.entries.clone();
    while k < target_k {
        let k2 = (2 * k).min(target_k);
        let m2 = p.pow(k2);
        let r = (sys.residual)(&z, &m2);
        let jac = (sys.jacobian)(&z, &m2);
        let neg_r: Vec<BigInt> = r.iter().map(|x| (-x).mod_floor(&m2)).collect();
        let delta = solve_mod_prime_power(&jac, &neg_r, p, k2)
            .map_err(|e| Error::Singular(format!("Newton linear system: {e}")))?;
        for (zi, di) in z.iter_mut().zip(&delta) {
            *zi = (&*zi + di).mod_floor(&m2);
        }
        let v = min_valuation(&(sys.residual)(&z, &m2), p, k2);
        if v < k2 {
            return Err(Error::Internal(format!(
                "residual valuation stuck at {v} < {k2}; iteration diverged"
            )));
        }
        k = k2;
    }
    PadicVector::new(p.clone(), target_k, z, seed.labels.clone())
}

fn bigint_sqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

/// Integer minimal-polynomial recognition: find a primitive integer
/// polynomial m of degree <= d with m(value) = 0 mod p^k, via LLL on the
/// lattice spanned by (e_i | value^i) and (0 | p^k). Candidates whose
/// norm is not well below p^(k/2) (16-bit margin) are rejected rather
/// than guessed.
pub fn recognize_algebraic(
    value: &BigInt,
    p: &BigInt,
    k: u32,
    d: usize,
    height_budget: &BigInt,
) -> Result<Option<Vec<BigInt>>> {
    let pk = p.pow(k);
    let value = value.mod_floor(&pk);
    let n = d + 2;
    // basis rows: (e_i | C v^i) for i <= d, then (0 | C p^k). The scale C
    // makes any nonzero residue, however small, dominate the row norm, so
    // the short vectors LLL returns are exact relations.
    let scale = pk.clone();
    let mut basis: ZMat = vec![vec![BigInt::zero(); n]; n];
    let mut pow = BigInt::one();
    for i in 0..=d {
        basis[i][i] = BigInt::one();
        basis[i][d + 1] = &pow * &scale;
        pow = (&pow * &value).mod_floor(&pk);
    }
    basis[d + 1][d + 1] = &pk * &scale;
    let reduced = lll_reduce_rows(&basis);
    let bound = &bigint_sqrt(&pk) >> 16;
    for vec in &reduced {
        let coeffs = &vec[0..=d];
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let norm: BigInt = vec.iter().map(|x| x * x).sum();
        if bigint_sqrt(&norm) >= bound {
            continue;
        }
        if coeffs.iter().any(|c| c.abs() > *height_budget) {
            continue;
        }
        // exact check: sum c_i v^i = 0 mod p^k
        let mut acc = BigInt::zero();
        let mut pw = BigInt::one();
        for c in coeffs {
            acc = (acc + c * &pw).mod_floor(&pk);
            pw = (&pw * &value).mod_floor(&pk);
        }
        if !acc.is_zero() {
            continue;
        }
        let mut out = coeffs.to_vec();
        while out.len() > 1 && out.last().unwrap().is_zero() {
            out.pop();
        }
        // a power of x divides out whenever the value is a p-adic unit
        if !(&value % p).is_zero() {
            while out.len() > 1 && out[0].is_zero() {
                out.remove(0);
            }
        }
        let g = out.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_one() && !g.is_zero() {
            for c in out.iter_mut() {
                *c /= &g;
            }
        }
        if out.last().unwrap().is_negative() {
            for c in out.iter_mut() {
                *c = -&*c;
            }
        }
        return Ok(Some(out));
    }
    Ok(None)
}

/// Recognize a residue as an element of the number field Q[w]/(m(w)):
/// rationals q_0..q_{deg m - 1} with value = sum q_i w0^i mod p^k, found
/// by LLL with a denominator slot.
pub fn recognize_in_field(
    value: &BigInt,
    modulus: &[BigInt],
    w0: &BigInt,
    p: &BigInt,
    k: u32,
) -> Result<Option<Vec<BigRational>>> {
    let pk = p.pow(k);
    let deg = modulus.len() - 1;
    if deg < 1 {
        return Err(Error::Domain("field modulus must be nonconstant".into()));
    }
    // check m(w0) = 0 mod p^k
    let mut acc = BigInt::zero();
    let mut pw = BigInt::one();
    for c in modulus {
        acc = (acc + c * &pw).mod_floor(&pk);
        pw = (&pw * w0).mod_floor(&pk);
    }
    if !acc.is_zero() {
        return Err(Error::Domain("w0 is not a root of the modulus at this precision".into()));
    }
    // rows: (e_i | C w0^i) for i < deg, (e_deg | -C value), (0 | C p^k);
    // the scale C forces short vectors to be exact relations
    let n = deg + 2;
    let scale = pk.clone();
    let mut basis: ZMat = vec![vec![BigInt::zero(); n]; n];
    let mut pow = BigInt::one();
    for i in 0..deg {
        basis[i][i] = BigInt::one();
        basis[i][deg + 1] = &pow * &scale;
        pow = (&pow * w0).mod_floor(&pk);
    }
    basis[deg][deg] = BigInt::one();
    basis[deg][deg + 1] = (-value).mod_floor(&pk) * &scale;
    basis[deg + 1][deg + 1] = &pk * &scale;
    let reduced = lll_reduce_rows(&basis);
    let bound = &bigint_sqrt(&pk) >> 16;
    for vec in &reduced {
        let den = vec[deg].clone();
        if den.is_zero() {
            continue;
        }
        let norm: BigInt = vec.iter().map(|x| x * x).sum();
        if bigint_sqrt(&norm) >= bound {
            continue;
        }
        // exact check: sum c_i w0^i = den * value mod p^k
        let mut acc = BigInt::zero();
        let mut pw = BigInt::one();
        for c in &vec[0..deg] {
            acc = (acc + c * &pw).mod_floor(&pk);
            pw = (&pw * w0).mod_floor(&pk);
        }
        if (acc - &den * value).mod_floor(&pk) != BigInt::zero() {
            continue;
        }
        let out = vec[0..deg].iter().map(|c| BigRational::new(c.clone(), den.clone())).collect();
        return Ok(Some(out));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_sqrt2() -> NewtonSystem {
        NewtonSystem {
            unknowns: 1,
            residual: Box::new(|z, m| vec![(&z[0] * &z[0] - BigInt::from(2)).mod_floor(m)]),
            jacobian: Box::new(|z, m| vec![vec![(BigInt::from(2) * &z[0]).mod_floor(m)]]),
        }
    }

    #[test]
    fn toy_square_root_lifts() {
        let seed =
            PadicVector::new(BigInt::from(7), 1, vec![BigInt::from(3)], vec!["z".into()]).unwrap();
        let out = newton_lift(&toy_sqrt2(), &seed, 16).unwrap();
        let m = BigInt::from(7).pow(16);
        assert_eq!((&out.entries[0] * &out.entries[0]).mod_floor(&m), BigInt::from(2));
    }

    #[test]
    fn exact_seed_is_unchanged() {
        // z - 3 = 0 has the exact integer solution 3
        let sys = NewtonSystem {
            unknowns: 1,
            residual: Box::new(|z, m| vec![(&z[0] - BigInt::from(3)).mod_floor(m)]),
            jacobian: Box::new(|_, m| vec![vec![BigInt::one().mod_floor(m)]]),
        };
        let seed =
            PadicVector::new(BigInt::from(7), 1, vec![BigInt::from(3)], vec!["z".into()]).unwrap();
        let out = newton_lift(&sys, &seed, 8).unwrap();
        assert_eq!(out.entries[0], BigInt::from(3));
    }

    #[test]
    fn bad_seed_rejected() {
        let seed =
            PadicVector::new(BigInt::from(7), 1, vec![BigInt::from(2)], vec!["z".into()]).unwrap();
        assert!(newton_lift(&toy_sqrt2(), &seed, 4).is_err());
    }

    #[test]
    fn family_system_lifts_to_29_pow_16() {
        let sys = family_section_system();
        let seed = family_seed_29();
        assert_eq!(min_valuation(&(sys.residual)(&seed.entries, &BigInt::from(29)), &seed.p, 1), 1);
        let out = newton_lift(&sys, &seed, 16).unwrap();
        let m = BigInt::from(29).pow(16);
        let r = (sys.residual)(&out.entries, &m);
        assert!(r.iter().all(|x| x.is_zero()));
        // reduction mod 29 recovers the seed
        for (a, b) in out.entries.iter().zip(&seed.entries) {
            assert_eq!(a.mod_floor(&BigInt::from(29)), *b);
        }
    }

    #[test]
    fn recognizes_sqrt_two() {
        let seed =
            PadicVector::new(BigInt::from(7), 1, vec![BigInt::from(3)], vec!["z".into()]).unwrap();
        let out = newton_lift(&toy_sqrt2(), &seed, 64).unwrap();
        let m = recognize_algebraic(&out.entries[0], &BigInt::from(7), 64, 2, &BigInt::from(1000))
            .unwrap()
            .unwrap();
        assert_eq!(m, vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn recognizes_rational_as_linear() {
        let m = recognize_algebraic(&BigInt::from(5), &BigInt::from(29), 100, 3, &BigInt::from(100))
            .unwrap()
            .unwrap();
        assert_eq!(m, vec![BigInt::from(-5), BigInt::from(1)]);
    }

    #[test]
    fn field_recognition_of_generator() {
        // w0 = sqrt of 2 mod 7^64 against modulus x^2 - 2
        let seed =
            PadicVector::new(BigInt::from(7), 1, vec![BigInt::from(3)], vec!["z".into()]).unwrap();
        let w0 = newton_lift(&toy_sqrt2(), &seed, 64).unwrap().entries[0].clone();
        let modulus = vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)];
        let q = recognize_in_field(&w0, &modulus, &w0, &BigInt::from(7), 64).unwrap().unwrap();
        assert_eq!(q, vec![BigRational::zero(), BigRational::one()]);
        // and (1 + w0)/2
        let pk = BigInt::from(7).pow(64);
        let inv2 = crate::exact::mat::mod_inverse(&BigInt::from(2), &pk).unwrap();
        let v = ((BigInt::one() + &w0) * inv2).mod_floor(&pk);
        let q = recognize_in_field(&v, &modulus, &w0, &BigInt::from(7), 64).unwrap().unwrap();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(q, vec![half.clone(), half]);
    }
}
