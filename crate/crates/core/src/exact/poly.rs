//! Dense univariate polynomials over a field context.
//!
//! Coefficients are stored by ascending degree with trailing zeros removed;
//! the zero polynomial has an empty coefficient vector. Degrees in this
//! pipeline stay small (at most a few dozen), so a dense representation is
//! the right choice.

use super::field::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F: Field> {
    pub field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while let Some(c) = coeffs.last() {
            if field.is_zero(c) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        Poly { field, coeffs: vec![c] }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut v = vec![field.zero(); k];
        v.push(c);
        Poly::new(field, v)
    }

    /// The variable `x`.
    pub fn x(field: F) -> Self {
        let (z, o) = (field.zero(), field.one());
        Poly::new(field, vec![z, o])
    }

    pub fn from_i64(field: F, coeffs: &[i64]) -> Self {
        let v = coeffs.iter().map(|&n| field.from_i64(n)).collect();
        Poly::new(field, v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| self.field.is_one(c)).unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.field.add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(self.field.clone(), v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.field.sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(self.field.clone(), v)
    }

    pub fn neg(&self) -> Self {
        let v = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly { field: self.field.clone(), coeffs: v }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut v = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = f.mul(a, b);
                v[i + j] = f.add(&v[i + j], &t);
            }
        }
        Poly::new(self.field.clone(), v)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let v = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(self.field.clone(), v)
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.field.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { field: self.field.clone(), coeffs: v }
    }

    /// Quotient and remainder; division by zero is an error.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::Domain("polynomial division by zero".into()));
        }
        let f = &self.field;
        let dd = d.coeffs.len() - 1;
        let lead_inv = f
            .inv(d.leading().unwrap())
            .ok_or_else(|| Error::Domain("non-invertible leading coefficient".into()))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let mut quo = vec![f.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(&rem[i], &lead_inv);
            if !f.is_zero(&c) {
                for j in 0..=dd {
                    let t = f.mul(&c, &d.coeffs[j]);
                    rem[i - dd + j] = f.sub(&rem[i - dd + j], &t);
                }
            }
            quo[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(f.clone(), quo), Poly::new(f.clone(), rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact division; error if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal("division expected to be exact".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                if self.field.is_one(l) {
                    self.clone()
                } else {
                    let li = self.field.inv(l).expect("leading coeff invertible");
                    self.scale(&li)
                }
            }
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("gcd remainder");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` monic with `s*self + t*other = g`.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f.clone()), Poly::zero(f.clone()));
        let (mut t0, mut t1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("xgcd divrem");
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
            (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
        }
        if let Some(l) = r0.leading() {
            let li = f.inv(l).unwrap();
            (r0.scale(&li), s0.scale(&li), t0.scale(&li))
        } else {
            (r0, s0, t0)
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
            .collect();
        Poly::new(self.field.clone(), v)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let f = self.field.clone();
        let mut acc = Poly::zero(f.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(f.clone(), c.clone()));
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &num_bigint::BigUint, m: &Self) -> Result<Self> {
        use num_traits::Zero;
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(self.field.clone());
        let mut e = e.clone();
        let two = num_bigint::BigUint::from(2u32);
        while !e.is_zero() {
            if (&e % &two) == num_bigint::BigUint::from(1u32) {
                acc = acc.mul(&base).rem(m)?;
            }
            e >>= 1;
            if !e.is_zero() {
                base = base.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Reverse the coefficients relative to degree `n` (maps `f(x)` to `x^n f(1/x)`).
    pub fn reverse(&self, n: usize) -> Self {
        assert!(self.deg() <= n as i64);
        let mut v = vec![self.field.zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Poly::new(self.field.clone(), v)
    }

    /// Truncate modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Poly::new(self.field.clone(), self.coeffs.iter().take(n).cloned().collect())
    }

    /// Valuation at x=0: index of lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    /// Order of vanishing at the monic irreducible `place` (valuation of self).
    pub fn valuation_at(&self, place: &Self) -> Option<usize> {
        if self.is_zero() {
            return None; // infinite
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(place).expect("valuation divrem");
            if r.is_zero() {
                v += 1;
                cur = q;
            } else {
                return Some(v);
            }
        }
    }

    /// Resultant of self and other.
    pub fn resultant(&self, other: &Self) -> F::Elem {
        let f = self.field.clone();
        if self.is_zero() || other.is_zero() {
            return f.zero();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = f.one();
        let mut sign_flip = false;
        loop {
            if b.is_constant() {
                // res(a, c) = c^deg(a)
                let c = b.coeff(0);
                let mut r = f.pow_u64(&c, a.deg().max(0) as u64);
                r = f.mul(&acc, &r);
                if sign_flip {
                    r = f.neg(&r);
                }
                return r;
            }
            let r = a.rem(&b).expect("resultant rem");
            if r.is_zero() {
                return f.zero();
            }
            // res(a,b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
            let da = a.deg() as u64;
            let db = b.deg() as u64;
            let dr = r.deg() as u64;
            if (da * db) % 2 == 1 {
                sign_flip = !sign_flip;
            }
            let lc = b.leading().unwrap().clone();
            acc = f.mul(&acc, &f.pow_u64(&lc, da - dr));
            a = b;
            b = r;
        }
    }

    /// Discriminant (up to the standard normalization by the leading coefficient).
    pub fn discriminant(&self) -> F::Elem {
        let f = self.field.clone();
        let d = self.derivative();
        if d.is_zero() || self.deg() < 1 {
            return f.zero();
        }
        let res = self.resultant(&d);
        let n = self.deg() as u64;
        let lc_inv = f.inv(self.leading().unwrap()).unwrap();
        let mut r = f.mul(&res, &lc_inv);
        // sign (-1)^{n(n-1)/2}
        if (n * (n - 1) / 2) % 2 == 1 {
            r = f.neg(&r);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fp::Fp;

    #[test]
    fn divrem_roundtrip() {
        let f = Fp::new(29);
        let a = Poly::from_i64(f.clone(), &[1, 2, 3, 4, 5]);
        let b = Poly::from_i64(f.clone(), &[7, 0, 2]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn gcd_of_multiples() {
        let f = Fp::new(29);
        let g = Poly::from_i64(f.clone(), &[1, 1]); // x + 1
        let a = g.mul(&Poly::from_i64(f.clone(), &[3, 1]));
        let b = g.mul(&Poly::from_i64(f.clone(), &[5, 1]));
        assert_eq!(a.gcd(&b), g.monic());
    }

    #[test]
    fn xgcd_identity() {
        let f = Fp::new(29);
        let a = Poly::from_i64(f.clone(), &[1, 2, 3]);
        let b = Poly::from_i64(f.clone(), &[4, 5]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn resultant_shared_root() {
        let f = Fp::new(29);
        // both vanish at x = 3
        let a = Poly::from_i64(f.clone(), &[-3, 1]).mul(&Poly::from_i64(f.clone(), &[1, 1]));
        let b = Poly::from_i64(f.clone(), &[-3, 1]).mul(&Poly::from_i64(f.clone(), &[2, 1]));
        assert_eq!(a.resultant(&b), 0);
        let c = Poly::from_i64(f.clone(), &[5, 1]);
        assert_ne!(a.resultant(&c), 0);
    }

    #[test]
    fn valuation_at_place() {
        let f = Fp::new(29);
        let place = Poly::from_i64(f.clone(), &[-1, 1]);
        let a = place.pow(3).mul(&Poly::from_i64(f.clone(), &[1, 1]));
        assert_eq!(a.valuation_at(&place), Some(3));
    }
}
