//! Rational functions num/den over a coefficient field, kept in lowest
//! terms with a monic denominator. `RatFunField` wraps them as a `Field`
//! context so curve arithmetic can run over function fields directly.

use super::field::{Field, Ring};
use super::poly::Poly;
use num_bigint::BigUint;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFun<F: Field> {
    pub num: Poly<F>,
    pub den: Poly<F>,
}

impl<F: Field> RatFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFun { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let one = Poly::one(p.field.clone());
        RatFun { num: p, den: one }
    }

    fn normalize(&mut self) {
        let f = self.den.field.clone();
        if self.num.is_zero() {
            self.den = Poly::one(f);
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.deg() > 0 {
            self.num = self.num.div_exact(&g).unwrap();
            self.den = self.den.div_exact(&g).unwrap();
        }
        let l = self.den.leading().unwrap().clone();
        if !f.is_one(&l) {
            let li = f.inv(&l).unwrap();
            self.num = self.num.scale(&li);
            self.den = self.den.scale(&li);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.deg() == 0
    }

    /// The numerator when the denominator is 1; error otherwise.
    pub fn to_poly(&self) -> crate::error::Result<Poly<F>> {
        if self.is_poly() {
            Ok(self.num.clone())
        } else {
            Err(crate::error::Error::Domain("rational function is not polynomial".into()))
        }
    }

    pub fn eval(&self, x: &F::Elem) -> Option<F::Elem> {
        let f = &self.den.field;
        let d = self.den.eval(x);
        let di = f.inv(&d)?;
        Some(f.mul(&self.num.eval(x), &di))
    }

    /// deg num - deg den, with 0 mapped to None.
    pub fn degree_diff(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.num.deg() - self.den.deg())
        }
    }

    /// Substitute a rational function for the variable.
    pub fn compose(&self, inner: &RatFun<F>) -> RatFun<F> {
        let f = self.den.field.clone();
        let ctx = RatFunField { base: f };
        let mut acc = ctx.zero();
        for c in self.num.coeffs().iter().rev() {
            acc = ctx.add(&ctx.mul(&acc, inner), &RatFun::from_poly(Poly::constant(ctx.base.clone(), c.clone())));
        }
        let mut den_acc = ctx.zero();
        for c in self.den.coeffs().iter().rev() {
            den_acc = ctx.add(&ctx.mul(&den_acc, inner), &RatFun::from_poly(Poly::constant(ctx.base.clone(), c.clone())));
        }
        ctx.div(&acc, &den_acc).expect("compose denominator vanished identically")
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct RatFunField<F: Field> {
    pub base: F,
}

impl<F: Field> RatFunField<F> {
    pub fn new(base: F) -> Self {
        RatFunField { base }
    }

    pub fn var(&self) -> RatFun<F> {
        RatFun::from_poly(Poly::x(self.base.clone()))
    }

    pub fn from_poly(&self, p: Poly<F>) -> RatFun<F> {
        RatFun::from_poly(p)
    }

    pub fn from_base(&self, c: F::Elem) -> RatFun<F> {
        RatFun::from_poly(Poly::constant(self.base.clone(), c))
    }
}

impl<F: Field> Ring for RatFunField<F> {
    type Elem = RatFun<F>;

    fn zero(&self) -> RatFun<F> {
        RatFun::from_poly(Poly::zero(self.base.clone()))
    }

    fn one(&self) -> RatFun<F> {
        RatFun::from_poly(Poly::one(self.base.clone()))
    }

    fn add(&self, a: &RatFun<F>, b: &RatFun<F>) -> RatFun<F> {
        let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
        RatFun::new(num, a.den.mul(&b.den))
    }

    fn sub(&self, a: &RatFun<F>, b: &RatFun<F>) -> RatFun<F> {
        let num = a.num.mul(&b.den).sub(&b.num.mul(&a.den));
        RatFun::new(num, a.den.mul(&b.den))
    }

    fn neg(&self, a: &RatFun<F>) -> RatFun<F> {
        RatFun { num: a.num.neg(), den: a.den.clone() }
    }

    fn mul(&self, a: &RatFun<F>, b: &RatFun<F>) -> RatFun<F> {
        RatFun::new(a.num.mul(&b.num), a.den.mul(&b.den))
    }

    fn from_i64(&self, n: i64) -> RatFun<F> {
        self.from_base(self.base.from_i64(n))
    }

    fn is_zero(&self, a: &RatFun<F>) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> Option<BigUint> {
        self.base.characteristic()
    }
}

impl<F: Field> Field for RatFunField<F> {
    fn inv(&self, a: &RatFun<F>) -> Option<RatFun<F>> {
        if a.is_zero() {
            return None;
        }
        Some(RatFun::new(a.den.clone(), a.num.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fp::Fp;

    #[test]
    fn lowest_terms_and_arith() {
        let f = Fp::new(29);
        let k = RatFunField::new(f.clone());
        let t = k.var();
        // (t^2 - 1)/(t - 1) reduces to t + 1
        let num = Poly::from_i64(f.clone(), &[-1, 0, 1]);
        let den = Poly::from_i64(f.clone(), &[-1, 1]);
        let r = RatFun::new(num, den);
        assert_eq!(r, k.add(&t, &k.one()));
        let ri = k.inv(&r).unwrap();
        assert!(k.is_one(&k.mul(&r, &ri)));
    }

    #[test]
    fn monic_denominator() {
        let f = Fp::new(29);
        let num = Poly::from_i64(f.clone(), &[1]);
        let den = Poly::from_i64(f.clone(), &[0, 3]);
        let r = RatFun::new(num, den);
        assert!(r.den.is_monic());
        assert_eq!(r.den, Poly::from_i64(f.clone(), &[0, 1]));
        assert_eq!(r.num, Poly::from_i64(f, &[10])); // 1/3 = 10 mod 29
    }
}
