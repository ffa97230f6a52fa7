//! Field extensions F[x]/(m) for an irreducible modulus m.
//!
//! Used both for finite field extensions (towers over F_p) and for number
//! fields over the rationals. Elements are reduced representatives stored
//! as polynomials of degree below deg m.

use super::field::{Field, FiniteField, Ring};
use super::poly::Poly;
use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Debug)]
pub struct ExtField<F: Field> {
    pub base: F,
    pub modulus: Poly<F>,
}

impl<F: Field> ExtField<F> {
    /// The modulus must be monic and irreducible over the base; irreducibility
    /// is the caller's responsibility (inv returns None on a zero divisor).
    pub fn new(modulus: Poly<F>) -> Self {
        assert!(modulus.deg() >= 1, "modulus must be nonconstant");
        let base = modulus.field.clone();
        let modulus = modulus.monic();
        ExtField { base, modulus }
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg() as usize
    }

    pub fn reduce(&self, p: &Poly<F>) -> Poly<F> {
        p.rem(&self.modulus).expect("reduce mod modulus")
    }

    /// The residue class of the generator x.
    pub fn gen(&self) -> Poly<F> {
        self.reduce(&Poly::x(self.base.clone()))
    }

    pub fn from_base(&self, c: F::Elem) -> Poly<F> {
        Poly::constant(self.base.clone(), c)
    }

    /// Coefficient vector of length `degree()` over the base field.
    pub fn coords(&self, a: &Poly<F>) -> Vec<F::Elem> {
        let mut v: Vec<F::Elem> = a.coeffs().to_vec();
        v.resize(self.degree(), self.base.zero());
        v
    }
}

impl<F: Field> Ring for ExtField<F> {
    type Elem = Poly<F>;

    fn zero(&self) -> Poly<F> {
        Poly::zero(self.base.clone())
    }

    fn one(&self) -> Poly<F> {
        Poly::one(self.base.clone())
    }

    fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.add(b)
    }

    fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.sub(b)
    }

    fn neg(&self, a: &Poly<F>) -> Poly<F> {
        a.neg()
    }

    fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.reduce(&a.mul(b))
    }

    fn from_i64(&self, n: i64) -> Poly<F> {
        Poly::constant(self.base.clone(), self.base.from_i64(n))
    }

    fn is_zero(&self, a: &Poly<F>) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> Option<BigUint> {
        self.base.characteristic()
    }
}

impl<F: Field> Field for ExtField<F> {
    fn inv(&self, a: &Poly<F>) -> Option<Poly<F>> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.extended_gcd(&self.modulus);
        if g.deg() != 0 {
            return None; // zero divisor; modulus not irreducible
        }
        Some(self.reduce(&s))
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn order(&self) -> BigUint {
        let q = self.base.order();
        let mut acc = BigUint::one();
        for _ in 0..self.degree() {
            acc *= &q;
        }
        acc
    }

    fn elem_from_index(&self, i: &BigUint) -> Poly<F> {
        let q = self.base.order();
        let mut i = i.clone();
        let mut coeffs = Vec::with_capacity(self.degree());
        for _ in 0..self.degree() {
            let d = &i % &q;
            coeffs.push(self.base.elem_from_index(&d));
            i /= &q;
        }
        Poly::new(self.base.clone(), coeffs)
    }

    fn index_of(&self, a: &Poly<F>) -> BigUint {
        let q = self.base.order();
        let mut acc = BigUint::zero();
        for c in self.coords(a).iter().rev() {
            acc = acc * &q + self.base.index_of(c);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fp::Fp;

    #[test]
    fn quadratic_extension_of_f29() {
        // x^2 - 2 is irreducible over F_29 (2 is a nonresidue mod 29)
        let f = Fp::new(29);
        let m = Poly::from_i64(f.clone(), &[-2, 0, 1]);
        let e = ExtField::new(m);
        let g = e.gen();
        assert_eq!(e.mul(&g, &g), e.from_i64(2));
        let gi = e.inv(&g).unwrap();
        assert!(e.is_one(&e.mul(&g, &gi)));
        assert_eq!(e.order(), BigUint::from(841u32));
    }

    #[test]
    fn index_roundtrip() {
        let f = Fp::new(5);
        let m = Poly::from_i64(f.clone(), &[2, 0, 1]); // x^2 + 2 irreducible mod 5
        let e = ExtField::new(m);
        for i in 0u32..25 {
            let a = e.elem_from_index(&BigUint::from(i));
            assert_eq!(e.index_of(&a), BigUint::from(i));
        }
    }
}
