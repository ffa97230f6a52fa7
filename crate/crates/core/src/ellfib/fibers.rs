//! Discriminant and Kodaira fiber classification of short Weierstrass
//! models in characteristic not 2 or 3, via valuations of (a, b, delta)
//! at each place of P^1 including infinity, plus global minimalization.

use super::WeierstrassK3;
use crate::error::{Error, Result};
use crate::exact::factor::factor_finite;
use crate::exact::field::{Field, FiniteField};
use crate::exact::poly::Poly;

/// A place of P^1: a monic irreducible polynomial in t, or t = infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum Place<F: Field> {
    Finite(Poly<F>),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KodairaType {
    I(u32),
    Istar(u32),
    II,
    III,
    IV,
    IVstar,
    IIIstar,
    IIstar,
}

impl KodairaType {
    pub fn euler(&self) -> u32 {
        match self {
            KodairaType::I(n) => *n,
            KodairaType::Istar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVstar => 8,
            KodairaType::IIIstar => 9,
            KodairaType::IIstar => 10,
        }
    }

    /// ADE root type of the fiber, None for irreducible fibers.
    pub fn root_type(&self) -> Option<(char, usize)> {
        match self {
            KodairaType::I(n) if *n >= 2 => Some(('A', (*n - 1) as usize)),
            KodairaType::I(_) => None,
            KodairaType::Istar(n) => Some(('D', (*n + 4) as usize)),
            KodairaType::II => None,
            KodairaType::III => Some(('A', 1)),
            KodairaType::IV => Some(('A', 2)),
            KodairaType::IVstar => Some(('E', 6)),
            KodairaType::IIIstar => Some(('E', 7)),
            KodairaType::IIstar => Some(('E', 8)),
        }
    }

    /// Order of the component group, used to decide whether height
    /// corrections can default to zero.
    pub fn component_group_order(&self) -> u32 {
        match self {
            KodairaType::I(0) | KodairaType::I(1) | KodairaType::II | KodairaType::IIstar => 1,
            KodairaType::I(n) => *n,
            KodairaType::Istar(_) => 4,
            KodairaType::III | KodairaType::IIIstar => 2,
            KodairaType::IV | KodairaType::IVstar => 3,
        }
    }

    pub fn label(&self) -> String {
        match self {
            KodairaType::I(n) => format!("I{n}"),
            KodairaType::Istar(n) => format!("I{n}*"),
            KodairaType::II => "II".into(),
            KodairaType::III => "III".into(),
            KodairaType::IV => "IV".into(),
            KodairaType::IVstar => "IV*".into(),
            KodairaType::IIIstar => "III*".into(),
            KodairaType::IIstar => "II*".into(),
        }
    }
}

impl<F: Field> Place<F> {
    /// Residue degree of the place over the base field.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.deg() as usize,
            Place::Infinity => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KodairaFiber<F: Field> {
    pub place: Place<F>,
    pub kind: KodairaType,
    pub euler: u32,
}

/// Sum of Euler numbers weighted by residue degree; 24 for a K3 model.
pub fn euler_characteristic<F: Field>(fibers: &[KodairaFiber<F>]) -> u32 {
    fibers.iter().map(|f| f.euler * f.place.degree() as u32).sum()
}

/// delta = -16 (4 a^3 + 27 b^2).
pub fn discriminant_poly<F: Field>(w: &WeierstrassK3<F>) -> Result<Poly<F>> {
    let f = &w.field;
    if !f.characteristic().map(|p| p > num_bigint::BigUint::from(3u32)).unwrap_or(true) {
        return Err(Error::Unsupported("characteristic 2 and 3 are not supported".into()));
    }
    let four_a3 = w.a.pow(3).scale(&f.from_i64(4));
    let t27_b2 = w.b.pow(2).scale(&f.from_i64(27));
    Ok(four_a3.add(&t27_b2).scale(&f.from_i64(-16)))
}

/// a and b in the chart at infinity: s^8 a(1/s), s^12 b(1/s).
fn infinity_chart<F: Field>(w: &WeierstrassK3<F>) -> (Poly<F>, Poly<F>) {
    (w.a.reverse(8), w.b.reverse(12))
}

/// Kodaira type from the valuations of (a, b, delta) at a place, for
/// characteristic away from 2 and 3. `va`/`vb` are None for zero input.
fn classify(va: Option<usize>, vb: Option<usize>, vd: usize) -> Result<KodairaType> {
    let va_ge = |k: usize| va.map(|v| v >= k).unwrap_or(true);
    let vb_ge = |k: usize| vb.map(|v| v >= k).unwrap_or(true);
    if va_ge(4) && vb_ge(6) {
        return Err(Error::Domain("model is not minimal at a place".into()));
    }
    let t = if vd == 0 {
        KodairaType::I(0)
    } else if va == Some(0) {
        KodairaType::I(vd as u32)
    } else if vb == Some(1) {
        KodairaType::II
    } else if va == Some(1) {
        KodairaType::III
    } else if vb == Some(2) {
        KodairaType::IV
    } else if vd == 6 {
        KodairaType::Istar(0)
    } else if va == Some(2) && vb == Some(3) {
        KodairaType::Istar(vd as u32 - 6)
    } else if vb == Some(4) {
        KodairaType::IVstar
    } else if va == Some(3) {
        KodairaType::IIIstar
    } else if vb == Some(5) {
        KodairaType::IIstar
    } else {
        return Err(Error::Internal(format!(
            "unclassifiable valuations (va, vb, vd) = ({va:?}, {vb:?}, {vd})"
        )));
    };
    Ok(t)
}

fn val<F: Field>(p: &Poly<F>, place: &Poly<F>) -> Option<usize> {
    p.valuation_at(place)
}

/// Singular fibers of a (minimal) model, one entry per place with
/// positive discriminant valuation, including t = infinity. Euler numbers
/// sum to 24 for a K3 model.
pub fn kodaira_fibers<F: FiniteField>(w: &WeierstrassK3<F>) -> Result<Vec<KodairaFiber<F>>> {
    let delta = discriminant_poly(w)?;
    let mut out = Vec::new();
    let (_, factors) = factor_finite(&delta)?;
    for (place, vd) in factors {
        let kind = classify(val(&w.a, &place), val(&w.b, &place), vd)?;
        out.push(KodairaFiber { euler: kind.euler(), place: Place::Finite(place), kind });
    }
    // chart at infinity: delta valuation is 24 - deg delta
    let vd_inf = 24 - delta.deg() as usize;
    if vd_inf > 0 {
        let (ai, bi) = infinity_chart(w);
        let s = Poly::x(w.field.clone());
        let kind = classify(val(&ai, &s), val(&bi, &s), vd_inf)?;
        out.push(KodairaFiber { euler: kind.euler(), place: Place::Infinity, kind });
    }
    Ok(out)
}

/// Globally minimal model at all finite places, together with the scaling
/// polynomial u: the coordinate change is (x, y) = (u^2 x', u^3 y'),
/// a' = a / u^4, b' = b / u^6.
pub fn minimalize<F: FiniteField>(w: &WeierstrassK3<F>) -> Result<(WeierstrassK3<F>, Poly<F>)> {
    let delta = discriminant_poly(w)?;
    let mut u = Poly::one(w.field.clone());
    let (_, factors) = factor_finite(&delta)?;
    for (place, _) in factors {
        let va = val(&w.a, &place);
        let vb = val(&w.b, &place);
        let ka = va.map(|v| v / 4).unwrap_or(usize::MAX);
        let kb = vb.map(|v| v / 6).unwrap_or(usize::MAX);
        let k = ka.min(kb);
        if k > 0 {
            u = u.mul(&place.pow(k as u64));
        }
    }
    let a = w.a.div_exact(&u.pow(4))?;
    let b = w.b.div_exact(&u.pow(6))?;
    let out = WeierstrassK3::new(w.field.clone(), a, b)?;
    Ok((out, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fp::Fp;

    fn w29(a: &[i64], b: &[i64]) -> WeierstrassK3<Fp> {
        let f = Fp::new(29);
        WeierstrassK3::new(f, Poly::from_i64(f, a), Poly::from_i64(f, b)).unwrap()
    }

    #[test]
    fn constant_discriminant() {
        let w = w29(&[0], &[1]);
        let d = discriminant_poly(&w).unwrap();
        // -432 mod 29 = 3
        assert_eq!(d, Poly::from_i64(Fp::new(29), &[3]));
    }

    #[test]
    fn family_member_has_ii_star_at_infinity() {
        // y^2 = x^3 + 19 x + 19 t^7 + 15
        let w = w29(&[19], &[15, 0, 0, 0, 0, 0, 0, 19]);
        let fibers = kodaira_fibers(&w).unwrap();
        assert_eq!(euler_characteristic(&fibers), 24);
        let inf: Vec<_> = fibers.iter().filter(|f| f.place == Place::Infinity).collect();
        assert_eq!(inf.len(), 1);
        assert_eq!(inf[0].kind, KodairaType::IIstar);
        // every other fiber is irreducible
        for f in &fibers {
            if f.place != Place::Infinity {
                assert!(f.kind.root_type().is_none());
            }
        }
    }

    #[test]
    fn type_ii_at_origin() {
        // y^2 = x^3 + t x + (t + t^11)
        let w = w29(&[0, 1], &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fibers = kodaira_fibers(&w).unwrap();
        let at0: Vec<_> = fibers
            .iter()
            .filter(|f| matches!(&f.place, Place::Finite(p) if p.coeff(0) == 0 && p.deg() == 1))
            .collect();
        assert_eq!(at0.len(), 1);
        assert_eq!(at0[0].kind, KodairaType::II);
    }

    #[test]
    fn minimalize_round_trip() {
        let w = w29(&[19], &[15, 0, 0, 0, 0, 0, 0, 19]);
        let f = Fp::new(29);
        let t = Poly::from_i64(f, &[0, 1]);
        let scaled = WeierstrassK3 {
            field: f,
            a: w.a.mul(&t.pow(4)),
            b: w.b.mul(&t.pow(6)),
        };
        let (min, u) = minimalize(&scaled).unwrap();
        assert_eq!(min, w);
        assert_eq!(u, t);
        let (same, u1) = minimalize(&w).unwrap();
        assert_eq!(same, w);
        assert_eq!(u1.deg(), 0);
    }

    #[test]
    fn euler_sum_is_24_for_s6() {
        // reduction of the S6 model: a and b of degrees 8 and 12
        let w = w29(
            &[14, 9, 23, 4, 25, 17, 6, 10, 3],
            &[6, 12, 25, 12, 19, 17, 3, 19, 28, 28, 2, 25, 5],
        );
        let fibers = kodaira_fibers(&w).unwrap();
        assert_eq!(euler_characteristic(&fibers), 24);
        // root multiset A3 + A4 + 3 A1
        let mut roots: Vec<(char, usize)> =
            fibers.iter().filter_map(|f| f.kind.root_type()).collect();
        roots.sort();
        assert_eq!(roots, vec![('A', 1), ('A', 1), ('A', 1), ('A', 3), ('A', 4)]);
    }
}
