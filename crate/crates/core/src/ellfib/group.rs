//! Chord-tangent group law on the generic fiber, an elliptic curve over
//! the function field K(t).

use super::{Section, WeierstrassK3};
use crate::error::{Error, Result};
use crate::exact::field::{Field, Ring};
use crate::exact::ratfun::RatFun;

pub fn is_on_curve<F: Field>(w: &WeierstrassK3<F>, p: &Section<F>) -> bool {
    match p {
        Section::Zero => true,
        Section::Point { x, y } => {
            let k = w.function_field();
            let x3 = k.mul(&k.mul(x, x), x);
            let ax = k.mul(&RatFun::from_poly(w.a.clone()), x);
            let rhs = k.add(&k.add(&x3, &ax), &RatFun::from_poly(w.b.clone()));
            k.mul(y, y) == rhs
        }
    }
}

pub fn negate_section<F: Field>(w: &WeierstrassK3<F>, p: &Section<F>) -> Section<F> {
    let k = w.function_field();
    match p {
        Section::Zero => Section::Zero,
        Section::Point { x, y } => Section::Point { x: x.clone(), y: k.neg(y) },
    }
}

/// P + Q by the chord-tangent law; the zero section is the identity.
pub fn add_sections<F: Field>(
    w: &WeierstrassK3<F>,
    p: &Section<F>,
    q: &Section<F>,
) -> Result<Section<F>> {
    if !is_on_curve(w, p) || !is_on_curve(w, q) {
        return Err(Error::Domain("section does not lie on the curve".into()));
    }
    let k = w.function_field();
    match (p, q) {
        (Section::Zero, _) => Ok(q.clone()),
        (_, Section::Zero) => Ok(p.clone()),
        (Section::Point { x: x1, y: y1 }, Section::Point { x: x2, y: y2 }) => {
            let lambda: RatFun<F> = if x1 == x2 {
                if *y1 == k.neg(y2) {
                    return Ok(Section::Zero);
                }
                // tangent slope (3 x^2 + a) / (2 y)
                let three_x2 = k.mul(&k.from_base(w.field.from_i64(3)), &k.mul(x1, x1));
                let num = k.add(&three_x2, &RatFun::from_poly(w.a.clone()));
                let den = k.mul(&k.from_base(w.field.from_i64(2)), y1);
                k.div(&num, &den).ok_or_else(|| Error::Domain("tangent at a two-torsion point".into()))?
            } else {
                k.div(&k.sub(y2, y1), &k.sub(x2, x1)).ok_or_else(|| Error::Domain("degenerate chord".into()))?
            };
            let x3 = k.sub(&k.sub(&k.mul(&lambda, &lambda), x1), x2);
            // third chord intersection negated: y3 = lambda (x1 - x3) - y1
            let y3 = k.sub(&k.mul(&lambda, &k.sub(x1, &x3)), y1);
            let out = Section::Point { x: x3, y: y3 };
            debug_assert!(is_on_curve(w, &out));
            Ok(out)
        }
    }
}

/// n P by double-and-add (n may be negative).
pub fn multiply_section<F: Field>(
    w: &WeierstrassK3<F>,
    p: &Section<F>,
    n: i64,
) -> Result<Section<F>> {
    let mut base = if n < 0 { negate_section(w, p) } else { p.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = Section::Zero;
    while e > 0 {
        if e & 1 == 1 {
            acc = add_sections(w, &acc, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = add_sections(w, &base, &base)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fp::Fp;
    use crate::exact::poly::Poly;

    fn family_member() -> (WeierstrassK3<Fp>, Section<Fp>) {
        let f = Fp::new(29);
        // y^2 = x^3 + 19 x + 19 t^7 + 15 with its printed section
        let w = WeierstrassK3::new(
            f,
            Poly::from_i64(f, &[19]),
            Poly::from_i64(f, &[15, 0, 0, 0, 0, 0, 0, 19]),
        )
        .unwrap();
        let p = Section::from_polys(
            Poly::from_i64(f, &[16, 27, 7, 7, 1]),
            Poly::from_i64(f, &[23, 20, 15, 25, 18, 25, 1]),
        );
        (w, p)
    }

    #[test]
    fn printed_section_is_on_curve() {
        let (w, p) = family_member();
        assert!(is_on_curve(&w, &p));
    }

    #[test]
    fn identity_and_inverse() {
        let (w, p) = family_member();
        assert_eq!(add_sections(&w, &p, &Section::Zero).unwrap(), p);
        let minus = negate_section(&w, &p);
        assert_eq!(add_sections(&w, &p, &minus).unwrap(), Section::Zero);
    }

    #[test]
    fn doubling_stays_on_curve() {
        let (w, p) = family_member();
        let twop = add_sections(&w, &p, &p).unwrap();
        assert!(is_on_curve(&w, &twop));
        assert_ne!(twop, Section::Zero);
        let threep = add_sections(&w, &twop, &p).unwrap();
        assert_eq!(threep, multiply_section(&w, &p, 3).unwrap());
    }

    #[test]
    fn associativity_on_translates() {
        let (w, p) = family_member();
        // translate by t -> 16 t (a 7th root of unity mod 29) for a second section
        let f = Fp::new(29);
        let k = w.function_field();
        let zeta_t = RatFun::from_poly(Poly::new(f, vec![0, 16]));
        let (x, y) = p.xy().unwrap();
        let q = Section::point(x.compose(&zeta_t), y.compose(&zeta_t));
        assert!(is_on_curve(&w, &q));
        let r = add_sections(&w, &p, &p).unwrap();
        let lhs = add_sections(&w, &add_sections(&w, &p, &q).unwrap(), &r).unwrap();
        let rhs = add_sections(&w, &p, &add_sections(&w, &q, &r).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let _ = k;
    }

    #[test]
    fn off_curve_rejected() {
        let (w, _) = family_member();
        let f = Fp::new(29);
        let bad = Section::from_polys(Poly::from_i64(f, &[1]), Poly::from_i64(f, &[1]));
        assert!(add_sections(&w, &bad, &Section::Zero).is_err());
    }
}
