//! Fiberwise trace of a multisection: the section obtained by summing,
//! via the group law on each fiber, the points a degree-d multisection
//! cuts out on it. Works divisor-style, repeatedly replacing the point
//! set by its negated residual under the norm of y - h(x).

use super::{Section, WeierstrassK3};
use crate::error::{Error, Result};
use crate::exact::field::{Field, Ring};
use crate::exact::poly::Poly;
use crate::exact::ratfun::RatFunField;

/// A multisection, as the ideal cutting it out on the generic fiber.
/// `Graph` is (g(x), y - h(x)); `TwoSheeted` is (y^2 - f(x), g(x)), a
/// curve meeting each fiber in points closed under negation.
#[derive(Clone, Debug, PartialEq)]
pub enum MultiSection<F: Field> {
    Graph { g: Poly<RatFunField<F>>, h: Poly<RatFunField<F>> },
    TwoSheeted { g: Poly<RatFunField<F>> },
}

impl<F: Field> MultiSection<F> {
    /// Number of points cut out on a general fiber.
    pub fn degree(&self) -> i64 {
        match self {
            MultiSection::Graph { g, .. } => g.deg(),
            MultiSection::TwoSheeted { g } => 2 * g.deg(),
        }
    }
}

/// Sum the points of the multisection on the generic fiber.
///
/// For (g, y - h): the zero divisor of y - h(x) splits as the given
/// points plus the points above the cofactor (h^2 - f)/g, and the whole
/// thing is linearly equivalent to a multiple of the zero point, so each
/// step replaces g by that cofactor and flips a sign. Degrees strictly
/// drop; a non-exact division means the ideal did not lie on the surface.
pub fn fiberwise_trace<F: Field>(
    w: &WeierstrassK3<F>,
    m: &MultiSection<F>,
) -> Result<Section<F>> {
    let (g0, h0) = match m {
        // points come in (x, y), (x, -y) pairs fiberwise, so the sum is zero
        MultiSection::TwoSheeted { .. } => return Ok(Section::Zero),
        MultiSection::Graph { g, h } => (g, h),
    };
    if g0.is_zero() {
        return Err(Error::Domain("multisection ideal contains no x-relation".into()));
    }
    let k = w.function_field();
    let f = w.rhs();
    let mut g = g0.monic();
    let mut h = h0.rem(&g)?;
    let mut negate = false;
    while g.deg() > 1 {
        let norm = h.mul(&h).add(&f.neg());
        g = norm
            .div_exact(&g)
            .map_err(|_| Error::Domain("ideal does not lie on the surface: y^2 - f is not divisible by g modulo y - h".into()))?
            .monic();
        h = h.rem(&g)?;
        negate = !negate;
    }
    if g.deg() == 0 {
        return Ok(Section::Zero);
    }
    let x0 = k.neg(&g.coeff(0));
    let y0 = h.eval(&x0);
    let sec = Section::point(x0, if negate { k.neg(&y0) } else { y0 });
    if !super::group::is_on_curve(w, &sec) {
        return Err(Error::Domain("trace left the surface; multisection data is inconsistent".into()));
    }
    Ok(sec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::group::add_sections;
    use crate::exact::fp::Fp;
    use crate::exact::ratfun::RatFun;

    fn family_member() -> (WeierstrassK3<Fp>, Section<Fp>, Section<Fp>) {
        let f = Fp::new(29);
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
        let sub = RatFun::from_poly(Poly::new(f, vec![0, 16]));
        let (x, y) = p.xy().unwrap();
        let q = Section::point(x.compose(&sub), y.compose(&sub));
        (w, p, q)
    }

    /// (g, y - h) with g = (x - x_P)(x - x_Q) and h the chord through P
    /// and Q reduced mod g.
    fn chord_multisection(
        w: &WeierstrassK3<Fp>,
        p: &Section<Fp>,
        q: &Section<Fp>,
    ) -> MultiSection<Fp> {
        let k = w.function_field();
        let (xp, yp) = p.xy().unwrap();
        let (xq, yq) = q.xy().unwrap();
        let lam = k.div(&k.sub(yq, yp), &k.sub(xq, xp)).unwrap();
        let mu = k.sub(yp, &k.mul(&lam, xp));
        let lin = |x0: &RatFun<Fp>| {
            Poly::new(k.clone(), vec![k.neg(x0), k.one()])
        };
        let g = lin(xp).mul(&lin(xq));
        let h = Poly::new(k.clone(), vec![mu, lam]);
        MultiSection::Graph { g, h }
    }

    #[test]
    fn two_sheeted_traces_to_zero() {
        let (w, _, _) = family_member();
        let k = w.function_field();
        let g = Poly::new(k.clone(), vec![k.one(), k.zero(), k.one()]);
        assert_eq!(fiberwise_trace(&w, &MultiSection::TwoSheeted { g }).unwrap(), Section::Zero);
    }

    #[test]
    fn single_point_graph_is_the_section() {
        let (w, p, _) = family_member();
        let k = w.function_field();
        let (xp, yp) = p.xy().unwrap();
        let g = Poly::new(k.clone(), vec![k.neg(xp), k.one()]);
        let h = Poly::new(k.clone(), vec![yp.clone()]);
        assert_eq!(fiberwise_trace(&w, &MultiSection::Graph { g, h }).unwrap(), p);
    }

    #[test]
    fn chord_trace_matches_group_law() {
        let (w, p, q) = family_member();
        let m = chord_multisection(&w, &p, &q);
        let sum = add_sections(&w, &p, &q).unwrap();
        assert_eq!(fiberwise_trace(&w, &m).unwrap(), sum);
    }

    #[test]
    fn doubling_chord_matches_group_law() {
        let (w, p, _q) = family_member();
        // tangent-line ideal at P: g = (x - x_P)^2, h = tangent line
        let two_p = add_sections(&w, &p, &p).unwrap();
        let k = w.function_field();
        let (xp, yp) = p.xy().unwrap();
        let three = k.from_base(w.field.from_i64(3));
        let two = k.from_base(w.field.from_i64(2));
        let num = k.add(&k.mul(&three, &k.mul(xp, xp)), &RatFun::from_poly(w.a.clone()));
        let lam = k.div(&num, &k.mul(&two, yp)).unwrap();
        let mu = k.sub(yp, &k.mul(&lam, xp));
        let lin = Poly::new(k.clone(), vec![k.neg(xp), k.one()]);
        let g = lin.mul(&lin);
        let h = Poly::new(k.clone(), vec![mu, lam]);
        assert_eq!(fiberwise_trace(&w, &MultiSection::Graph { g, h }).unwrap(), two_p);
    }

    #[test]
    fn corrupted_ideal_is_rejected() {
        let (w, p, q) = family_member();
        let m = chord_multisection(&w, &p, &q);
        if let MultiSection::Graph { g, h } = m {
            let k = w.function_field();
            let bad = h.add(&Poly::new(k.clone(), vec![k.zero(), k.one(), k.one()]));
            assert!(fiberwise_trace(&w, &MultiSection::Graph { g, h: bad }).is_err());
        } else {
            unreachable!();
        }
    }
}
