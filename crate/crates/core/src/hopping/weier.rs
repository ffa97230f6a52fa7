//! From a quartic genus-one model y^2 = q(x) with a marked rational point
//! to a minimal Weierstrass model, and base changes by a Moebius map,
//! each step tracked as a coordinate change back to the input model.

use super::genus_one::from_x_poly;
use super::map::CoordinateMap;
use super::mpoly::{MPoly, MRat};
use crate::ellfib::{minimalize, WeierstrassK3};
use crate::error::{Error, Result};
use crate::exact::field::{Field, FiniteField, Ring};
use crate::exact::poly::Poly;
use crate::exact::ratfun::{RatFun, RatFunField};

type K<F> = RatFunField<F>;

fn mrat_const<F: Field>(r: &RatFun<F>) -> MRat<F> {
    MRat {
        num: MPoly::from_t_poly(&r.num),
        den: MPoly::from_t_poly(&r.den),
    }
}

/// Clear the t-denominators of an x-polynomial over F(t): returns the
/// numerator as a trivariate polynomial and the common denominator in t.
fn clear_x_poly<F: Field>(p: &Poly<K<F>>) -> Result<(MPoly<F>, Poly<F>)> {
    let kt = p.field.clone();
    let base = kt.base.clone();
    let mut lcm = Poly::one(base);
    for c in p.coeffs() {
        let g = lcm.gcd(&c.den);
        lcm = lcm.div_exact(&g)?.mul(&c.den);
    }
    let num = from_x_poly(&p.scale(&kt.from_poly(lcm.clone())))?;
    Ok((num, lcm))
}

/// Depress a cubic right-hand side r(x) to x^3 + A x + B; returns (A, B)
/// and the coordinate change from the depressed model back to y^2 = r(x).
fn depress_cubic<F: Field>(
    rhs: &Poly<K<F>>,
) -> Result<(RatFun<F>, RatFun<F>, CoordinateMap<F>)> {
    let kt = rhs.field.clone();
    let base = kt.base.clone();
    if rhs.deg() != 3 {
        return Err(Error::Internal(format!(
            "cubic right-hand side has degree {}",
            rhs.deg()
        )));
    }
    // scale x -> x/l, y -> y/l to make the cubic monic:
    // y^2 = l3 x^3 + ... becomes y^2 = x^3 + l2 x^2 + l1 l3 x + l0 l3^2
    let l = rhs.leading().cloned().unwrap();
    let c = rhs.coeffs();
    let monic = Poly::new(
        kt.clone(),
        vec![
            kt.mul(&c[0], &kt.mul(&l, &l)),
            kt.mul(&c[1], &l),
            c[2].clone(),
            kt.one(),
        ],
    );
    let three_inv = base
        .inv(&base.from_i64(3))
        .ok_or_else(|| Error::Unsupported("characteristic 3 not supported".into()))?;
    let shift = kt.mul(&monic.coeffs()[2], &kt.from_base(three_inv));
    let x_minus = Poly::new(kt.clone(), vec![kt.neg(&shift), kt.one()]);
    let dep = monic.compose(&x_minus);
    if !kt.is_zero(&dep.coeffs()[2]) {
        return Err(Error::Internal("depression left a quadratic term".into()));
    }
    let a = dep.coeffs()[1].clone();
    let b = dep.coeffs()[0].clone();
    // old x = (x - shift)/l, old y = y/l
    let sm = mrat_const(&kt.neg(&shift));
    let lm = mrat_const(&l);
    let x = MPoly::var(base.clone(), 0);
    let y = MPoly::var(base.clone(), 1);
    let map = CoordinateMap {
        x: MRat {
            num: x.mul(&sm.den).add(&sm.num).mul(&lm.den),
            den: sm.den.mul(&lm.num),
        },
        y: MRat {
            num: y.mul(&lm.den),
            den: lm.num,
        },
        t: MRat::var(base, 2),
    };
    Ok((a, b, map))
}

/// Scale y^2 = x^3 + A x + B with A, B in F(t) to a polynomial model and
/// minimalize it; returns the model and the coordinate change from the
/// minimal model back to the rational one.
fn settle_model<F: FiniteField>(
    kt: &K<F>,
    a: &RatFun<F>,
    b: &RatFun<F>,
) -> Result<(WeierstrassK3<F>, CoordinateMap<F>)> {
    let base = kt.base.clone();
    let g = a.den.gcd(&b.den);
    let d = a.den.div_exact(&g)?.mul(&b.den);
    let ap = kt.mul(a, &kt.from_poly(d.pow(4))).to_poly()?;
    let bp = kt.mul(b, &kt.from_poly(d.pow(6))).to_poly()?;
    let big = WeierstrassK3 {
        field: base.clone(),
        a: ap,
        b: bp,
    };
    let (min, v) = minimalize(&big)?;
    // cleared coords from minimal: x -> v^2 x, then rational from cleared:
    // x -> x/d^2; together x -> v^2 x / d^2, y -> v^3 y / d^3
    let vm = MPoly::from_t_poly(&v);
    let dm = MPoly::from_t_poly(&d);
    let x = MPoly::var(base.clone(), 0);
    let y = MPoly::var(base.clone(), 1);
    let map = CoordinateMap {
        x: MRat {
            num: vm.pow(2).mul(&x),
            den: dm.pow(2),
        },
        y: MRat {
            num: vm.pow(3).mul(&y),
            den: dm.pow(3),
        },
        t: MRat::var(base, 2),
    };
    Ok((min, map))
}

/// Convert y^2 = q(x) (degree at most 4 over F(t)) with the rational point
/// (x0, y0) into a minimal Weierstrass model. Returns the model and the
/// coordinate change from it back to the quartic model.
pub fn quartic_to_weierstrass<F: FiniteField>(
    q: &Poly<K<F>>,
    x0: &RatFun<F>,
    y0: &RatFun<F>,
) -> Result<(WeierstrassK3<F>, CoordinateMap<F>)> {
    let kt = q.field.clone();
    let base = kt.base.clone();
    if q.deg() > 4 || q.deg() < 3 {
        return Err(Error::Unsupported(format!(
            "right-hand side has degree {}, expected 3 or 4",
            q.deg()
        )));
    }
    let x0e = x0.clone();
    let y0e = y0.clone();
    let qx0 = q.eval(&x0e);
    if !kt.is_zero(&kt.sub(&qx0, &kt.mul(&y0e, &y0e))) {
        return Err(Error::Domain("marked point does not lie on the curve".into()));
    }
    if base.is_zero(&base.from_i64(2)) {
        return Err(Error::Unsupported("characteristic 2 not supported".into()));
    }

    // move the marked point to x = infinity: g(x) = x^4 q(x0 + 1/x) has
    // leading coefficient q(x0) = y0^2
    let lin = Poly::new(kt.clone(), vec![kt.one(), x0e.clone()]);
    let mut g = Poly::zero(kt.clone());
    for (i, c) in q.coeffs().iter().enumerate() {
        let term = lin.pow(i as u64).scale(c);
        let mut shifted = vec![kt.zero(); 4 - i];
        shifted.extend_from_slice(term.coeffs());
        g = g.add(&Poly::new(kt.clone(), shifted));
    }
    let x0m = mrat_const(&x0e);
    let x = MPoly::var(base.clone(), 0);
    let y = MPoly::var(base.clone(), 1);
    let m1 = CoordinateMap {
        x: MRat {
            num: x0m.num.mul(&x).add(&x0m.den),
            den: x0m.den.mul(&x),
        },
        y: MRat {
            num: y.clone(),
            den: x.mul(&x),
        },
        t: MRat::var(base.clone(), 2),
    };

    if kt.is_zero(&y0e) {
        // two-torsion marked point: g is already a cubic
        let (a, b, m2) = depress_cubic(&g)?;
        let (w, m3) = settle_model(&kt, &a, &b)?;
        return Ok((w, m3.then(&m2).then(&m1)));
    }

    // complete the square against s x^2 + p x + r, s = y0:
    // g - (s x^2 + p x + r)^2 = beta x + gamma
    let s = y0e;
    let gc = g.coeffs();
    let two_s_inv = kt
        .inv(&kt.mul(&kt.from_base(base.from_i64(2)), &s))
        .unwrap();
    let p = kt.mul(&gc[3], &two_s_inv);
    let r = kt.mul(&kt.sub(&gc[2], &kt.mul(&p, &p)), &two_s_inv);
    let sq = Poly::new(kt.clone(), vec![r.clone(), p.clone(), s.clone()]);
    let rem = g.sub(&sq.mul(&sq));
    if rem.deg() > 1 {
        return Err(Error::Internal("square completion left a quadratic term".into()));
    }
    let beta = rem.coeffs().get(1).cloned().unwrap_or_else(|| kt.zero());
    let gamma = rem.coeffs().first().cloned().unwrap_or_else(|| kt.zero());

    // y_old = y + s x^2 + p x + r
    let (sq_num, sq_den) = clear_x_poly(&sq)?;
    let sq_den_m = MPoly::from_t_poly(&sq_den);
    let m2 = CoordinateMap {
        x: MRat::var(base.clone(), 0),
        y: MRat {
            num: y.mul(&sq_den_m).add(&sq_num),
            den: sq_den_m,
        },
        t: MRat::var(base.clone(), 2),
    };

    // w^2 + 2(s x^2 + p x + r) w = beta x + gamma is long Weierstrass
    // V^2 + a1 X V + a3 V = X^3 + a2 X^2 + a4 X under
    // x_old = -V/(2sX), y_old = -X/(2s)
    let two = kt.from_base(base.from_i64(2));
    let four = kt.from_base(base.from_i64(4));
    let a1 = kt.neg(&kt.mul(&two, &p));
    let a3 = kt.neg(&kt.mul(&kt.mul(&two, &s), &beta));
    let a2 = kt.neg(&kt.mul(&kt.mul(&four, &s), &r));
    let a4 = kt.neg(&kt.mul(&kt.mul(&four, &kt.mul(&s, &s)), &gamma));
    let two_s = kt.mul(&two, &s);
    let two_s_m = mrat_const(&two_s);
    let m3 = CoordinateMap {
        x: MRat {
            num: y.neg().mul(&two_s_m.den),
            den: two_s_m.num.mul(&x),
        },
        y: MRat {
            num: x.neg().mul(&two_s_m.den),
            den: two_s_m.num,
        },
        t: MRat::var(base.clone(), 2),
    };

    // complete the square in V: Y = V + (a1 X + a3)/2
    let half = kt.inv(&two).unwrap();
    let h = Poly::new(
        kt.clone(),
        vec![kt.mul(&a3, &half), kt.mul(&a1, &half)],
    );
    let rhs = Poly::new(kt.clone(), vec![kt.zero(), a4, a2, kt.one()]).add(&h.mul(&h));
    let (h_num, h_den) = clear_x_poly(&h)?;
    let h_den_m = MPoly::from_t_poly(&h_den);
    let m4 = CoordinateMap {
        x: MRat::var(base.clone(), 0),
        y: MRat {
            num: y.mul(&h_den_m).sub(&h_num),
            den: h_den_m,
        },
        t: MRat::var(base.clone(), 2),
    };

    let (a, b, m5) = depress_cubic(&rhs)?;
    let (w, m6) = settle_model(&kt, &a, &b)?;
    Ok((w, m6.then(&m5).then(&m4).then(&m3).then(&m2).then(&m1)))
}

/// Base change of a Weierstrass model by t -> m(t), followed by clearing
/// denominators and minimalization. Returns the new model and the
/// coordinate change from it back to the input model.
pub fn base_change<F: FiniteField>(
    w: &WeierstrassK3<F>,
    m: &RatFun<F>,
) -> Result<(WeierstrassK3<F>, CoordinateMap<F>)> {
    let base = w.field.clone();
    let kt = RatFunField::new(base.clone());
    let horner = |p: &Poly<F>| -> RatFun<F> {
        let mut acc = kt.zero();
        for c in p.coeffs().iter().rev() {
            acc = kt.add(&kt.mul(&acc, m), &kt.from_base(c.clone()));
        }
        acc
    };
    let a1 = horner(&w.a);
    let b1 = horner(&w.b);
    let (out, sc) = settle_model(&kt, &a1, &b1)?;
    let map = CoordinateMap {
        x: sc.x,
        y: sc.y,
        t: mrat_const(m),
    };
    Ok((out, map))
}
