//! From an elliptic parameter on a Weierstrass model to a genus-one curve
//! over the new base, and on to a quartic model by completing the square.
//!
//! The parameter u must have degree at most one in x and y. Solving
//! u = num/den for y gives a coordinate change (new to old coordinates)
//! x -> y, t -> x, y -> solved expression; pulling the Weierstrass equation
//! back along it and splitting off the spurious graph component cut out by
//! the parameter's x-linear relation leaves the genus-one equation.

use super::map::CoordinateMap;
use super::mpoly::{MPoly, MRat};
use crate::ellfib::WeierstrassK3;
use crate::error::{Error, Result};
use crate::exact::field::Field;
use crate::exact::poly::Poly;
use crate::exact::ratfun::RatFunField;

/// The parameter u = (n00 + n10 x + n01 y)/(d00 + d10 x + d01 y) with
/// coefficients in F[t].
pub struct ParamDecomp<F: Field> {
    pub n00: Poly<F>,
    pub n10: Poly<F>,
    pub n01: Poly<F>,
    pub d00: Poly<F>,
    pub d10: Poly<F>,
    pub d01: Poly<F>,
}

fn linear_parts<F: Field>(m: &MPoly<F>) -> Result<(Poly<F>, Poly<F>, Poly<F>)> {
    let field = m.field.clone();
    let mut parts = vec![vec![]; 3];
    for (e, c) in &m.terms {
        let slot = match (e[0], e[1]) {
            (0, 0) => 0,
            (1, 0) => 1,
            (0, 1) => 2,
            _ => {
                return Err(Error::Unsupported(
                    "elliptic parameter must be linear in x and y".into(),
                ))
            }
        };
        let v: &mut Vec<F::Elem> = &mut parts[slot];
        if v.len() <= e[2] as usize {
            v.resize(e[2] as usize + 1, field.zero());
        }
        v[e[2] as usize] = c.clone();
    }
    let mut it = parts.into_iter().map(|v| Poly::new(field.clone(), v));
    Ok((it.next().unwrap(), it.next().unwrap(), it.next().unwrap()))
}

pub fn decompose_parameter<F: Field>(u: &MRat<F>) -> Result<ParamDecomp<F>> {
    let (n00, n10, n01) = linear_parts(&u.num)?;
    let (d00, d10, d01) = linear_parts(&u.den)?;
    Ok(ParamDecomp { n00, n10, n01, d00, d10, d01 })
}

/// Lift a polynomial in the OLD base coordinate t to a trivariate
/// polynomial in the NEW x (the roles of base and fiber swap).
fn t_to_x<F: Field>(p: &Poly<F>) -> MPoly<F> {
    let mut out = MPoly::zero(p.field.clone());
    for (i, c) in p.coeffs().iter().enumerate() {
        if !p.field.is_zero(c) {
            out.insert([i as u32, 0, 0], c.clone());
        }
    }
    out
}

/// The coordinate change from the genus-one model (x = old t, y = old x,
/// t = u) back to the Weierstrass model: x -> y, t -> x, and y solved from
/// u * den = num.
pub fn solve_map<F: Field>(field: &F, p: &ParamDecomp<F>) -> Result<CoordinateMap<F>> {
    let t = MPoly::var(field.clone(), 2);
    let y = MPoly::var(field.clone(), 1);
    // N0, D0 with old x renamed to y and old t renamed to x
    let n0 = t_to_x(&p.n00).add(&t_to_x(&p.n10).mul(&y));
    let d0 = t_to_x(&p.d00).add(&t_to_x(&p.d10).mul(&y));
    let num = n0.sub(&t.mul(&d0));
    let den = t.mul(&t_to_x(&p.d01)).sub(&t_to_x(&p.n01));
    if den.is_zero() {
        return Err(Error::Unsupported(
            "parameter does not involve y; cannot solve the fiber coordinate".into(),
        ));
    }
    Ok(CoordinateMap {
        x: MRat::var(field.clone(), 1),
        y: MRat { num, den },
        t: MRat::var(field.clone(), 0),
    })
}

/// View a y-free trivariate polynomial as a polynomial in x over F(t).
pub fn to_x_poly<F: Field>(m: &MPoly<F>) -> Result<Poly<RatFunField<F>>> {
    if m.degree(1) != 0 {
        return Err(Error::Internal("expected a polynomial free of y".into()));
    }
    let base = m.field.clone();
    let kt = RatFunField::new(base.clone());
    let d = m.degree(0) as usize;
    let mut coeffs: Vec<Vec<F::Elem>> = vec![vec![]; d + 1];
    for (e, c) in &m.terms {
        let v = &mut coeffs[e[0] as usize];
        if v.len() <= e[2] as usize {
            v.resize(e[2] as usize + 1, base.zero());
        }
        v[e[2] as usize] = c.clone();
    }
    Ok(Poly::new(
        kt.clone(),
        coeffs
            .into_iter()
            .map(|v| kt.from_poly(Poly::new(base.clone(), v)))
            .collect(),
    ))
}

/// Rebuild a y-free trivariate polynomial from a polynomial in x whose
/// coefficients must themselves be polynomials in t.
pub fn from_x_poly<F: Field>(p: &Poly<RatFunField<F>>) -> Result<MPoly<F>> {
    let base = p.field.base.clone();
    let mut out = MPoly::zero(base);
    for (i, c) in p.coeffs().iter().enumerate() {
        let cp = c.to_poly()?;
        for (j, v) in cp.coeffs().iter().enumerate() {
            if !cp.field.is_zero(v) {
                out.insert([i as u32, 0, j as u32], v.clone());
            }
        }
    }
    Ok(out)
}

/// Exact division of y-free trivariate polynomials; `None` if not exact.
pub fn div_exact_xt<F: Field>(a: &MPoly<F>, b: &MPoly<F>) -> Option<MPoly<F>> {
    let pa = to_x_poly(a).ok()?;
    let pb = to_x_poly(b).ok()?;
    let (q, r) = pa.divrem(&pb).ok()?;
    if !r.is_zero() {
        return None;
    }
    from_x_poly(&q).ok()
}

/// Greatest common divisor of the t-coefficients of a y-free polynomial.
pub fn t_content<F: Field>(m: &MPoly<F>) -> Poly<F> {
    let base = m.field.clone();
    let mut acc = Poly::zero(base.clone());
    let d = m.degree(0);
    for i in 0..=d {
        let mut v: Vec<F::Elem> = vec![];
        for (e, c) in &m.terms {
            if e[0] == i {
                if v.len() <= e[2] as usize {
                    v.resize(e[2] as usize + 1, base.zero());
                }
                v[e[2] as usize] = c.clone();
            }
        }
        acc = acc.gcd(&Poly::new(base.clone(), v));
    }
    acc
}

/// Pull the Weierstrass equation back along the solve map and split off
/// the spurious component, leaving the genus-one equation (quadratic in
/// y = old x over the new base). Returns the equation and the coordinate
/// change from the genus-one model to the Weierstrass model.
pub fn genus_one_from_parameter<F: Field>(
    w: &WeierstrassK3<F>,
    u: &MRat<F>,
) -> Result<(MPoly<F>, CoordinateMap<F>)> {
    let field = w.field.clone();
    let p = decompose_parameter(u)?;
    let map = solve_map(&field, &p)?;

    // y^2 - x^3 - a(t) x - b(t)
    let x = MPoly::var(field.clone(), 0);
    let y = MPoly::var(field.clone(), 1);
    let eq = y
        .mul(&y)
        .sub(&x.pow(3))
        .sub(&MPoly::from_t_poly(&w.a).mul(&x))
        .sub(&MPoly::from_t_poly(&w.b));
    let pulled = map.pull_back(&eq);

    let pc = pulled.y_coeffs();
    if pc.len() != 4 {
        return Err(Error::Internal(format!(
            "pullback has y-degree {}, expected 3",
            pc.len() as i64 - 1
        )));
    }

    // The spurious root of the pullback, seen as a cubic in y, does not
    // depend on the parameter value: it is the common root in y, over F(x),
    // of all t-coefficients of the pullback.
    let kx = RatFunField::new(field.clone());
    let mut common = Poly::zero(kx);
    for c in t_coeffs(&pulled) {
        common = common.gcd(&to_y_poly(&c)?);
    }
    if common.deg() != 1 {
        return Err(Error::Internal(format!(
            "spurious component has y-degree {}, expected 1",
            common.deg()
        )));
    }
    // common = y + c0/c1 reduced with c1 monic; clear to c1 y + c0
    let s0 = common.coeffs()[0].clone();
    let spurious = t_to_x(&s0.den).mul(&y).add(&t_to_x(&s0.num));

    let quo = divide_out_linear(&pulled, &spurious)
        .ok_or_else(|| Error::Internal("spurious component does not divide the pullback".into()))?;
    Ok((quo, map))
}

/// Coefficients of a trivariate polynomial with respect to t, lowest first.
fn t_coeffs<F: Field>(m: &MPoly<F>) -> Vec<MPoly<F>> {
    let d = m.degree(2) as usize;
    let mut out = vec![MPoly::zero(m.field.clone()); d + 1];
    for (e, c) in &m.terms {
        out[e[2] as usize].insert([e[0], e[1], 0], c.clone());
    }
    out
}

/// View a t-free trivariate polynomial as a polynomial in y over F(x).
fn to_y_poly<F: Field>(m: &MPoly<F>) -> Result<Poly<RatFunField<F>>> {
    let mut swapped = MPoly::zero(m.field.clone());
    for (e, c) in &m.terms {
        if e[2] != 0 {
            return Err(Error::Internal("expected a polynomial free of t".into()));
        }
        swapped.insert([e[1], 0, e[0]], c.clone());
    }
    to_x_poly(&swapped)
}

/// Exact division of `n` by a y-linear polynomial `l`, both trivariate,
/// requiring an exact factorization n = l * q.
fn divide_out_linear<F: Field>(n: &MPoly<F>, l: &MPoly<F>) -> Option<MPoly<F>> {
    let field = n.field.clone();
    let lc = l.y_coeffs();
    if lc.len() != 2 {
        return None;
    }
    let (l0, l1) = (&lc[0], &lc[1]);
    let nc = n.y_coeffs();
    let d = nc.len() - 1;
    if d < 1 {
        return None;
    }
    // synthetic division from the top: q_{d-1} = n_d / l1,
    // q_{i-1} = (n_i - q_i * l0) / l1, remainder n_0 - q_0 * l0 = 0.
    let mut q: Vec<MPoly<F>> = vec![MPoly::zero(field.clone()); d];
    let mut carry = nc[d].clone();
    for i in (1..=d).rev() {
        let qi = div_exact_xt(&carry, l1)?;
        carry = nc[i - 1].sub(&qi.mul(l0));
        q[i - 1] = qi;
    }
    if !carry.is_zero() {
        return None;
    }
    Some(MPoly::from_y_coeffs(field, &q))
}

/// Complete the square in the genus-one equation
/// g2 y^2 + g1 y + g0 = 0 and absorb square factors, producing a quartic
/// right-hand side r(x) over F(t) with y_new^2 = r, plus the coordinate
/// change from the quartic model back to the genus-one model.
pub fn complete_square<F: Field>(
    g: &MPoly<F>,
) -> Result<(Poly<RatFunField<F>>, CoordinateMap<F>)> {
    let field = g.field.clone();
    let kt = RatFunField::new(field.clone());
    let gc = g.y_coeffs();
    if gc.len() != 3 {
        return Err(Error::Unsupported(
            "genus-one equation must be quadratic in y".into(),
        ));
    }
    let g0 = to_x_poly(&gc[0])?;
    let g1 = to_x_poly(&gc[1])?;
    let g2 = to_x_poly(&gc[2])?;
    // g2 (y + g1/(2 g2))^2 = g1^2/(4 g2) - g0, so
    // (2 g2 y + g1)^2 = g1^2 - 4 g0 g2 =: rr
    let four = kt.from_base(field.from_i64(4));
    let rr = g1.mul(&g1).sub(&g0.mul(&g2).scale(&four));
    // absorb the largest square factor s^2 out of rr (in x and in the base)
    let (s, quartic) = split_square_part(&rr)?;
    if quartic.deg() > 4 {
        return Err(Error::Internal(format!(
            "square-reduced right-hand side has degree {} > 4",
            quartic.deg()
        )));
    }
    // y_old = (s y_new - g1) / (2 g2), x_old = x_new, t_old = t_new
    let two = kt.from_base(field.from_i64(2));
    let num_m = x_poly_times_y(&s)?;
    let g1_m = from_x_poly(&g1)?;
    let den_m = from_x_poly(&g2.scale(&two))?;
    Ok((
        quartic,
        CoordinateMap {
            x: MRat::var(field.clone(), 0),
            y: MRat {
                num: num_m.sub(&g1_m),
                den: den_m,
            },
            t: MRat::var(field.clone(), 2),
        },
    ))
}

fn x_poly_times_y<F: Field>(p: &Poly<RatFunField<F>>) -> Result<MPoly<F>> {
    let m = from_x_poly(p)?;
    let y = MPoly::var(m.field.clone(), 1);
    Ok(m.mul(&y))
}

/// Split a polynomial-coefficient p in F[t][x] as p = s^2 * q with both
/// factors polynomial and s of maximal degree (largest square divisor,
/// including squares in the base content). Tame case only: multiplicities
/// must stay below the characteristic, which holds at the scales used here.
fn split_square_part<F: Field>(
    p: &Poly<RatFunField<F>>,
) -> Result<(Poly<RatFunField<F>>, Poly<RatFunField<F>>)> {
    let kt = p.field.clone();
    let base = kt.base.clone();
    let (cont, prim) = content_and_primitive(p)?;
    // square part of the primitive part, over F(t) then recleared
    let sm = square_part_monic(&prim.monic())?;
    let sx = rational_to_primitive(&sm)?;
    let qx = prim.div_exact(&sx.mul(&sx))?;
    // base content split c = cs^2 * cq
    let cs = square_part_monic(&cont)?;
    let cq = cont.div_exact(&cs.mul(&cs))?;
    let s = sx.scale(&kt.from_poly(cs));
    let q = qx.scale(&kt.from_poly(cq));
    let _ = base;
    Ok((s, q))
}

/// s(m) with m = prod A_i^i squarefree-decomposed, s = prod A_i^{floor(i/2)}:
/// recursion s(m) = d / s(d) with d = gcd(m, m').
fn square_part_monic<K: Field>(m: &Poly<K>) -> Result<Poly<K>> {
    let d = m.gcd(&m.derivative());
    if d.deg() <= 0 {
        return Ok(Poly::one(m.field.clone()));
    }
    let inner = square_part_monic(&d)?;
    d.div_exact(&inner)
}

/// Content (gcd of coefficient numerators) and primitive part of a
/// polynomial with polynomial coefficients.
fn content_and_primitive<F: Field>(
    p: &Poly<RatFunField<F>>,
) -> Result<(Poly<F>, Poly<RatFunField<F>>)> {
    let kt = p.field.clone();
    let base = kt.base.clone();
    let mut cont = Poly::zero(base);
    for c in p.coeffs() {
        if !c.is_poly() {
            return Err(Error::Internal("expected polynomial coefficients".into()));
        }
        cont = cont.gcd(&c.to_poly()?);
    }
    let ci = kt
        .inv(&kt.from_poly(cont.clone()))
        .ok_or_else(|| Error::Internal("zero polynomial has no content".into()))?;
    Ok((cont, p.scale(&ci)))
}

/// Clear denominators and content of a monic polynomial over F(t), then
/// normalize so the leading x-coefficient is monic in t.
fn rational_to_primitive<F: Field>(
    p: &Poly<RatFunField<F>>,
) -> Result<Poly<RatFunField<F>>> {
    let kt = p.field.clone();
    let base = kt.base.clone();
    let mut lcm = Poly::one(base.clone());
    for c in p.coeffs() {
        let den = &c.den;
        let g = lcm.gcd(den);
        lcm = lcm.div_exact(&g)?.mul(den);
    }
    let cleared = p.scale(&kt.from_poly(lcm));
    let (_, prim) = content_and_primitive(&cleared)?;
    // make the leading coefficient monic in t
    let lead = prim
        .leading()
        .cloned()
        .unwrap_or_else(|| kt.from_base(base.one()));
    let lp = lead.to_poly()?;
    let lu = lp
        .leading()
        .cloned()
        .unwrap_or_else(|| base.one());
    let lui = kt.from_base(base.inv(&lu).unwrap());
    Ok(prim.scale(&lui))
}
