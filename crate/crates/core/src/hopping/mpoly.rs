//! Sparse trivariate polynomials in (x, y, t) over a field, with a parser
//! for human-readable sums of monomials. These carry the coordinate maps
//! between Weierstrass models; all heavy univariate work happens after
//! specializing to a function field.

use crate::error::{Error, Result};
use crate::exact::field::Field;
use crate::exact::poly::Poly;
use std::collections::BTreeMap;

/// Exponent vector [dx, dy, dt].
pub type Exps = [u32; 3];

#[derive(Clone, Debug)]
pub struct MPoly<F: Field> {
    pub field: F,
    pub terms: BTreeMap<Exps, F::Elem>,
}

impl<F: Field> PartialEq for MPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> MPoly<F> {
    pub fn zero(field: F) -> Self {
        MPoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert([0, 0, 0], c);
        }
        MPoly { field, terms }
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        Self::constant(field, c)
    }

    /// 0 = x, 1 = y, 2 = t.
    pub fn var(field: F, i: usize) -> Self {
        let mut e = [0, 0, 0];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, field.one());
        MPoly { field, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn insert(&mut self, e: Exps, c: F::Elem) {
        let cur = self.terms.remove(&e).unwrap_or_else(|| self.field.zero());
        let s = self.field.add(&cur, &c);
        if !self.field.is_zero(&s) {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MPoly::zero(self.field.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.insert(e, self.field.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = MPoly::zero(self.field.clone());
        for (e, v) in &self.terms {
            out.insert(*e, self.field.mul(v, c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = MPoly::one(self.field.clone());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Lift a univariate polynomial in t.
    pub fn from_t_poly(p: &Poly<F>) -> Self {
        let mut out = MPoly::zero(p.field.clone());
        for (i, c) in p.coeffs().iter().enumerate() {
            if !p.field.is_zero(c) {
                out.insert([0, 0, i as u32], c.clone());
            }
        }
        out
    }

    /// Evaluate with values for (x, y, t) in an arbitrary field, given an
    /// embedding of coefficients.
    pub fn eval_in<G: Field>(
        &self,
        g: &G,
        emb: impl Fn(&F::Elem) -> G::Elem,
        vals: [&G::Elem; 3],
    ) -> G::Elem {
        // cache powers of each variable up to its max degree
        let mut pows: Vec<Vec<G::Elem>> = Vec::with_capacity(3);
        for i in 0..3 {
            let d = self.degree(i) as usize;
            let mut v = Vec::with_capacity(d + 1);
            v.push(g.one());
            for j in 0..d {
                let last = v[j].clone();
                v.push(g.mul(&last, vals[i]));
            }
            pows.push(v);
        }
        let mut acc = g.zero();
        for (e, c) in &self.terms {
            let mut m = emb(c);
            for i in 0..3 {
                m = g.mul(&m, &pows[i][e[i] as usize]);
            }
            acc = g.add(&acc, &m);
        }
        acc
    }

    /// Substitute rational expressions for (x, y, t).
    pub fn subst(&self, vals: [&MRat<F>; 3]) -> MRat<F> {
        let dx = self.degree(0);
        let dy = self.degree(1);
        let dt = self.degree(2);
        // clear denominators: multiply by prod den_i^deg_i
        let mut num = MPoly::zero(self.field.clone());
        let degs = [dx, dy, dt];
        for (e, c) in &self.terms {
            let mut m = MPoly::constant(self.field.clone(), c.clone());
            for i in 0..3 {
                m = m.mul(&vals[i].num.pow(e[i]));
                m = m.mul(&vals[i].den.pow(degs[i] - e[i]));
            }
            num = num.add(&m);
        }
        let mut den = MPoly::one(self.field.clone());
        for i in 0..3 {
            den = den.mul(&vals[i].den.pow(degs[i]));
        }
        MRat { num, den }
    }
}

impl<F: Field> MPoly<F> {
    /// Coefficients as polynomials in (x, t), index i = coefficient of y^i.
    pub fn y_coeffs(&self) -> Vec<MPoly<F>> {
        let d = self.degree(1) as usize;
        let mut out = vec![MPoly::zero(self.field.clone()); d + 1];
        for (e, c) in &self.terms {
            out[e[1] as usize].insert([e[0], 0, e[2]], c.clone());
        }
        out
    }

    pub fn from_y_coeffs(field: F, v: &[MPoly<F>]) -> Self {
        let mut out = MPoly::zero(field);
        for (i, p) in v.iter().enumerate() {
            for (e, c) in &p.terms {
                out.insert([e[0], i as u32, e[2]], c.clone());
            }
        }
        out
    }
}

/// Pseudo-remainder of n by d, viewed as polynomials in y with coefficients
/// in F[x, t]. Zero iff d divides lc(d)^k * n; for an irreducible curve
/// equation d of positive y-degree this certifies d | n.
pub fn prem_y<F: Field>(n: &MPoly<F>, d: &MPoly<F>) -> MPoly<F> {
    let field = n.field.clone();
    let mut nc = n.y_coeffs();
    let dc = d.y_coeffs();
    let dd = dc.len() - 1;
    assert!(dd >= 1, "divisor must involve y");
    let lead = dc[dd].clone();
    while nc.len() - 1 >= dd && !nc.iter().all(|c| c.is_zero()) {
        let dn = nc.len() - 1;
        if nc[dn].is_zero() {
            nc.pop();
            continue;
        }
        let top = nc[dn].clone();
        // n <- lead * n - top * y^(dn-dd) * d
        for c in nc.iter_mut() {
            *c = c.mul(&lead);
        }
        for (i, dci) in dc.iter().enumerate() {
            let idx = i + dn - dd;
            nc[idx] = nc[idx].sub(&top.mul(dci));
        }
        debug_assert!(nc[dn].is_zero());
        nc.pop();
    }
    MPoly::from_y_coeffs(field, &nc)
}

/// An unreduced ratio of trivariate polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct MRat<F: Field> {
    pub num: MPoly<F>,
    pub den: MPoly<F>,
}

impl<F: Field> MRat<F> {
    pub fn from_poly(p: MPoly<F>) -> Self {
        let den = MPoly::one(p.field.clone());
        MRat { num: p, den }
    }

    pub fn var(field: F, i: usize) -> Self {
        Self::from_poly(MPoly::var(field, i))
    }
}

/// Parse a sum of products like "-13t^7 + (26t + 24)x^7 - y + 8".
/// Coefficients are integers (mapped through the field), juxtaposition is
/// multiplication, exponents use ^, parentheses group subexpressions.
pub fn parse_mpoly<F: Field>(field: &F, input: &str) -> Result<MPoly<F>> {
    let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0usize;
    let out = parse_sum(field, &s, &mut pos)?;
    if pos != s.len() {
        return Err(Error::Parse(format!(
            "unexpected character at offset {pos} in polynomial expression"
        )));
    }
    Ok(out)
}

fn parse_sum<F: Field>(field: &F, s: &[char], pos: &mut usize) -> Result<MPoly<F>> {
    let mut out = MPoly::zero(field.clone());
    loop {
        let mut sign = 1i64;
        while *pos < s.len() && (s[*pos] == '+' || s[*pos] == '-') {
            if s[*pos] == '-' {
                sign = -sign;
            }
            *pos += 1;
        }
        if *pos >= s.len() || s[*pos] == ')' {
            if sign == 1 && out.is_zero() && *pos >= s.len() {
                // empty input parses to zero only if nothing was consumed
            }
            return Ok(out);
        }
        let term = parse_product(field, s, pos)?;
        let signed = if sign == 1 { term } else { term.neg() };
        out = out.add(&signed);
        if *pos < s.len() && s[*pos] != '+' && s[*pos] != '-' && s[*pos] != ')' {
            return Err(Error::Parse(format!(
                "unexpected character at offset {} in polynomial expression",
                *pos
            )));
        }
        if *pos >= s.len() || s[*pos] == ')' {
            return Ok(out);
        }
    }
}

fn parse_product<F: Field>(field: &F, s: &[char], pos: &mut usize) -> Result<MPoly<F>> {
    let mut acc = MPoly::one(field.clone());
    let mut saw = false;
    while *pos < s.len() {
        let c = s[*pos];
        if c.is_ascii_digit() {
            let start = *pos;
            while *pos < s.len() && s[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let v: i64 = s[start..*pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("integer literal out of range".into()))?;
            acc = acc.scale(&field.from_i64(v));
            saw = true;
        } else if c == 'x' || c == 'y' || c == 't' {
            let vi = match c {
                'x' => 0,
                'y' => 1,
                _ => 2,
            };
            *pos += 1;
            let e = parse_exponent(s, pos)?;
            let mut m = [0u32, 0, 0];
            m[vi] = e;
            let mut v = MPoly::zero(field.clone());
            v.insert(m, field.one());
            acc = acc.mul(&v);
            saw = true;
        } else if c == '(' {
            *pos += 1;
            let inner = parse_sum(field, s, pos)?;
            if *pos >= s.len() || s[*pos] != ')' {
                return Err(Error::Parse("unbalanced parenthesis".into()));
            }
            *pos += 1;
            let e = parse_exponent(s, pos)?;
            acc = acc.mul(&inner.pow(e));
            saw = true;
        } else if c == '*' {
            *pos += 1;
        } else {
            break;
        }
    }
    if !saw {
        return Err(Error::Parse("empty term in polynomial expression".into()));
    }
    Ok(acc)
}

fn parse_exponent(s: &[char], pos: &mut usize) -> Result<u32> {
    if *pos < s.len() && s[*pos] == '^' {
        *pos += 1;
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        s[start..*pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse("bad exponent".into()))
    } else {
        Ok(1)
    }
}

/// Parse "num/den" or a bare polynomial; the split is on a top-level '/'
/// between parenthesized groups, e.g. "(a + b)/(c)".
pub fn parse_mrat<F: Field>(field: &F, input: &str) -> Result<MRat<F>> {
    let s = input.trim();
    if let Some((numpart, denpart)) = split_fraction(s) {
        let num = parse_mpoly(field, &numpart)?;
        let den = parse_mpoly(field, &denpart)?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(MRat { num, den })
    } else {
        Ok(MRat::from_poly(parse_mpoly(field, s)?))
    }
}

fn split_fraction(s: &str) -> Option<(String, String)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                return Some((s[..i].to_string(), s[i + 1..].to_string()));
            }
            _ => {}
        }
    }
    None
}
