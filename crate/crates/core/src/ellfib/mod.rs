//! Elliptic K3 surfaces over function fields K(t): short Weierstrass
//! models, Tate fiber classification, the generic-fiber group law,
//! intersection and height pairings, fiberwise trace of multisections,
//! and the finite-field family search for extra sections.

pub mod fibers;
pub mod group;
pub mod height;
pub mod search;
pub mod trace;

pub use fibers::{discriminant_poly, euler_characteristic, kodaira_fibers, minimalize, KodairaFiber, KodairaType, Place};
pub use group::{add_sections, is_on_curve, negate_section};
pub use height::{height_pairing, mwl_gram, section_intersection_O};
pub use search::{search_family_sections, sqrt_series, FamilyHit};
pub use trace::{fiberwise_trace, MultiSection};

use crate::error::{Error, Result};
use crate::exact::field::{Field, Ring};
use crate::exact::poly::Poly;
use crate::exact::ratfun::{RatFun, RatFunField};

/// Short Weierstrass model y^2 = x^3 + a(t) x + b(t) of an elliptic K3
/// surface over K(t); deg a <= 8, deg b <= 12.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassK3<F: Field> {
    pub field: F,
    pub a: Poly<F>,
    pub b: Poly<F>,
}

impl<F: Field> WeierstrassK3<F> {
    pub fn new(field: F, a: Poly<F>, b: Poly<F>) -> Result<Self> {
        let w = WeierstrassK3 { field, a, b };
        if w.a.deg() > 8 || w.b.deg() > 12 {
            return Err(Error::Domain("coefficient degrees exceed the K3 bounds".into()));
        }
        if discriminant_poly(&w)?.is_zero() {
            return Err(Error::Domain("discriminant vanishes identically".into()));
        }
        Ok(w)
    }

    pub fn function_field(&self) -> RatFunField<F> {
        RatFunField::new(self.field.clone())
    }

    /// x^3 + a x + b as a polynomial in x over K(t).
    pub fn rhs(&self) -> Poly<RatFunField<F>> {
        let k = self.function_field();
        Poly::new(
            k.clone(),
            vec![
                RatFun::from_poly(self.b.clone()),
                RatFun::from_poly(self.a.clone()),
                k.zero(),
                k.one(),
            ],
        )
    }
}

/// A section of the fibration: the zero section or an affine point with
/// coordinates in K(t).
#[derive(Clone, Debug, PartialEq)]
pub enum Section<F: Field> {
    Zero,
    Point { x: RatFun<F>, y: RatFun<F> },
}

impl<F: Field> Section<F> {
    pub fn point(x: RatFun<F>, y: RatFun<F>) -> Self {
        Section::Point { x, y }
    }

    pub fn from_polys(x: Poly<F>, y: Poly<F>) -> Self {
        Section::Point { x: RatFun::from_poly(x), y: RatFun::from_poly(y) }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Section::Zero)
    }

    pub fn xy(&self) -> Result<(&RatFun<F>, &RatFun<F>)> {
        match self {
            Section::Zero => Err(Error::Domain("zero section has no affine coordinates".into())),
            Section::Point { x, y } => Ok((x, y)),
        }
    }
}
