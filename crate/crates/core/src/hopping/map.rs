//! Coordinate changes between affine charts of elliptic surfaces, given by
//! rational expressions for the images of x, y, t.

use super::mpoly::{parse_mrat, prem_y, MPoly, MRat};
use crate::error::{Error, Result};
use crate::exact::field::Field;

/// A rational map of the ambient (x, y, t)-space: points of the source
/// model satisfy the source equation, and substituting the three component
/// expressions into the target equation yields a multiple of the source
/// equation. An optional inverse allows exact round-trip checks.
#[derive(Clone, Debug)]
pub struct CoordinateMap<F: Field> {
    pub x: MRat<F>,
    pub y: MRat<F>,
    pub t: MRat<F>,
}

impl<F: Field> CoordinateMap<F> {
    pub fn identity(field: F) -> Self {
        CoordinateMap {
            x: MRat::var(field.clone(), 0),
            y: MRat::var(field.clone(), 1),
            t: MRat::var(field, 2),
        }
    }

    pub fn parse(field: &F, x: &str, y: &str, t: &str) -> Result<Self> {
        Ok(CoordinateMap {
            x: parse_mrat(field, x)?,
            y: parse_mrat(field, y)?,
            t: parse_mrat(field, t)?,
        })
    }

    /// Substitute the map into an equation and clear denominators.
    /// If E cuts out the image model, the result vanishes on the source.
    pub fn pull_back(&self, eq: &MPoly<F>) -> MPoly<F> {
        eq.subst([&self.x, &self.y, &self.t]).num
    }

    /// Check that points satisfying `source` = 0 map to points satisfying
    /// `target` = 0, i.e. that `source` divides the cleared pullback of
    /// `target` (via a pseudo-remainder in y).
    pub fn maps_onto(&self, source: &MPoly<F>, target: &MPoly<F>) -> bool {
        let pulled = self.pull_back(target);
        if pulled.is_zero() {
            return true;
        }
        if source.degree(1) == 0 {
            return false;
        }
        prem_y(&pulled, source).is_zero()
    }

    /// Composition: apply `self` first, then `next` (so the composite's
    /// components are those of `next` evaluated at `self`).
    pub fn then(&self, next: &CoordinateMap<F>) -> CoordinateMap<F> {
        let comp = |r: &MRat<F>| -> MRat<F> {
            let num = r.num.subst([&self.x, &self.y, &self.t]);
            let den = r.den.subst([&self.x, &self.y, &self.t]);
            MRat {
                num: num.num.mul(&den.den),
                den: num.den.mul(&den.num),
            }
        };
        CoordinateMap {
            x: comp(&next.x),
            y: comp(&next.y),
            t: comp(&next.t),
        }
    }
}

/// Parse a map from a JSON object with string fields "x", "y", "t".
pub fn map_from_json<F: Field>(field: &F, v: &serde_json::Value) -> Result<CoordinateMap<F>> {
    let get = |k: &str| -> Result<&str> {
        v.get(k)
            .and_then(|s| s.as_str())
            .ok_or_else(|| Error::Parse(format!("coordinate map needs string field {k}")))
    };
    CoordinateMap::parse(field, get("x")?, get("y")?, get("t")?)
}
