//! Fibration hopping: coordinate changes between elliptic fibrations on a
//! fixed K3 surface, driven by linear systems of divisors.
//!
//! The pipeline starts from a Weierstrass model and a divisor class of the
//! form O + P + kF, computes the associated linear system, cuts it down by
//! vertical conditions, extracts an elliptic parameter, converts the
//! resulting genus-one curve back to a Weierstrass model, and transports
//! sections through the composed coordinate change.

pub mod genus_one;
pub mod map;
pub mod mpoly;
pub mod weier;

pub use map::{map_from_json, CoordinateMap};
pub use weier::{base_change, quartic_to_weierstrass};
pub use mpoly::{parse_mpoly, parse_mrat, prem_y, MPoly, MRat};
