//! Reconstruction of automorphisms of elliptic K3 surfaces from lattice
//! data: quadratic-lattice genus computations, elliptic fibrations over
//! function fields, 2-neighbor fibration hopping, finite-field section
//! search, and p-adic lifting with algebraic recognition.

pub mod ellfib;
pub mod error;
pub mod exact;
pub mod genus;
pub mod hopping;
pub mod lattice;
pub mod lifting;

pub use error::{Error, Result};

/// Default working prime for the finite-field family search.
pub const SEARCH_PRIME: u64 = 29;
