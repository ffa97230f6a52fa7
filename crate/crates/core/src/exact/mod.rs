//! Exact arithmetic kernel: fields, polynomials, rational functions,
//! matrices, LLL, short-vector enumeration, factorization, and the JSON
//! codecs shared with the CLI.

pub mod enumerate;
pub mod ext;
pub mod factor;
pub mod field;
pub mod fp;
pub mod json;
pub mod lll;
pub mod mat;
pub mod poly;
pub mod rat;
pub mod ratfun;
pub mod zn;

pub use ext::ExtField;
pub use field::{Field, FiniteField, Ring};
pub use fp::Fp;
pub use json::FieldSpec;
pub use mat::{Mat, ZMat};
pub use poly::Poly;
pub use rat::Rationals;
pub use ratfun::{RatFun, RatFunField};
