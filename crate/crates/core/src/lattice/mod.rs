//! Integral quadratic lattices: invariants, discriminant groups,
//! p-neighbors, genus enumeration, definite isometry testing, root
//! sublattices, hyperbolic-plane bookkeeping, Weyl nefification, and
//! spectral data of lattice isometries.

pub mod genus_enum;
pub mod hyperbolic;
pub mod isometry;
pub mod neighbor;
pub mod roots;
pub mod salem;

pub use genus_enum::{genus_enumerate, GenusClassList};
pub use hyperbolic::{hyperbolic_complement, nef_isotropic_search, weyl_nefify};
pub use isometry::{automorphism_count, is_isometric_definite};
pub use neighbor::{neighbor_isotropic, neighbor_seeds, p_neighbor};
pub use roots::{root_sublattice, RootDecomposition};
pub use salem::{dynamical_degree, SalemData};

use crate::error::{Error, Result};
use crate::exact::json::{zmat_from_json, zmat_to_json};
use crate::exact::mat::{smith_with_transform, zmat_det, zmat_mul, zmat_transpose, ZMat};
use crate::genus::signature;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralLattice {
    pub gram: ZMat,
    pub labels: Option<Vec<String>>,
}

impl IntegralLattice {
    pub fn new(gram: ZMat) -> Result<Self> {
        Self::with_labels(gram, None)
    }

    pub fn with_labels(gram: ZMat, labels: Option<Vec<String>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Domain("gram matrix must be symmetric".into()));
                }
            }
        }
        if n > 0 && zmat_det(&gram).is_zero() {
            return Err(Error::Domain("gram matrix must be nondegenerate".into()));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::Domain("label count must match rank".into()));
            }
        }
        Ok(IntegralLattice { gram, labels })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(crate::exact::mat::zmat_from_i64(rows))
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn det(&self) -> BigInt {
        zmat_det(&self.gram)
    }

    pub fn is_even(&self) -> bool {
        crate::genus::is_even(&self.gram)
    }

    pub fn signature(&self) -> Result<(usize, usize)> {
        signature(&self.gram)
    }

    /// Negated Gram, e.g. to feed a negative definite lattice to the
    /// positive definite machinery.
    pub fn negated(&self) -> IntegralLattice {
        let gram = self.gram.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
        IntegralLattice { gram, labels: self.labels.clone() }
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature().map(|(p, m)| m == 0 && p == self.rank()).unwrap_or(false)
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature().map(|(p, m)| p == 0 && m == self.rank()).unwrap_or(false)
    }

    /// Bilinear pairing of two coordinate vectors.
    pub fn pair(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        let n = self.rank();
        assert!(a.len() == n && b.len() == n);
        let mut acc = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                acc += &a[i] * &self.gram[i][j] * &b[j];
            }
        }
        acc
    }

    pub fn norm(&self, a: &[BigInt]) -> BigInt {
        self.pair(a, a)
    }

    pub fn to_json(&self) -> Value {
        match &self.labels {
            Some(l) => json!({"gram": zmat_to_json(&self.gram), "labels": l}),
            None => json!({"gram": zmat_to_json(&self.gram)}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let gram = zmat_from_json(
            v.get("gram").ok_or_else(|| Error::Parse("lattice needs a gram field".into()))?,
        )?;
        let labels = match v.get("labels") {
            None | Some(Value::Null) => None,
            Some(Value::Array(items)) => Some(
                items
                    .iter()
                    .map(|s| {
                        s.as_str()
                            .map(String::from)
                            .ok_or_else(|| Error::Parse("labels must be strings".into()))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            _ => return Err(Error::Parse("labels must be an array".into())),
        };
        Self::with_labels(gram, labels)
    }
}

/// Rank, signature, determinant, evenness.
pub fn invariants(l: &IntegralLattice) -> Result<(usize, (usize, usize), BigInt, bool)> {
    Ok((l.rank(), l.signature()?, l.det(), l.is_even()))
}

/// Discriminant group L'/L: elementary divisors > 1 and the values of the
/// discriminant form on matching generators, as rationals mod 2Z (even L)
/// or mod Z reduced to [0, 2).
pub fn discriminant_group(l: &IntegralLattice) -> Result<(Vec<BigInt>, Vec<BigRational>)> {
    let (d, u, _v) = smith_with_transform(&l.gram);
    let n = l.rank();
    let mut divisors = Vec::new();
    let mut values = Vec::new();
    for i in 0..n {
        let di = d[i][i].clone();
        if di.is_one() {
            continue;
        }
        // generator u_i / d_i in L-coordinates; q = g G g^T mod 2Z
        let g: Vec<BigRational> =
            u[i].iter().map(|x| BigRational::new(x.clone(), di.clone())).collect();
        let mut q = BigRational::zero();
        for a in 0..n {
            for b in 0..n {
                q += &g[a] * BigRational::from_integer(l.gram[a][b].clone()) * &g[b];
            }
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut q = &q - (&q / &two).floor() * &two;
        if q.is_negative() {
            q += &two;
        }
        divisors.push(di);
        values.push(q);
    }
    Ok((divisors, values))
}

/// True iff m^T g m = g (m preserves the form g).
pub fn verify_isometry(m: &ZMat, g: &ZMat) -> bool {
    verify_isometry_between(m, g, g)
}

/// True iff m^T g1 m = g2.
pub fn verify_isometry_between(m: &ZMat, g1: &ZMat, g2: &ZMat) -> bool {
    if m.len() != g1.len() || g1.len() != g2.len() {
        return false;
    }
    zmat_mul(&zmat_mul(&zmat_transpose(m), g1), m) == *g2
}

/// Remove the content of a vector, making it primitive.
pub fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u_lat() -> IntegralLattice {
        IntegralLattice::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn invariants_of_hyperbolic_plane() {
        let (rank, sig, det, even) = invariants(&u_lat()).unwrap();
        assert_eq!((rank, sig, even), (2, (1, 1), true));
        assert_eq!(det, BigInt::from(-1));
    }

    #[test]
    fn discriminant_group_of_u_is_trivial() {
        let (div, vals) = discriminant_group(&u_lat()).unwrap();
        assert!(div.is_empty() && vals.is_empty());
    }

    #[test]
    fn discriminant_group_of_diag_2_2() {
        let l = IntegralLattice::from_i64(&[vec![2, 0], vec![0, 2]]).unwrap();
        let (div, vals) = discriminant_group(&l).unwrap();
        assert_eq!(div, vec![BigInt::from(2), BigInt::from(2)]);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        // generators of norm 1/2 mod 2Z
        assert!(vals.iter().all(|q| {
            let r = q - &half;
            r.is_integer() && r.to_integer().is_even()
        }));
    }

    #[test]
    fn json_roundtrip() {
        let l = IntegralLattice::with_labels(
            crate::exact::mat::zmat_from_i64(&[vec![2, -1], vec![-1, 2]]),
            Some(vec!["a".into(), "b".into()]),
        )
        .unwrap();
        assert_eq!(IntegralLattice::from_json(&l.to_json()).unwrap(), l);
    }

    #[test]
    fn verify_isometry_identity_and_perturbed() {
        let g = crate::exact::mat::zmat_from_i64(&[vec![2, 1], vec![1, 4]]);
        let id = crate::exact::mat::zmat_identity(2);
        assert!(verify_isometry(&id, &g));
        let mut bad = id.clone();
        bad[0][1] = BigInt::one();
        assert!(!verify_isometry(&bad, &g));
    }
}
