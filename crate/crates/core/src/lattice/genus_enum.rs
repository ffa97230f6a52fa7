//! Genus enumeration of definite lattices by breadth-first search on the
//! p-neighbor graph, with isometry-class deduplication and the mass sum
//! over automorphism orders.

use super::isometry::{automorphism_count, is_isometric_definite};
use super::neighbor::{neighbor_seeds, p_neighbor};
use super::IntegralLattice;
use crate::error::{Error, Result};
use crate::exact::enumerate::norm_histogram;
use crate::exact::lll::lll_reduce;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct GenusClassList {
    pub representatives: Vec<IntegralLattice>,
    pub aut_orders: Vec<BigInt>,
    pub mass: BigRational,
}

impl GenusClassList {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "classes": self.representatives.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
            "aut_orders": self.aut_orders.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "mass": self.mass.to_string(),
        })
    }
}

fn lll_lattice(l: &IntegralLattice) -> IntegralLattice {
    let (reduced, _) = lll_reduce(&l.gram, None);
    IntegralLattice { gram: reduced, labels: None }
}

/// All isometry classes reachable from L by p-neighbor steps, i.e. the
/// (spinor) genus of a definite lattice, with the mass sum 1/|Aut|.
/// Negative definite input is negated internally and negated back on
/// output.
pub fn genus_enumerate(l: &IntegralLattice, p: u64) -> Result<GenusClassList> {
    let negate = l.is_negative_definite();
    let pos = if negate { l.negated() } else { l.clone() };
    if !pos.is_positive_definite() {
        return Err(Error::Domain("genus enumeration needs a definite lattice".into()));
    }
    if pos.rank() < 3 {
        return Err(Error::Domain("neighbor construction needs rank >= 3".into()));
    }
    if (pos.det() % BigInt::from(p)).is_zero() {
        return Err(Error::Domain("p must not divide the determinant".into()));
    }
    let mut reps: Vec<IntegralLattice> = vec![lll_lattice(&pos)];
    // histogram of vector norms up to the max diagonal, as a cheap prefilter
    let hist_of = |l: &IntegralLattice| -> Result<Vec<(BigInt, usize)>> {
        let bound = l.gram.iter().enumerate().map(|(i, r)| r[i].clone()).max().unwrap();
        norm_histogram(&l.gram, &bound)
    };
    let mut hists = vec![hist_of(&reps[0])?];
    let mut head = 0;
    while head < reps.len() {
        let cur = reps[head].clone();
        for seed in neighbor_seeds(&cur, p)? {
            let nb = lll_lattice(&p_neighbor(&cur, p, &seed)?);
            let h = hist_of(&nb)?;
            let mut known = false;
            for (i, rep) in reps.iter().enumerate() {
                if hists[i] == h && is_isometric_definite(rep, &nb)?.is_some() {
                    known = true;
                    break;
                }
            }
            if !known {
                reps.push(nb);
                hists.push(h);
            }
        }
        head += 1;
    }
    let aut_orders: Vec<BigInt> =
        reps.iter().map(automorphism_count).collect::<Result<Vec<_>>>()?;
    let mut mass = BigRational::zero();
    for a in &aut_orders {
        mass += BigRational::new(BigInt::from(1), a.clone());
    }
    let representatives =
        if negate { reps.iter().map(|r| r.negated()).collect() } else { reps };
    Ok(GenusClassList { representatives, aut_orders, mass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::same_genus;

    #[test]
    fn cubic_lattice_genus_is_a_single_class() {
        let l = IntegralLattice::from_i64(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let g = genus_enumerate(&l, 3).unwrap();
        assert_eq!(g.class_count(), 1);
        assert_eq!(g.aut_orders[0], BigInt::from(48));
        assert_eq!(g.mass, BigRational::new(BigInt::from(1), BigInt::from(48)));
    }

    #[test]
    fn representatives_share_the_genus_and_closure_holds() {
        let l = IntegralLattice::from_i64(&[vec![2, 1, 0], vec![1, 2, 0], vec![0, 0, 6]]).unwrap();
        let g = genus_enumerate(&l, 5).unwrap();
        for rep in &g.representatives {
            assert!(same_genus(&rep.gram, &l.gram).unwrap());
        }
        // closure under one more neighbor step
        for rep in &g.representatives {
            for seed in neighbor_seeds(rep, 5).unwrap().into_iter().take(3) {
                let nb = p_neighbor(rep, 5, &seed).unwrap();
                assert!(g
                    .representatives
                    .iter()
                    .any(|r| is_isometric_definite(r, &nb).unwrap().is_some()));
            }
        }
    }

    #[test]
    fn negative_definite_input_round_trips_sign() {
        let l = IntegralLattice::from_i64(&[vec![-2, 1, 0], vec![1, -2, 0], vec![0, 0, -2]])
            .unwrap();
        let g = genus_enumerate(&l, 5).unwrap();
        assert!(g.representatives.iter().all(|r| r.is_negative_definite()));
    }

    #[test]
    fn indefinite_rejected() {
        let u3 = IntegralLattice::from_i64(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 2]]).unwrap();
        assert!(genus_enumerate(&u3, 3).is_err());
    }
}
