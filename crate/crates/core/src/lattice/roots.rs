//! Root sublattices of negative definite lattices: find all norm -2
//! vectors, pick simple roots by a generic linear functional, and read
//! the ADE type off the Dynkin graph.

use super::IntegralLattice;
use crate::error::{Error, Result};
use crate::exact::enumerate::short_vectors;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct RootDecomposition {
    /// ADE components as (letter, rank), sorted.
    pub components: Vec<(char, usize)>,
    /// Simple roots, one fundamental system for the whole root lattice.
    pub simple_roots: Vec<Vec<BigInt>>,
}

impl RootDecomposition {
    /// Human-readable label such as "3A1 + A3 + A4"; empty lattice -> "0".
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let (letter, rank) = self.components[i];
            let mut count = 1;
            while i + count < self.components.len() && self.components[i + count] == (letter, rank) {
                count += 1;
            }
            if count == 1 {
                parts.push(format!("{letter}{rank}"));
            } else {
                parts.push(format!("{count}{letter}{rank}"));
            }
            i += count;
        }
        parts.join(" + ")
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }
}

/// ADE decomposition of the sublattice spanned by the norm -2 vectors of a
/// negative definite lattice, together with a fundamental root basis.
pub fn root_sublattice(l: &IntegralLattice) -> Result<RootDecomposition> {
    if l.rank() > 0 && !l.is_negative_definite() {
        return Err(Error::Domain("root sublattice needs a negative definite lattice".into()));
    }
    let neg = l.negated();
    let mut roots: Vec<Vec<BigInt>> = Vec::new();
    if l.rank() > 0 {
        for (v, norm) in short_vectors(&neg.gram, &BigInt::from(2))? {
            if norm == BigInt::from(2) {
                roots.push(v);
            }
        }
    }
    if roots.is_empty() {
        return Ok(RootDecomposition { components: vec![], simple_roots: vec![] });
    }
    // generic functional: base-B digits make phi injective on the root box
    let maxabs = roots
        .iter()
        .flat_map(|r| r.iter())
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let base = BigInt::from(2) * maxabs + 1;
    let phi = |v: &[BigInt]| {
        let mut acc = BigInt::zero();
        for x in v {
            acc = &acc * &base + x;
        }
        acc
    };
    // positive roots: one of +-r has phi > 0; short_vectors returned one
    // representative per pair, so orient each toward positive phi
    let positives: Vec<Vec<BigInt>> = roots
        .iter()
        .map(|r| {
            if phi(r).is_positive() {
                r.clone()
            } else {
                r.iter().map(|x| -x.clone()).collect()
            }
        })
        .collect();
    let pos_set: std::collections::BTreeSet<Vec<BigInt>> = positives.iter().cloned().collect();
    // simple roots: positive roots that are not sums of two positive roots
    let mut simple: Vec<Vec<BigInt>> = positives
        .iter()
        .filter(|r| {
            !positives.iter().any(|s| {
                let diff: Vec<BigInt> = r.iter().zip(s.iter()).map(|(a, b)| a - b).collect();
                diff.iter().any(|x| !x.is_zero()) && pos_set.contains(&diff)
            })
        })
        .cloned()
        .collect();
    simple.sort();
    // Dynkin graph: vertices = simple roots, edges where the pairing is nonzero
    let m = simple.len();
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && !neg.pair(&simple[i], &simple[j]).is_zero())
                .collect()
        })
        .collect();
    let mut seen = vec![false; m];
    let mut components = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            for &j in &adj[comp[head]] {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            head += 1;
        }
        components.push(classify_component(&comp, &adj)?);
    }
    components.sort();
    Ok(RootDecomposition { components, simple_roots: simple })
}

/// ADE type of one connected Dynkin graph component.
fn classify_component(comp: &[usize], adj: &[Vec<usize>]) -> Result<(char, usize)> {
    let n = comp.len();
    let degree = |v: usize| adj[v].len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.len() {
        0 => Ok(('A', n)),
        1 => {
            let center = branch[0];
            if degree(center) != 3 {
                return Err(Error::Internal("simple-root graph is not of ADE shape".into()));
            }
            // arm lengths counted in vertices, excluding the branch node
            let mut arms: Vec<usize> = adj[center]
                .iter()
                .map(|&first| {
                    let mut len = 1;
                    let mut prev = center;
                    let mut cur = first;
                    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, k) => Ok(('D', k + 3)),
                (1, 2, 2) => Ok(('E', 6)),
                (1, 2, 3) => Ok(('E', 7)),
                (1, 2, 4) => Ok(('E', 8)),
                _ => Err(Error::Internal("simple-root graph is not of ADE shape".into())),
            }
        }
        _ => Err(Error::Internal("simple-root graph is not of ADE shape".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(rows: &[Vec<i64>]) -> IntegralLattice {
        IntegralLattice::from_i64(rows).unwrap()
    }

    #[test]
    fn a2_negated() {
        let d = root_sublattice(&lat(&[vec![-2, 1], vec![1, -2]])).unwrap();
        assert_eq!(d.components, vec![('A', 2)]);
        assert_eq!(d.simple_roots.len(), 2);
        assert_eq!(d.label(), "A2");
    }

    #[test]
    fn sum_of_a1s() {
        let d = root_sublattice(&lat(&[vec![-2, 0], vec![0, -2]])).unwrap();
        assert_eq!(d.components, vec![('A', 1), ('A', 1)]);
        assert_eq!(d.label(), "2A1");
    }

    #[test]
    fn d4_chain() {
        // D4: center node 0 adjacent to 1, 2, 3
        let d = root_sublattice(&lat(&[
            vec![-2, 1, 1, 1],
            vec![1, -2, 0, 0],
            vec![1, 0, -2, 0],
            vec![1, 0, 0, -2],
        ]))
        .unwrap();
        assert_eq!(d.components, vec![('D', 4)]);
    }

    #[test]
    fn e8_negated() {
        let d = root_sublattice(&lat(&[
            vec![-2, 1, 0, 0, 0, 0, 0, 0],
            vec![1, -2, 1, 0, 0, 0, 0, 0],
            vec![0, 1, -2, 1, 0, 0, 0, 0],
            vec![0, 0, 1, -2, 1, 0, 0, 0],
            vec![0, 0, 0, 1, -2, 1, 0, 1],
            vec![0, 0, 0, 0, 1, -2, 1, 0],
            vec![0, 0, 0, 0, 0, 1, -2, 0],
            vec![0, 0, 0, 0, 1, 0, 0, -2],
        ]))
        .unwrap();
        assert_eq!(d.components, vec![('E', 8)]);
        assert_eq!(d.label(), "E8");
    }

    #[test]
    fn rootless_lattice() {
        let d = root_sublattice(&lat(&[vec![-4, 1], vec![1, -4]])).unwrap();
        assert!(d.components.is_empty());
        assert_eq!(d.label(), "0");
    }

    #[test]
    fn positive_definite_rejected() {
        assert!(root_sublattice(&lat(&[vec![2]])).is_err());
    }
}
