//! Loop homology of connected sums of sphere products `#_i (S^{d_i} × S^{d-d_i})`,
//! which covers `Z_{C_p}` through its McGavran decomposition.

mod dga;
mod series;

pub use dga::{
    adams_hilton_model, dga_homology, dga_homology_ranks, DgaHomology, FreeDGAlgebra, Poly, DEFAULT_BASIS_BUDGET,
};
pub use series::{
    half_smash_deviation, poincare_series_closed, rank_oracle_monomials, single_relation_candidates, Deviation,
    DeviationReport, GradedSeries, MAX_TRUNCATION,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A connected sum of products `S^{d_i} × S^{d-d_i}`, stored as multiplicities of each `d_i`.
///
/// `S^a × S^b` and `S^b × S^a` are kept apart: `d_i` decides which factor feeds the
/// `a_i` generator of the loop algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereProductSum {
    d: usize,
    pairs: BTreeMap<usize, u64>,
}

impl SphereProductSum {
    pub fn new(d: usize, dims: &[usize]) -> Result<Self> {
        let mut pairs = BTreeMap::new();
        for &di in dims {
            *pairs.entry(di).or_insert(0) += 1;
        }
        Self::from_multiplicities(d, pairs)
    }

    pub fn from_multiplicities(d: usize, pairs: BTreeMap<usize, u64>) -> Result<Self> {
        if d < 4 {
            return Err(Error::InvalidSphereProduct(format!("dimension {d} is below 4")));
        }
        if pairs.values().all(|&c| c == 0) {
            return Err(Error::InvalidSphereProduct("no summands".into()));
        }
        if let Some(&bad) = pairs.keys().find(|&&di| di < 2 || di + 2 > d) {
            return Err(Error::InvalidSphereProduct(format!(
                "S^{bad} x S^{} needs both spheres of dimension >= 2",
                d.saturating_sub(bad)
            )));
        }
        let pairs = pairs.into_iter().filter(|&(_, c)| c > 0).collect();
        Ok(SphereProductSum { d, pairs })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    /// `d_i -> number of summands S^{d_i} × S^{d-d_i}`.
    pub fn multiplicities(&self) -> &BTreeMap<usize, u64> {
        &self.pairs
    }

    pub fn summands(&self) -> u64 {
        self.pairs.values().sum()
    }

    /// Every `d_i` repeated by multiplicity, ascending.
    pub fn pair_dims(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().flat_map(|(&di, &c)| std::iter::repeat_n(di, c as usize))
    }

    /// Betti numbers `b_0..b_d` of the connected sum.
    pub fn betti(&self) -> Vec<u64> {
        let mut b = vec![0; self.d + 1];
        b[0] = 1;
        b[self.d] = 1;
        for (&di, &c) in &self.pairs {
            b[di] += c;
            b[self.d - di] += c;
        }
        b
    }
}

impl fmt::Display for SphereProductSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(&di, &c)| {
                let term = format!("S^{di} x S^{}", self.d - di);
                if c == 1 {
                    term
                } else {
                    format!("{c}(S^{di} x S^{})", self.d - di)
                }
            })
            .collect();
        f.write_str(&parts.join(" # "))
    }
}

/// `Z_{C_p}` as a connected sum: `d = p + 2` and `(k-2)·C(p-2, k-1)` copies of
/// `S^k × S^{p+2-k}` for `3 <= k <= p-1`.
pub fn mcgavran(p: usize) -> Result<SphereProductSum> {
    if p < 4 {
        return Err(Error::CycleTooShort(p as u32));
    }
    if p > crate::MAX_VERTICES {
        return Err(Error::TooManyVertices(p));
    }
    let pairs = (3..p).map(|k| (k, (k as u64 - 2) * binomial(p as u64 - 2, k as u64 - 1))).collect();
    SphereProductSum::from_multiplicities(p + 2, pairs)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mcgavran_tables() {
        assert_eq!(mcgavran(4).unwrap(), SphereProductSum::new(6, &[3]).unwrap());
        let m5 = mcgavran(5).unwrap();
        assert_eq!(m5.multiplicities(), &BTreeMap::from([(3, 3), (4, 2)]));
        assert_eq!(m5.summands(), 5);
        let m6 = mcgavran(6).unwrap();
        assert_eq!(m6.multiplicities(), &BTreeMap::from([(3, 6), (4, 8), (5, 3)]));
        assert_eq!(m6.summands(), 17);
        assert!(mcgavran(3).is_err());
    }

    #[test]
    fn betti_of_sums() {
        assert_eq!(mcgavran(5).unwrap().betti(), vec![1, 0, 0, 5, 5, 0, 0, 1]);
        assert_eq!(SphereProductSum::new(6, &[3]).unwrap().betti(), vec![1, 0, 0, 2, 0, 0, 1]);
    }

    #[test]
    fn validation() {
        assert!(SphereProductSum::new(3, &[2]).is_err());
        assert!(SphereProductSum::new(6, &[1]).is_err());
        assert!(SphereProductSum::new(6, &[5]).is_err());
        assert!(SphereProductSum::new(6, &[]).is_err());
        assert!(SphereProductSum::new(4, &[2]).is_ok());
    }
}
