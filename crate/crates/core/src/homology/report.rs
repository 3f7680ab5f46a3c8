use serde::Serialize;

use super::{HochsterTable, HomologyGroup};
use crate::complex::SimplicialComplex;

/// `{k, rank, torsion}` row of `H_*(R_K)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeEntry {
    pub k: usize,
    #[serde(flatten)]
    pub group: HomologyGroup,
}

/// `{i, j2, rank, torsion}` row of the bigraded table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradedEntry {
    pub i: usize,
    pub j2: usize,
    #[serde(flatten)]
    pub group: HomologyGroup,
}

/// Homology summary of one complex, in the JSON layout consumed by tooling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub complex: String,
    #[serde(rename = "H_R")]
    pub h_r: Vec<DegreeEntry>,
    /// Nonzero entries only.
    #[serde(rename = "H_Z_bigraded")]
    pub h_z_bigraded: Vec<BigradedEntry>,
    #[serde(rename = "betti_Z")]
    pub betti_z: Vec<usize>,
}

impl HomologyReport {
    pub fn new(name: impl Into<String>, k: &SimplicialComplex) -> Self {
        Self::from_table(name, &HochsterTable::compute(k))
    }

    pub fn from_table(name: impl Into<String>, table: &HochsterTable) -> Self {
        let bigraded = table.bigraded_z();
        HomologyReport {
            complex: name.into(),
            h_r: table.homology_r().into_iter().enumerate().map(|(k, group)| DegreeEntry { k, group }).collect(),
            h_z_bigraded: bigraded.nonzero().map(|(i, j2, g)| BigradedEntry { i, j2, group: g.clone() }).collect(),
            betti_z: bigraded.betti(),
        }
    }
}
