use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::snf::{invariant_factors, to_u64};

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s` with `d_1 | ... | d_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyGroup {
    #[serde(rename = "rank")]
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub const fn zero() -> Self {
        HomologyGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub const fn free(rank: usize) -> Self {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Normalizes `torsion` into invariant-factor form, dropping trivial factors.
    pub fn new(free_rank: usize, torsion: Vec<BigUint>) -> Self {
        HomologyGroup {
            free_rank,
            torsion: invariant_factors(torsion).into_iter().filter(|d| *d != 1u32.into()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Rank one and no torsion.
    pub fn is_exactly_z(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum<'a, I: IntoIterator<Item = &'a HomologyGroup>>(groups: I) -> Self {
        let mut rank = 0;
        let mut torsion = Vec::new();
        for g in groups {
            rank += g.free_rank;
            torsion.extend(g.torsion.iter().cloned());
        }
        if torsion.len() <= 1 {
            return HomologyGroup { free_rank: rank, torsion };
        }
        HomologyGroup::new(rank, torsion)
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Torsion coefficients as JSON numbers, falling back to decimal strings past `u64`.
fn serialize_torsion<S: Serializer>(torsion: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(torsion.len()))?;
    for d in torsion {
        match to_u64(d) {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&d.to_string())?,
        }
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn sums_normalize_torsion() {
        let a = HomologyGroup::new(1, t(&[2]));
        let b = HomologyGroup::new(0, t(&[3]));
        let s = HomologyGroup::direct_sum([&a, &b]);
        assert_eq!(s, HomologyGroup::new(1, t(&[6])));
        assert_eq!(s.to_string(), "Z + Z/6");
        assert_eq!(HomologyGroup::new(0, t(&[1, 1])), HomologyGroup::zero());
    }

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::free(3).to_string(), "Z^3");
        assert_eq!(HomologyGroup::zero().to_string(), "0");
        assert!(HomologyGroup::free(1).is_exactly_z());
        assert!(!HomologyGroup::new(1, t(&[2])).is_exactly_z());
    }
}
