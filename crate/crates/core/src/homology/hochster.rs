//! Full-subcomplex decompositions of the homology of `R_K` and `Z_K`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{reduced_homology_within, HomologyGroup, ReducedHomology};
use crate::bits::{popcount, Mask};
use crate::complex::SimplicialComplex;

/// Below this many vertices the subset loop runs on the calling thread.
const PARALLEL_THRESHOLD: usize = 10;

/// Reduced homology of every full subcomplex `K_J`, indexed by the mask of `J`.
#[derive(Clone, Debug)]
pub struct HochsterTable {
    m: usize,
    by_subset: Vec<ReducedHomology>,
}

impl HochsterTable {
    pub fn compute(k: &SimplicialComplex) -> Self {
        let m = k.num_vertices();
        let count = 1usize << m;
        let by_subset = if m >= PARALLEL_THRESHOLD {
            (0..count).into_par_iter().map(|j| reduced_homology_within(k, j as Mask)).collect()
        } else {
            (0..count).map(|j| reduced_homology_within(k, j as Mask)).collect()
        };
        HochsterTable { m, by_subset }
    }

    pub fn num_vertices(&self) -> usize {
        self.m
    }

    pub fn subset(&self, j: Mask) -> &ReducedHomology {
        &self.by_subset[j as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mask, &ReducedHomology)> {
        self.by_subset.iter().enumerate().map(|(j, h)| (j as Mask, h))
    }

    /// `H_k(R_K) = ⊕_J H̃_{k-1}(K_J)` for `k = 0..=dim K + 1`.
    pub fn homology_r(&self) -> Vec<HomologyGroup> {
        let top = self.by_subset.iter().map(ReducedHomology::max_degree).max().unwrap_or(-1);
        (0..=top + 1).map(|k| HomologyGroup::direct_sum(self.by_subset.iter().map(|h| h.degree(k - 1)))).collect()
    }

    /// `H_{-i,2j}(Z_K) = ⊕_{|J|=j} H̃_{j-i-1}(K_J)`.
    pub fn bigraded_z(&self) -> BigradedTable {
        let mut parts: BTreeMap<(usize, usize), Vec<&HomologyGroup>> = BTreeMap::new();
        for (mask, h) in self.iter() {
            let j = popcount(mask);
            for n in -1..=h.max_degree() {
                let g = h.degree(n);
                if g.is_zero() {
                    continue;
                }
                let i = (j as isize - 1 - n) as usize;
                parts.entry((i, j)).or_default().push(g);
            }
        }
        let entries = parts.into_iter().map(|(key, gs)| (key, HomologyGroup::direct_sum(gs))).collect();
        BigradedTable { m: self.m, entries }
    }
}

pub fn homology_r(k: &SimplicialComplex) -> Vec<HomologyGroup> {
    HochsterTable::compute(k).homology_r()
}

pub fn bigraded_homology_z(k: &SimplicialComplex) -> BigradedTable {
    HochsterTable::compute(k).bigraded_z()
}

pub fn betti_z(k: &SimplicialComplex) -> Vec<usize> {
    bigraded_homology_z(k).betti()
}

/// Nonzero groups `H_{-i,2j}(Z_K)` keyed by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedTable {
    m: usize,
    entries: BTreeMap<(usize, usize), HomologyGroup>,
}

static ZERO: HomologyGroup = HomologyGroup::zero();

impl BigradedTable {
    /// `H_{-i, two_j}`; zero when absent or when `two_j` is odd.
    pub fn get(&self, i: usize, two_j: usize) -> &HomologyGroup {
        if two_j % 2 == 1 {
            return &ZERO;
        }
        self.entries.get(&(i, two_j / 2)).unwrap_or(&ZERO)
    }

    pub fn num_vertices(&self) -> usize {
        self.m
    }

    /// Nonzero entries as `(i, 2j, group)` in ascending `(i, j)` order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &HomologyGroup)> {
        self.entries.iter().map(|(&(i, j), g)| (i, 2 * j, g))
    }

    /// Total-degree ranks `rank H_k(Z_K)` with `k = 2j - i`.
    pub fn betti(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|&(i, j)| 2 * j - i).max().unwrap_or(0);
        let mut out = vec![0; top + 1];
        for (&(i, j), g) in &self.entries {
            out[2 * j - i] += g.free_rank;
        }
        out
    }

    /// Total-degree groups `H_k(Z_K)`.
    pub fn total(&self) -> Vec<HomologyGroup> {
        let top = self.entries.keys().map(|&(i, j)| 2 * j - i).max().unwrap_or(0);
        (0..=top)
            .map(|k| {
                HomologyGroup::direct_sum(self.entries.iter().filter(|(&(i, j), _)| 2 * j - i == k).map(|(_, g)| g))
            })
            .collect()
    }

    /// Whether every entry with `j - i >= gap` vanishes.
    pub fn vanishes_beyond(&self, gap: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j - i < gap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> SimplicialComplex {
        SimplicialComplex::from_facets_on(5, &[vec![1, 2, 5], vec![2, 3, 5], vec![1, 4], vec![3, 4]]).unwrap()
    }

    fn square_cone() -> SimplicialComplex {
        SimplicialComplex::from_facets_on(5, &[[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5]]).unwrap()
    }

    #[test]
    fn real_moment_angle_homology_of_small_examples() {
        assert_eq!(homology_r(&two_triangles())[2], HomologyGroup::free(3));
        assert_eq!(homology_r(&square_cone())[2], HomologyGroup::free(1));
    }

    #[test]
    fn five_cycle_is_a_genus_five_surface() {
        let h = homology_r(&SimplicialComplex::cycle(5).unwrap());
        let ranks: Vec<_> = h.iter().map(|g| g.free_rank).collect();
        assert_eq!(ranks, vec![1, 10, 1]);
        assert!(h.iter().all(HomologyGroup::is_free));
    }

    #[test]
    fn bigraded_small_examples() {
        let a = bigraded_homology_z(&two_triangles());
        assert_eq!(a.get(2, 8), &HomologyGroup::free(2));
        assert_eq!(a.get(3, 10), &HomologyGroup::free(1));
        let b = bigraded_homology_z(&square_cone());
        assert_eq!(b.get(2, 8), &HomologyGroup::free(1));
        assert_eq!(b.get(0, 0), &HomologyGroup::free(1));
    }

    #[test]
    fn cycle_row_two_minus_j() {
        for p in 4..=7 {
            let t = bigraded_homology_z(&SimplicialComplex::cycle(p).unwrap());
            for j in 0..=p {
                let expected = if j == p { HomologyGroup::free(1) } else { HomologyGroup::zero() };
                if j >= 2 {
                    assert_eq!(t.get(j - 2, 2 * j), &expected, "p={p} j={j}");
                }
            }
            assert!(t.vanishes_beyond(3));
        }
    }

    #[test]
    fn betti_of_sphere_products() {
        assert_eq!(betti_z(&SimplicialComplex::cycle(4).unwrap()), vec![1, 0, 0, 2, 0, 0, 1]);
        assert_eq!(betti_z(&SimplicialComplex::cycle(5).unwrap()), vec![1, 0, 0, 5, 5, 0, 0, 1]);
    }

    #[test]
    fn missing_triangle_betti() {
        let k =
            SimplicialComplex::from_facets_on(5, &[vec![1, 2, 5], vec![2, 3, 5], vec![3, 4, 5], vec![1, 4]]).unwrap();
        assert_eq!(betti_z(&k), vec![1, 0, 0, 2, 0, 1, 3, 1]);
    }
}
