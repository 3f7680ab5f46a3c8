//! Integral simplicial homology and the full-subcomplex decompositions of
//! `H_*(R_K)` and the bigraded `H_{-i,2j}(Z_K)`.

mod group;
mod hochster;
mod report;
pub mod snf;

pub use group::HomologyGroup;
pub use hochster::{betti_z, bigraded_homology_z, homology_r, BigradedTable, HochsterTable};
pub use report::{BigradedEntry, DegreeEntry, HomologyReport};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

use crate::bits::{iter_bits, Mask};
use crate::complex::SimplicialComplex;

/// Matrix of `∂_k` from `k`-faces (columns) to `(k-1)`-faces (rows), faces oriented
/// by ascending vertex order. For `k = 0` this is the augmentation row of ones.
pub fn boundary_matrix(k: &SimplicialComplex, dim: usize) -> IntMatrix {
    let cols = k.faces_of_dim(dim);
    if dim == 0 {
        let mut m = IntMatrix::zeros(1, cols.len());
        for c in 0..cols.len() {
            m.set(0, c, 1);
        }
        return m;
    }
    boundary_between(k.faces_of_dim(dim - 1), cols)
}

/// Boundary matrix between two sorted face lists, `rows` one dimension below `cols`.
pub(crate) fn boundary_between(rows: &[Mask], cols: &[Mask]) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (c, &face) in cols.iter().enumerate() {
        for (i, v) in iter_bits(face).enumerate() {
            let r = rows.binary_search(&(face & !(1 << v))).expect("boundary face present");
            m.set(r, c, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Reduced homology `H̃_n(K; Z)` for `n = -1..=dim K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    /// `groups[0]` is degree `-1`.
    groups: Vec<HomologyGroup>,
}

static ZERO: HomologyGroup = HomologyGroup::zero();

impl ReducedHomology {
    /// `H̃_n`; zero outside the computed range.
    pub fn degree(&self, n: isize) -> &HomologyGroup {
        usize::try_from(n + 1).ok().and_then(|i| self.groups.get(i)).unwrap_or(&ZERO)
    }

    /// Groups in degrees `0, 1, ...` up to the dimension.
    pub fn nonnegative(&self) -> &[HomologyGroup] {
        &self.groups[1..]
    }

    /// Whether `H̃_{-1}` is `Z`, which happens exactly for the complex on no vertices.
    pub fn is_void(&self) -> bool {
        !self.groups[0].is_zero()
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    pub fn max_degree(&self) -> isize {
        self.groups.len() as isize - 2
    }
}

pub fn reduced_homology(k: &SimplicialComplex) -> ReducedHomology {
    let levels: Vec<&[Mask]> = (0..k.f_vector().len()).map(|d| k.faces_of_dim(d)).collect();
    reduced_homology_of_levels(&levels)
}

/// Reduced homology of the full subcomplex on `within`, without building it.
pub(crate) fn reduced_homology_within(k: &SimplicialComplex, within: Mask) -> ReducedHomology {
    let mut levels: Vec<Vec<Mask>> = Vec::new();
    for d in 0.. {
        let faces = k.faces_of_dim(d);
        if faces.is_empty() {
            break;
        }
        let kept: Vec<Mask> = faces.iter().copied().filter(|&f| f & !within == 0).collect();
        if kept.is_empty() {
            break;
        }
        levels.push(kept);
    }
    let refs: Vec<&[Mask]> = levels.iter().map(Vec::as_slice).collect();
    reduced_homology_of_levels(&refs)
}

fn reduced_homology_of_levels(levels: &[&[Mask]]) -> ReducedHomology {
    if levels.is_empty() {
        return ReducedHomology { groups: vec![HomologyGroup::free(1)] };
    }
    // snfs[n] describes ∂_n : C_n -> C_{n-1}, with ∂_0 the augmentation
    let mut snfs = Vec::with_capacity(levels.len());
    snfs.push(SmithForm { diagonal: vec![1u32.into()], rank: 1 });
    for n in 1..levels.len() {
        snfs.push(smith_normal_form(&boundary_between(levels[n - 1], levels[n])));
    }
    let mut groups = vec![HomologyGroup::zero()];
    for n in 0..levels.len() {
        let out_rank = snfs[n].rank;
        let (in_rank, torsion) = snfs.get(n + 1).map_or((0, Vec::new()), |s| (s.rank, s.torsion()));
        groups.push(HomologyGroup::new(levels[n].len() - out_rank - in_rank, torsion));
    }
    ReducedHomology { groups }
}
