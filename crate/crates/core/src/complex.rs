//! Finite simplicial complexes on small labelled vertex sets.
//!
//! Faces are stored as bitmasks over vertex *positions*; the [`VertexSet`]
//! maps positions back to the user-facing labels (1-based in files).

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bits::{self, iter_bits, popcount, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::MAX_VERTICES;

/// Upper bound on the number of faces materialized by any constructor.
pub const FACE_BUDGET: usize = 1 << 22;

/// Sorted, duplicate-free vertex labels. Position `i` is bit `i` of every face mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new(mut labels: Vec<u32>) -> Result<Self> {
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        Ok(VertexSet(labels))
    }

    /// The labels `1..=m`.
    pub fn range(m: usize) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        Ok(VertexSet((1..=m as u32).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn label(&self, position: usize) -> u32 {
        self.0[position]
    }

    pub fn position(&self, label: u32) -> Option<usize> {
        self.0.binary_search(&label).ok()
    }

    pub fn full_mask(&self) -> Mask {
        bits::full(self.len())
    }

    /// Encode a list of labels as a mask; rejects unknown and repeated labels.
    pub fn mask_of(&self, labels: &[u32]) -> Result<Mask> {
        let mut mask = 0;
        for &l in labels {
            let p = self.position(l).ok_or(Error::UnknownVertex(l))?;
            if mask & (1 << p) != 0 {
                return Err(Error::DuplicateVertex(l));
            }
            mask |= 1 << p;
        }
        Ok(mask)
    }

    pub fn labels_of(&self, mask: Mask) -> Vec<u32> {
        iter_bits(mask).map(|b| self.0[b]).collect()
    }

    /// The labels selected by `mask`, as a new vertex set.
    pub fn restrict(&self, mask: Mask) -> VertexSet {
        VertexSet(self.labels_of(mask))
    }
}

/// A simplicial complex containing the empty face and every vertex singleton.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    faces: HashSet<Mask>,
    /// Non-empty faces grouped by dimension, each list ascending.
    by_dim: Vec<Vec<Mask>>,
    facets: Vec<Mask>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` together with every singleton of `vertices`.
    pub fn from_facets<F: AsRef<[u32]>>(vertices: VertexSet, facets: &[F]) -> Result<Self> {
        let mut faces = HashSet::new();
        faces.insert(0);
        for p in 0..vertices.len() {
            faces.insert(1 << p);
        }
        for f in facets {
            let mask = vertices.mask_of(f.as_ref())?;
            if faces.contains(&mask) {
                continue;
            }
            for sub in bits::submasks(mask) {
                faces.insert(sub);
            }
            if faces.len() > FACE_BUDGET {
                return Err(Error::FaceBudget(FACE_BUDGET));
            }
        }
        Ok(Self::from_closed_faces(vertices, faces))
    }

    /// Facets given on the vertex set `1..=m`.
    pub fn from_facets_on<F: AsRef<[u32]>>(m: usize, facets: &[F]) -> Result<Self> {
        Self::from_facets(VertexSet::range(m)?, facets)
    }

    /// Build from a face family that is already downward closed and contains all singletons.
    pub(crate) fn from_closed_faces(vertices: VertexSet, faces: HashSet<Mask>) -> Self {
        let n = vertices.len();
        let mut by_dim: Vec<Vec<Mask>> = Vec::new();
        let mut facets = Vec::new();
        for &f in &faces {
            if f == 0 {
                continue;
            }
            let d = popcount(f) - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(f);
            let maximal = (0..n).all(|v| f & (1 << v) != 0 || !faces.contains(&(f | 1 << v)));
            if maximal {
                facets.push(f);
            }
        }
        for level in &mut by_dim {
            level.sort_unstable();
        }
        facets.sort_unstable_by_key(|&f| (popcount(f), f));
        if n == 0 {
            facets.push(0);
        }
        SimplicialComplex { vertices, faces, by_dim, facets }
    }

    /// The boundary of a `p`-gon on labels `1..=p`.
    pub fn cycle(p: usize) -> Result<Self> {
        if p < 3 {
            return Err(Error::CycleTooShort(p as u32));
        }
        let edges: Vec<[u32; 2]> = (1..=p as u32).map(|i| [i, i % p as u32 + 1]).collect();
        Self::from_facets_on(p, &edges)
    }

    /// The full simplex `Δ^q` on labels `1..=q+1`.
    pub fn simplex(q: usize) -> Result<Self> {
        let top: Vec<u32> = (1..=q as u32 + 1).collect();
        Self::from_facets_on(q + 1, &[top])
    }

    /// `m` isolated vertices (the complex on zero vertices when `m = 0`).
    pub fn discrete(m: usize) -> Result<Self> {
        Self::from_facets_on::<[u32; 0]>(m, &[])
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension; `-1` for the complex on no vertices.
    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 1
    }

    /// Faces of dimension `k` as ascending masks.
    pub fn faces_of_dim(&self, k: usize) -> &[Mask] {
        self.by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    /// Number of faces of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// Every face including the empty one.
    pub fn faces(&self) -> impl Iterator<Item = Mask> + '_ {
        std::iter::once(0).chain(self.by_dim.iter().flatten().copied())
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains_mask(&self, mask: Mask) -> bool {
        self.faces.contains(&mask)
    }

    /// Membership test for a list of labels; unknown labels are never in a face.
    pub fn contains(&self, labels: &[u32]) -> bool {
        self.vertices.mask_of(labels).is_ok_and(|m| self.contains_mask(m))
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<u32>> {
        self.facets.iter().map(|&f| self.vertices.labels_of(f)).collect()
    }

    /// Full subcomplex on a set of labels.
    pub fn full_subcomplex(&self, labels: &[u32]) -> Result<Self> {
        Ok(self.full_subcomplex_mask(self.vertices.mask_of(labels)?))
    }

    /// Full subcomplex on the vertex positions in `within`; labels are kept.
    pub fn full_subcomplex_mask(&self, within: Mask) -> Self {
        let within = within & self.vertices.full_mask();
        let faces = self.faces().filter(|&f| f & !within == 0).map(|f| bits::compress(f, within)).collect();
        Self::from_closed_faces(self.vertices.restrict(within), faces)
    }

    /// The link of a vertex, on the vertex set of its neighbours.
    pub fn link(&self, vertex: u32) -> Result<Self> {
        let v = 1 << self.vertices.position(vertex).ok_or(Error::UnknownVertex(vertex))?;
        let nbrs = self.neighbours(v);
        let faces = self
            .faces()
            .filter(|&f| f & v == 0 && self.faces.contains(&(f | v)))
            .map(|f| bits::compress(f, nbrs))
            .collect();
        Ok(Self::from_closed_faces(self.vertices.restrict(nbrs), faces))
    }

    /// The closed star of a vertex, on the vertex and its neighbours.
    pub fn star(&self, vertex: u32) -> Result<Self> {
        let v = 1 << self.vertices.position(vertex).ok_or(Error::UnknownVertex(vertex))?;
        let within = self.neighbours(v) | v;
        let faces =
            self.faces().filter(|&f| self.faces.contains(&(f | v))).map(|f| bits::compress(f, within)).collect();
        Ok(Self::from_closed_faces(self.vertices.restrict(within), faces))
    }

    fn neighbours(&self, v: Mask) -> Mask {
        self.faces_of_dim(1).iter().filter(|&&e| e & v != 0).fold(0, |acc, &e| acc | e) & !v
    }

    /// Join with `other`. The result lives on labels `1..=m+n`: this complex's
    /// vertices come first in order, then `other`'s.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let m = self.num_vertices();
        let total = m + other.num_vertices();
        let vertices = VertexSet::range(total)?;
        let count = self.num_faces().saturating_mul(other.num_faces());
        if count > FACE_BUDGET {
            return Err(Error::FaceBudget(FACE_BUDGET));
        }
        let mut faces = HashSet::with_capacity(count);
        for a in self.faces() {
            for b in other.faces() {
                faces.insert(a | b << m);
            }
        }
        Ok(Self::from_closed_faces(vertices, faces))
    }

    /// Relabel positions: position `i` moves to position `perm[i]`. Labels stay sorted.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_vertices(), "permutation length mismatch");
        let map = |f: Mask| iter_bits(f).fold(0, |acc, b| acc | 1 << perm[b]);
        let faces = self.faces().map(map).collect();
        Self::from_closed_faces(self.vertices.clone(), faces)
    }

    pub fn one_skeleton(&self) -> Graph {
        let n = self.num_vertices();
        let mut adj = vec![0; n];
        for &e in self.faces_of_dim(1) {
            let a = e.trailing_zeros() as usize;
            let b = 31 - e.leading_zeros() as usize;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph::from_adjacency(self.vertices.clone(), adj)
    }

    /// Flagness with a smallest missing face of size at least 3 as witness.
    pub fn is_flag(&self) -> FlagCheck {
        let g = self.one_skeleton();
        for level in 1..self.by_dim.len() {
            // candidates of size level + 2 built from faces of size level + 1
            let mut missing: Option<Mask> = None;
            for &f in &self.by_dim[level] {
                let common = iter_bits(f).fold(self.vertices.full_mask(), |acc, b| acc & g.neighbours(b));
                for v in iter_bits(common & !f) {
                    let c = f | 1 << v;
                    if !self.faces.contains(&c) && missing.is_none_or(|m| c < m) {
                        missing = Some(c);
                    }
                }
            }
            if let Some(m) = missing {
                // every proper subset is a face: all smaller cliques are faces by the
                // earlier levels passing, so `m` is a genuine missing face
                return FlagCheck { flag: false, witness: Some(self.vertices.labels_of(m)) };
            }
        }
        FlagCheck { flag: true, witness: None }
    }

    /// The clique complex of `graph`.
    pub fn clique_complex(graph: &Graph) -> Result<Self> {
        let n = graph.num_vertices();
        let mut faces = HashSet::new();
        faces.insert(0);
        // extend each clique only by vertices above its maximum, so each clique is seen once
        let mut stack: Vec<(Mask, Mask)> = (0..n).map(|v| (1 << v, graph.neighbours(v) & !bits::full(v + 1))).collect();
        while let Some((clique, cand)) = stack.pop() {
            faces.insert(clique);
            if faces.len() > FACE_BUDGET {
                return Err(Error::FaceBudget(FACE_BUDGET));
            }
            for v in iter_bits(cand) {
                stack.push((clique | 1 << v, cand & graph.neighbours(v) & !bits::full(v + 1)));
            }
        }
        Ok(Self::from_closed_faces(graph.vertices().clone(), faces))
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices.labels())
            .field("facets", &self.facet_labels())
            .finish()
    }
}

/// Outcome of [`SimplicialComplex::is_flag`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagCheck {
    pub flag: bool,
    pub witness: Option<Vec<u32>>,
}
