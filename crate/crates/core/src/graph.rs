//! Simple undirected graphs on small vertex sets, with chordality testing.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::bits::{self, iter_bits, popcount, Mask};
use crate::complex::VertexSet;
use crate::error::{Error, Result};

/// A graph stored as one adjacency bitmask per vertex position.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexSet,
    adj: Vec<Mask>,
}

impl Graph {
    /// Build from label pairs. Self-loops and unknown labels are rejected.
    pub fn new(vertices: VertexSet, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![0; vertices.len()];
        for &(a, b) in edges {
            let pa = vertices.position(a).ok_or(Error::UnknownVertex(a))?;
            let pb = vertices.position(b).ok_or(Error::UnknownVertex(b))?;
            if pa == pb {
                return Err(Error::SelfLoop(a));
            }
            adj[pa] |= 1 << pb;
            adj[pb] |= 1 << pa;
        }
        Ok(Graph { vertices, adj })
    }

    pub(crate) fn from_adjacency(vertices: VertexSet, adj: Vec<Mask>) -> Self {
        debug_assert_eq!(vertices.len(), adj.len());
        Graph { vertices, adj }
    }

    /// Labelled graph on `1..=n` whose edges are selected by the bits of `code`,
    /// in the order (1,2), (1,3), ..., (1,n), (2,3), ...
    pub fn from_edge_code(n: usize, code: u64) -> Result<Self> {
        let vertices = VertexSet::range(n)?;
        let mut adj = vec![0; n];
        let mut bit = 0;
        for a in 0..n {
            for b in a + 1..n {
                if code >> bit & 1 == 1 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
                bit += 1;
            }
        }
        Ok(Graph { vertices, adj })
    }

    pub fn cycle(p: usize) -> Result<Self> {
        if p < 3 {
            return Err(Error::CycleTooShort(p as u32));
        }
        let edges: Vec<_> = (1..=p as u32).map(|i| (i, i % p as u32 + 1)).collect();
        Self::new(VertexSet::range(p)?, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let vertices = VertexSet::range(n)?;
        let all = bits::full(n);
        let adj = (0..n).map(|v| all & !(1 << v)).collect();
        Ok(Graph { vertices, adj })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    /// Neighbours of the vertex at `position`.
    pub fn neighbours(&self, position: usize) -> Mask {
        self.adj[position]
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        match (self.vertices.position(a), self.vertices.position(b)) {
            (Some(pa), Some(pb)) => self.adj[pa] & (1 << pb) != 0,
            _ => false,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|&a| popcount(a)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (a, &nb) in self.adj.iter().enumerate() {
            for b in iter_bits(nb).filter(|&b| b > a) {
                out.push((self.vertices.label(a), self.vertices.label(b)));
            }
        }
        out
    }

    /// Positions adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Mask {
        let all = self.vertices.full_mask();
        (0..self.num_vertices()).filter(|&v| self.adj[v] | (1 << v) == all).fold(0, |m, v| m | 1 << v)
    }

    /// Connected components of the induced subgraph on `within`, ordered by lowest position.
    pub fn components_within(&self, within: Mask) -> Vec<Mask> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let reach = iter_bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & within & !comp;
                comp |= reach;
                frontier = reach;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Whether the induced subgraph on `within` is a single cycle of length at least 3.
    pub fn induces_cycle(&self, within: Mask) -> bool {
        popcount(within) >= 3
            && iter_bits(within).all(|v| popcount(self.adj[v] & within) == 2)
            && self.components_within(within).len() == 1
    }

    /// Maximum cardinality search; returns positions in visit order.
    pub fn mcs_order(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut weight = vec![0usize; n];
        let mut done: Mask = 0;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v =
                (0..n).filter(|&v| done & (1 << v) == 0).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
            order.push(v);
            done |= 1 << v;
            for u in iter_bits(self.adj[v] & !done) {
                weight[u] += 1;
            }
        }
        order
    }

    /// Whether `elimination` is a perfect elimination ordering: the neighbours of each
    /// vertex that come later in the ordering form a clique.
    pub fn is_perfect_elimination(&self, elimination: &[usize]) -> bool {
        let mut later: Mask = elimination.iter().fold(0, |m, &v| m | 1 << v);
        for &v in elimination {
            later &= !(1 << v);
            let nb = self.adj[v] & later;
            if iter_bits(nb).any(|x| nb & !(1 << x) & !self.adj[x] != 0) {
                return false;
            }
        }
        true
    }

    /// Chordality via maximum cardinality search; on failure, returns a chordless cycle
    /// of length at least 4 in cycle order.
    pub fn is_chordal(&self) -> ChordalCheck {
        let mut order = self.mcs_order();
        order.reverse();
        if self.is_perfect_elimination(&order) {
            return ChordalCheck { chordal: true, witness: None };
        }
        let cycle = self.chordless_cycle().expect("graph without perfect elimination ordering has a chordless cycle");
        ChordalCheck { chordal: false, witness: Some(cycle.into_iter().map(|v| self.vertices.label(v)).collect()) }
    }

    /// Some induced cycle of length >= 4, as positions in cycle order.
    ///
    /// For a vertex `v` with non-adjacent neighbours `a`, `b`, a shortest `a`-`b` path avoiding
    /// the rest of the closed neighbourhood of `v` closes up with `v` into an induced cycle.
    fn chordless_cycle(&self) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        for v in 0..n {
            let nb = self.adj[v];
            for a in iter_bits(nb) {
                for b in iter_bits(nb & !self.adj[a]).filter(|&b| b > a) {
                    let allowed = bits::full(n) & !(nb | 1 << v) | 1 << a | 1 << b;
                    if let Some(path) = self.shortest_path(a, b, allowed) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: usize, to: usize, allowed: Mask) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.num_vertices()];
        let mut seen: Mask = 1 << from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in iter_bits(self.adj[x] & allowed & !seen) {
                seen |= 1 << y;
                prev[y] = x;
                queue.push_back(y);
            }
        }
        None
    }

    /// Every vertex subset inducing a cycle of length at least `min_len`, by exhaustive
    /// subset scan. Subsets are returned as sorted label lists in ascending mask order.
    pub fn find_induced_cycles(&self, min_len: usize) -> Vec<Vec<u32>> {
        let min_len = min_len.max(3);
        let full = self.vertices.full_mask();
        (0..=full as u64)
            .map(|m| m as Mask)
            .filter(|&m| popcount(m) >= min_len && self.induces_cycle(m))
            .map(|m| self.vertices.labels_of(m))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("vertices", &self.vertices.labels()).field("edges", &self.edges()).finish()
    }
}

/// Outcome of [`Graph::is_chordal`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordalCheck {
    pub chordal: bool,
    pub witness: Option<Vec<u32>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_graph() -> Graph {
        let v = VertexSet::range(5).unwrap();
        Graph::new(v, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5)]).unwrap()
    }

    fn sorted(mut v: Vec<u32>) -> Vec<u32> {
        v.sort();
        v
    }

    #[test]
    fn cycles_are_not_chordal() {
        for p in 4..=9 {
            let check = Graph::cycle(p).unwrap().is_chordal();
            assert!(!check.chordal);
            assert_eq!(sorted(check.witness.unwrap()), (1..=p as u32).collect::<Vec<_>>());
        }
        assert!(Graph::cycle(3).unwrap().is_chordal().chordal);
    }

    #[test]
    fn trees_and_complete_graphs_are_chordal() {
        let star = Graph::new(VertexSet::range(5).unwrap(), &[(1, 2), (1, 3), (1, 4), (4, 5)]).unwrap();
        assert!(star.is_chordal().chordal);
        assert!(Graph::complete(6).unwrap().is_chordal().chordal);
        assert!(Graph::new(VertexSet::range(0).unwrap(), &[]).unwrap().is_chordal().chordal);
    }

    #[test]
    fn two_triangles_graph_witness() {
        let check = two_triangles_graph().is_chordal();
        assert!(!check.chordal);
        assert_eq!(sorted(check.witness.unwrap()), vec![1, 2, 3, 4]);
        assert_eq!(two_triangles_graph().find_induced_cycles(4), vec![vec![1, 2, 3, 4], vec![1, 3, 4, 5]]);
    }

    #[test]
    fn induced_cycle_search() {
        assert_eq!(Graph::cycle(5).unwrap().find_induced_cycles(4), vec![vec![1, 2, 3, 4, 5]]);
        assert!(Graph::complete(5).unwrap().find_induced_cycles(4).is_empty());
    }

    #[test]
    fn self_loops_rejected() {
        assert!(Graph::new(VertexSet::range(3).unwrap(), &[(2, 2)]).is_err());
    }

    #[test]
    fn edge_codes_enumerate_all_graphs() {
        assert_eq!(Graph::from_edge_code(4, 0b111111).unwrap(), Graph::complete(4).unwrap());
        assert_eq!(Graph::from_edge_code(3, 0b001).unwrap().edges(), vec![(1, 2)]);
    }

    #[test]
    fn witnesses_are_induced_cycles() {
        for code in 0..1u64 << 10 {
            let g = Graph::from_edge_code(5, code).unwrap();
            if let Some(w) = g.is_chordal().witness {
                assert!(w.len() >= 4);
                let mask = g.vertices().mask_of(&w).unwrap();
                assert!(g.induces_cycle(mask));
                for (i, &a) in w.iter().enumerate() {
                    assert!(g.has_edge(a, w[(i + 1) % w.len()]));
                }
            }
        }
    }
}
