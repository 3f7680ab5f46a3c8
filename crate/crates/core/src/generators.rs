//! Nested-commutator generating sets for the commutator subgroup `RC'_K` and for
//! the loop homology `H_*(ΩZ_K)`.
//!
//! Each generator is indexed by a subset `J` with `j = max J` and a connected
//! component of `K_J` avoiding `j`, whose least vertex is `i`; the remaining
//! vertices of `J` form the prefix `k_1 < ... < k_{l-2}`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{iter_bits, popcount, Mask};
use crate::complex::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WordKind {
    /// Group commutators `(g_a, g_b)`.
    Group,
    /// Graded algebra commutators `[u_a, u_b]`.
    Algebra,
}

/// The word `(g_{k_1}, (g_{k_2}, ..., (g_j, g_i)...))` or its algebra analogue.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CommutatorWord {
    #[serde(skip)]
    pub kind: WordKind,
    pub prefix: Vec<u32>,
    pub j: u32,
    pub i: u32,
}

impl CommutatorWord {
    pub fn render(&self) -> String {
        let (open, close, letter) = match self.kind {
            WordKind::Group => ('(', ')', 'g'),
            WordKind::Algebra => ('[', ']', 'u'),
        };
        let mut out = String::new();
        for k in &self.prefix {
            out.push_str(&format!("{open}{letter}_{k},"));
        }
        out.push_str(&format!("{open}{letter}_{},{letter}_{}{close}", self.j, self.i));
        for _ in &self.prefix {
            out.push(close);
        }
        out
    }

    /// Labels occurring in the word, i.e. the subset `J`.
    pub fn support(&self) -> Vec<u32> {
        let mut s = self.prefix.clone();
        s.push(self.j);
        s.push(self.i);
        s.sort_unstable();
        s
    }

    /// Check both defining conditions against `k`: the index inequalities, and that
    /// `i` is the least vertex of a component of `K_J` missing `j`.
    pub fn is_valid_for(&self, k: &SimplicialComplex) -> bool {
        let ordered = self.prefix.windows(2).all(|w| w[0] < w[1])
            && self.prefix.last().is_none_or(|&last| last < self.j)
            && self.j > self.i
            && !self.prefix.contains(&self.i);
        if !ordered {
            return false;
        }
        let Ok(j_mask) = k.vertices().mask_of(&self.support()) else { return false };
        let g = k.one_skeleton();
        let (pi, pj) = (k.vertices().position(self.i).unwrap(), k.vertices().position(self.j).unwrap());
        // component of i inside K_J, by plain breadth-first search
        let mut comp: Mask = 1 << pi;
        let mut grew = true;
        while grew {
            let next = iter_bits(comp).fold(comp, |acc, v| acc | (g.neighbours(v) & j_mask));
            grew = next != comp;
            comp = next;
        }
        comp & (1 << pj) == 0 && comp.trailing_zeros() as usize == pi
    }
}

impl fmt::Display for CommutatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub kind: WordKind,
    pub count: usize,
    pub words: Vec<CommutatorWord>,
}

/// `Σ_J rank H̃_0(K_J)`, the number of components of each full subcomplex minus one.
pub fn generator_count(k: &SimplicialComplex) -> usize {
    let g = k.one_skeleton();
    let full = k.vertices().full_mask() as u64;
    (0..=full)
        .into_par_iter()
        .map(|j| {
            let j = j as Mask;
            if popcount(j) < 2 {
                0
            } else {
                g.components_within(j).len() - 1
            }
        })
        .sum()
}

/// All words in canonical order: `J` ascending as a bitmask, then `i` ascending.
pub fn enumerate_generators(k: &SimplicialComplex, kind: WordKind) -> GeneratorSet {
    let g = k.one_skeleton();
    let vs = k.vertices();
    let full = vs.full_mask() as u64;
    let words: Vec<CommutatorWord> = (0..=full)
        .into_par_iter()
        .flat_map_iter(|j_mask| {
            let j_mask = j_mask as Mask;
            let mut out = Vec::new();
            if popcount(j_mask) >= 2 {
                let top = 31 - j_mask.leading_zeros() as usize;
                for comp in g.components_within(j_mask) {
                    if comp & (1 << top) != 0 {
                        continue;
                    }
                    let low = comp.trailing_zeros() as usize;
                    out.push(CommutatorWord {
                        kind,
                        prefix: vs.labels_of(j_mask & !(1 << top) & !(1 << low)),
                        j: vs.label(top),
                        i: vs.label(low),
                    });
                }
            }
            out.sort_by_key(|w| w.i);
            out
        })
        .collect();
    GeneratorSet { kind, count: words.len(), words }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered(set: &GeneratorSet) -> Vec<String> {
        set.words.iter().map(CommutatorWord::render).collect()
    }

    fn two_triangles() -> SimplicialComplex {
        SimplicialComplex::from_facets_on(5, &[vec![1, 2, 5], vec![2, 3, 5], vec![1, 4], vec![3, 4]]).unwrap()
    }

    #[test]
    fn rendering() {
        let w = CommutatorWord { kind: WordKind::Group, prefix: vec![2], j: 5, i: 4 };
        assert_eq!(w.render(), "(g_2,(g_5,g_4))");
        let w = CommutatorWord { kind: WordKind::Algebra, prefix: vec![], j: 3, i: 1 };
        assert_eq!(w.to_string(), "[u_3,u_1]");
        let w = CommutatorWord { kind: WordKind::Group, prefix: vec![], j: 2, i: 1 };
        assert_eq!(w.render(), "(g_2,g_1)");
        let w = CommutatorWord { kind: WordKind::Algebra, prefix: vec![1, 2], j: 6, i: 4 };
        assert_eq!(w.render(), "[u_1,[u_2,[u_6,u_4]]]");
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(generator_count(&SimplicialComplex::cycle(5).unwrap()), 10);
        assert_eq!(generator_count(&SimplicialComplex::cycle(6).unwrap()), 34);
        assert_eq!(generator_count(&SimplicialComplex::simplex(4).unwrap()), 0);
    }

    #[test]
    fn small_example_words() {
        let set = enumerate_generators(&two_triangles(), WordKind::Group);
        let mut words = rendered(&set);
        words.sort();
        assert_eq!(words, vec!["(g_2,(g_5,g_4))", "(g_3,g_1)", "(g_4,g_2)", "(g_5,g_4)"]);
        let b = SimplicialComplex::from_facets_on(5, &[[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5]]).unwrap();
        assert_eq!(rendered(&enumerate_generators(&b, WordKind::Algebra)), vec!["[u_3,u_1]", "[u_4,u_2]"]);
    }

    #[test]
    fn square_words() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        assert_eq!(rendered(&enumerate_generators(&c4, WordKind::Group)), vec!["(g_3,g_1)", "(g_4,g_2)"]);
    }

    #[test]
    fn enumeration_agrees_with_count_and_validates() {
        for code in (0..1u64 << 10).step_by(7) {
            let g = crate::graph::Graph::from_edge_code(5, code).unwrap();
            let k = SimplicialComplex::clique_complex(&g).unwrap();
            let set = enumerate_generators(&k, WordKind::Group);
            assert_eq!(set.count, generator_count(&k));
            assert!(set.words.iter().all(|w| w.is_valid_for(&k)));
        }
    }

    #[test]
    fn invalid_words_are_rejected() {
        let k = two_triangles();
        assert!(!CommutatorWord { kind: WordKind::Group, prefix: vec![], j: 2, i: 1 }.is_valid_for(&k));
        assert!(!CommutatorWord { kind: WordKind::Group, prefix: vec![5], j: 4, i: 2 }.is_valid_for(&k));
        assert!(CommutatorWord { kind: WordKind::Group, prefix: vec![], j: 4, i: 2 }.is_valid_for(&k));
    }
}
