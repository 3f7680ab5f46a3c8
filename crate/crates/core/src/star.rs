//! Recognition of complexes of the form `C_p` or `C_p * Δ^q` with `p >= 4`.

use serde::Serialize;

use crate::bits::{iter_bits, popcount, Mask};
use crate::complex::SimplicialComplex;

/// Whether a complex is a `p`-cycle, possibly joined with a simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum StarClassification {
    /// `cone` holds the labels of the simplex factor (empty when `K = C_p`);
    /// `cycle` lists the cycle's labels in cyclic order.
    Matches {
        p: usize,
        cone: Vec<u32>,
        cycle: Vec<u32>,
    },
    DoesNotMatch {
        reason: Mismatch,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    NotFlag { witness: Vec<u32> },
    RemainderNotCycle,
    CycleTooShort { p: usize },
}

impl StarClassification {
    pub fn matches(&self) -> bool {
        matches!(self, StarClassification::Matches { .. })
    }

    /// Cycle length when matching.
    pub fn cycle_length(&self) -> Option<usize> {
        match self {
            StarClassification::Matches { p, .. } => Some(*p),
            StarClassification::DoesNotMatch { .. } => None,
        }
    }
}

/// Decide whether `k` is `C_p` or `C_p * Δ^q`.
///
/// Universal vertices are peeled off in one step; for `p >= 4` no cycle vertex is
/// universal, so what remains must be exactly the cycle.
pub fn classify_star_condition(k: &SimplicialComplex) -> StarClassification {
    let flag = k.is_flag();
    if let Some(witness) = flag.witness {
        return StarClassification::DoesNotMatch { reason: Mismatch::NotFlag { witness } };
    }
    let g = k.one_skeleton();
    let cone = g.universal_vertices();
    let rest = k.vertices().full_mask() & !cone;
    if !g.induces_cycle(rest) {
        return StarClassification::DoesNotMatch { reason: Mismatch::RemainderNotCycle };
    }
    let p = popcount(rest);
    if p < 4 {
        return StarClassification::DoesNotMatch { reason: Mismatch::CycleTooShort { p } };
    }
    StarClassification::Matches {
        p,
        cone: k.vertices().labels_of(cone),
        cycle: cycle_order(&g, rest).into_iter().map(|v| k.vertices().label(v)).collect(),
    }
}

fn cycle_order(g: &crate::graph::Graph, cycle: Mask) -> Vec<usize> {
    let start = cycle.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = iter_bits(g.neighbours(cur) & cycle).filter(|&v| v != prev).min().unwrap();
        if next == start || order.len() == popcount(cycle) {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_match_without_cone() {
        let c5 = SimplicialComplex::cycle(5).unwrap();
        assert_eq!(
            classify_star_condition(&c5),
            StarClassification::Matches { p: 5, cone: vec![], cycle: vec![1, 2, 3, 4, 5] }
        );
    }

    #[test]
    fn square_cone_matches_with_cone() {
        let b = SimplicialComplex::from_facets_on(5, &[[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5]]).unwrap();
        let c = classify_star_condition(&b);
        assert!(matches!(c, StarClassification::Matches { p: 4, ref cone, .. } if cone == &vec![5]));
    }

    #[test]
    fn two_triangles_do_not_match() {
        let a = SimplicialComplex::from_facets_on(5, &[vec![1, 2, 5], vec![2, 3, 5], vec![1, 4], vec![3, 4]]).unwrap();
        assert_eq!(
            classify_star_condition(&a),
            StarClassification::DoesNotMatch { reason: Mismatch::RemainderNotCycle }
        );
    }

    #[test]
    fn non_flag_and_degenerate_inputs() {
        let c3 = SimplicialComplex::cycle(3).unwrap();
        assert!(matches!(
            classify_star_condition(&c3),
            StarClassification::DoesNotMatch { reason: Mismatch::NotFlag { .. } }
        ));
        for q in 0..4 {
            let s = SimplicialComplex::simplex(q).unwrap();
            assert!(!classify_star_condition(&s).matches());
        }
        assert!(!classify_star_condition(&SimplicialComplex::discrete(0).unwrap()).matches());
    }
}
