//! Freeness, one-relator and Golod properties of flag complexes, each decided by a
//! combinatorial route and a homological route so the two can be compared.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::Mask;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{smith_normal_form, BigradedTable, HochsterTable, HomologyGroup, IntMatrix};
use crate::star::{classify_star_condition, StarClassification};

/// Everything the classifiers say about one complex.
///
/// The group and algebra verdicts are `None` for non-flag input, where the
/// characterizations do not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub flag: bool,
    pub chordal: bool,
    pub free_group: Option<bool>,
    /// Combinatorial route: `K = C_p` or `C_p * Δ^q`.
    pub one_relator_group: Option<bool>,
    /// Homological route: `H_2(R_K) = Z`.
    pub one_relator_group_homological: Option<bool>,
    /// Homological route through the row `H_{2-j,2j}(Z_K)`.
    pub one_relator_algebra: Option<bool>,
    pub golod_flag: Option<bool>,
    pub minimally_non_golod_flag: Option<bool>,
    pub star_condition: StarClassification,
    pub genus: Option<u64>,
    /// Vertex lists backing the verdicts: a missing face, a chordless cycle, the
    /// vertex whose deletion stays non-Golod.
    pub witnesses: BTreeMap<String, Vec<u32>>,
}

pub fn classify(k: &SimplicialComplex) -> ClassificationReport {
    classify_with_table(k, &HochsterTable::compute(k))
}

/// [`classify`] reusing an already computed table of full-subcomplex homology.
pub fn classify_with_table(k: &SimplicialComplex, table: &HochsterTable) -> ClassificationReport {
    let flag = k.is_flag();
    let g = k.one_skeleton();
    let chordal = g.is_chordal();
    let star = classify_star_condition(k);
    let mut witnesses = BTreeMap::new();
    if let Some(w) = &flag.witness {
        witnesses.insert("missing_face".to_string(), w.clone());
    }
    if let Some(w) = &chordal.witness {
        witnesses.insert("chordless_cycle".to_string(), w.clone());
    }
    let genus = star.cycle_length().and_then(|p| surface_genus(p).ok());
    if !flag.flag {
        return ClassificationReport {
            flag: false,
            chordal: chordal.chordal,
            free_group: None,
            one_relator_group: None,
            one_relator_group_homological: None,
            one_relator_algebra: None,
            golod_flag: None,
            minimally_non_golod_flag: None,
            star_condition: star,
            genus,
            witnesses,
        };
    }
    let h_r = table.homology_r();
    let bigraded = table.bigraded_z();
    let mng = minimally_non_golod_graph(&g);
    if let Some(v) = mng.non_golod_deletion {
        witnesses.insert("non_golod_deletion".to_string(), vec![v]);
    }
    ClassificationReport {
        flag: true,
        chordal: chordal.chordal,
        free_group: Some(chordal.chordal),
        one_relator_group: Some(star.matches()),
        one_relator_group_homological: Some(h_r.get(2).is_some_and(HomologyGroup::is_exactly_z)),
        one_relator_algebra: Some(one_relator_row(&bigraded)),
        golod_flag: Some(chordal.chordal),
        minimally_non_golod_flag: Some(mng.verdict),
        star_condition: star,
        genus,
        witnesses,
    }
}

fn require_flag(k: &SimplicialComplex) -> Result<()> {
    match k.is_flag().witness {
        Some(w) => Err(Error::NotFlag(w)),
        None => Ok(()),
    }
}

/// `RC'_K` is free exactly when the 1-skeleton is chordal.
pub fn is_free_commutator_group(k: &SimplicialComplex) -> Result<bool> {
    require_flag(k)?;
    Ok(k.one_skeleton().is_chordal().chordal)
}

pub fn one_relator_group_combinatorial(k: &SimplicialComplex) -> Result<bool> {
    require_flag(k)?;
    Ok(classify_star_condition(k).matches())
}

/// `H_2(R_K)` is exactly `Z`.
pub fn one_relator_group_homological(k: &SimplicialComplex) -> Result<bool> {
    require_flag(k)?;
    Ok(HochsterTable::compute(k).homology_r().get(2).is_some_and(HomologyGroup::is_exactly_z))
}

/// The row `H_{2-j,2j}(Z_K)` has a single nonzero entry, equal to `Z`, at some `j >= 4`.
pub fn one_relator_algebra_homological(k: &SimplicialComplex) -> Result<bool> {
    require_flag(k)?;
    Ok(one_relator_row(&HochsterTable::compute(k).bigraded_z()))
}

pub(crate) fn one_relator_row(table: &BigradedTable) -> bool {
    let mut row = table.nonzero().filter(|&(i, j2, _)| j2 / 2 == i + 2);
    match (row.next(), row.next()) {
        (Some((_, j2, g)), None) => j2 / 2 >= 4 && g.is_exactly_z(),
        _ => false,
    }
}

/// `H_k(R_K) = 0` for `k >= 3` and `H_{-i,2j}(Z_K) = 0` for `j - i >= 3`.
///
/// Both statements hold when `K` satisfies the star condition; for other complexes
/// this simply reports whether they happen to hold.
pub fn vanishing_check(k: &SimplicialComplex) -> bool {
    vanishing_check_with_table(&HochsterTable::compute(k))
}

pub(crate) fn vanishing_check_with_table(table: &HochsterTable) -> bool {
    table.homology_r().iter().skip(3).all(HomologyGroup::is_zero) && table.bigraded_z().vanishes_beyond(3)
}

/// For flag `K`, Golod exactly when the 1-skeleton is chordal.
pub fn golod_flag(k: &SimplicialComplex) -> Result<bool> {
    require_flag(k)?;
    Ok(k.one_skeleton().is_chordal().chordal)
}

/// Not Golod, while every single-vertex deletion `K_{[m] \ {i}}` is Golod.
pub fn minimally_non_golod_flag(k: &SimplicialComplex) -> Result<bool> {
    require_flag(k)?;
    Ok(minimally_non_golod_graph(&k.one_skeleton()).verdict)
}

struct MinimalityCheck {
    verdict: bool,
    non_golod_deletion: Option<u32>,
}

fn minimally_non_golod_graph(g: &Graph) -> MinimalityCheck {
    if g.is_chordal().chordal {
        return MinimalityCheck { verdict: false, non_golod_deletion: None };
    }
    let all = g.vertices().full_mask();
    for v in 0..g.num_vertices() {
        let rest: Mask = all & !(1 << v);
        if !induced_subgraph(g, rest).is_chordal().chordal {
            return MinimalityCheck { verdict: false, non_golod_deletion: Some(g.vertices().label(v)) };
        }
    }
    MinimalityCheck { verdict: true, non_golod_deletion: None }
}

fn induced_subgraph(g: &Graph, within: Mask) -> Graph {
    let positions: Vec<usize> = crate::bits::iter_bits(within).collect();
    let adj = positions.iter().map(|&p| crate::bits::compress(g.neighbours(p) & within, within)).collect();
    Graph::from_adjacency(g.vertices().restrict(within), adj)
}

/// Genus `(p - 4) 2^{p-3} + 1` of the surface `R_{C_p}`.
pub fn surface_genus(p: usize) -> Result<u64> {
    if p < 4 {
        return Err(Error::CycleTooShort(p as u32));
    }
    let shift = u32::try_from(p - 3).map_err(|_| Error::Overflow)?;
    (p as u64 - 4)
        .checked_mul(1u64.checked_shl(shift).filter(|_| shift < 64).ok_or(Error::Overflow)?)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow)
}

/// A word in the free group on `x_1, ..., x_l`, as `(index, ±1)` letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorWord {
    letters: Vec<(usize, i8)>,
}

impl RelatorWord {
    /// Rejects empty words, zero indices, exponents other than ±1, and adjacent
    /// inverse pairs.
    pub fn new(letters: Vec<(usize, i8)>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidRelator("empty word".into()));
        }
        for (pos, &(g, e)) in letters.iter().enumerate() {
            if g == 0 {
                return Err(Error::InvalidRelator("generator indices start at 1".into()));
            }
            if e != 1 && e != -1 {
                return Err(Error::InvalidRelator(format!("exponent {e} is not ±1")));
            }
            if pos > 0 && letters[pos - 1] == (g, -e) {
                return Err(Error::UnreducedWord(pos));
            }
        }
        Ok(RelatorWord { letters })
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Exponent sum of each generator `x_1..x_l`.
    pub fn exponent_sums(&self, l: usize) -> Vec<i64> {
        let mut e = vec![0; l];
        for &(g, s) in &self.letters {
            e[g - 1] += i64::from(s);
        }
        e
    }
}

/// Parses whitespace-separated tokens `x3`, `x3^-1`, `x1^2`; powers expand into
/// repeated letters.
impl FromStr for RelatorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::InvalidRelator(format!("cannot parse `{tok}`"));
            let body = tok.strip_prefix('x').ok_or_else(bad)?;
            let (index, power) = match body.split_once('^') {
                Some((i, p)) => (i, p.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let index: usize = index.parse().map_err(|_| bad())?;
            if power == 0 {
                return Err(bad());
            }
            let sign = if power > 0 { 1 } else { -1 };
            for _ in 0..power.unsigned_abs() {
                letters.push((index, sign));
            }
        }
        RelatorWord::new(letters)
    }
}

impl fmt::Display for RelatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.letters.iter().map(|&(g, e)| if e == 1 { format!("x{g}") } else { format!("x{g}^-1") }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `H_0, H_1, H_2` of the presentation complex of `<x_1..x_l | r>`; higher groups vanish.
///
/// The cellular chain complex is `Z --e--> Z^l --0--> Z` with `e` the exponent-sum
/// vector, so `H_1 = Z^l / im e` and `H_2 = ker e`.
pub fn y_space_homology(l: usize, r: &RelatorWord) -> Result<Vec<HomologyGroup>> {
    if l == 0 {
        return Err(Error::InvalidRelator("need at least one generator".into()));
    }
    if r.max_generator() > l {
        return Err(Error::InvalidRelator(format!("generator x{} outside x1..x{l}", r.max_generator())));
    }
    let e = r.exponent_sums(l);
    let snf = smith_normal_form(&IntMatrix::from_rows(&[e]));
    Ok(vec![HomologyGroup::free(1), HomologyGroup::new(l - snf.rank, snf.torsion()), HomologyGroup::free(1 - snf.rank)])
}
