//! Exhaustive sweeps over flag complexes on few vertices, checking that the
//! combinatorial and homological classifiers agree.
//!
//! Flag complexes on `[n]` are the clique complexes of labelled graphs, so the
//! sweep walks edge codes (see [`Graph::from_edge_code`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{iter_bits, Mask};
use crate::classifier::{classify_with_table, one_relator_row, vanishing_check_with_table, ClassificationReport};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{HochsterTable, HomologyGroup, HomologyReport};
use crate::star::{classify_star_condition, StarClassification};

/// Largest vertex count a sweep accepts.
pub const MAX_SWEEP_VERTICES: usize = 7;

/// Full counterexample records kept per report; the total is always counted.
pub const COUNTEREXAMPLE_RECORD_LIMIT: usize = 64;

fn edge_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn check_range(n: usize) -> Result<()> {
    if (1..=MAX_SWEEP_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::SweepRange(n))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: u32, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if used & (1 << v) == 0 {
                prefix.push(v);
                go(prefix, used | 1 << v, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// `(a, b) -> bit index` for `a < b`, in edge-code order.
fn pair_index(n: usize) -> Vec<Vec<u32>> {
    let mut idx = vec![vec![0; n]; n];
    for (bit, (a, b)) in edge_pairs(n).into_iter().enumerate() {
        idx[a][b] = bit as u32;
        idx[b][a] = bit as u32;
    }
    idx
}

fn relabel(code: u64, perm: &[usize], pairs: &[(usize, usize)], idx: &[Vec<u32>]) -> u64 {
    let mut out = 0u64;
    for (bit, &(a, b)) in pairs.iter().enumerate() {
        if code >> bit & 1 == 1 {
            out |= 1 << idx[perm[a]][perm[b]];
        }
    }
    out
}

fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Minimum edge code over all relabellings of the graph with edge code `code`.
pub fn canonical_code(n: usize, code: u64) -> Result<u64> {
    check_range(n)?;
    let (pairs, idx) = (edge_pairs(n), pair_index(n));
    Ok(permutations(n).iter().map(|p| relabel(code, p, &pairs, &idx)).min().unwrap_or(code))
}

/// Edge codes of the graphs to sweep at `n` vertices: all `2^{n(n-1)/2}` of them, or
/// with `dedup` the minimum code of each isomorphism class.
pub fn graph_codes(n: usize, dedup: bool) -> Result<Vec<u64>> {
    check_range(n)?;
    let total = 1u64 << edge_bits(n);
    if !dedup {
        return Ok((0..total).collect());
    }
    // scanning upward, the first unvisited code is the least member of its orbit
    let (pairs, idx, perms) = (edge_pairs(n), pair_index(n), permutations(n));
    let mut visited = vec![false; total as usize];
    let mut reps = Vec::new();
    for code in 0..total {
        if visited[code as usize] {
            continue;
        }
        reps.push(code);
        for p in &perms {
            visited[relabel(code, p, &pairs, &idx) as usize] = true;
        }
    }
    Ok(reps)
}

/// Clique complexes of the graphs selected by [`graph_codes`], in code order.
pub fn enumerate_flag_complexes(n: usize, dedup: bool) -> Result<impl Iterator<Item = SimplicialComplex>> {
    let codes = graph_codes(n, dedup)?;
    Ok(codes.into_iter().map(move |c| flag_complex_of(n, c)))
}

fn flag_complex_of(n: usize, code: u64) -> SimplicialComplex {
    let g = Graph::from_edge_code(n, code).expect("n within range");
    SimplicialComplex::clique_complex(&g).expect("small clique complexes fit the face budget")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Star condition ⇔ `H_2(R_K) = Z`.
    Thm3,
    /// Star condition ⇔ the row `H_{2-j,2j}(Z_K)` is a single `Z` at `j >= 4`.
    Thm5,
    /// Star condition ⇔ `K` minus its universal vertices is minimally non-Golod.
    Flagmng,
    /// Star condition ⇒ `H_k(R_K) = 0` for `k >= 3` and `H_{-i,2j}(Z_K) = 0` for `j - i >= 3`.
    Vanishing,
    /// Chordal 1-skeleton ⇔ `H_2(R_K) = 0`.
    ChordalFree,
    /// Golod ⇔ no induced cycle of length >= 4 ⇔ `H̃_{>=1}(K_J) = 0` for all `J`,
    /// and minimally non-Golod ⇔ `K` is a bare cycle `C_p`.
    Golod,
}

impl Check {
    pub const ALL: [Check; 6] =
        [Check::Thm3, Check::Thm5, Check::Flagmng, Check::Vanishing, Check::ChordalFree, Check::Golod];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm3 => "thm3",
            Check::Thm5 => "thm5",
            Check::Flagmng => "flagmng",
            Check::Vanishing => "vanishing",
            Check::ChordalFree => "chordal_free",
            Check::Golod => "golod",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse { line: 0, message: format!("unknown check `{s}`") })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_vertices: usize,
    pub dedup_isomorphism: bool,
    pub checks: BTreeSet<Check>,
}

impl SweepConfig {
    /// Labelled sweep up to `max_vertices`; at 7 vertices only `thm3` and
    /// `chordal_free` are enabled by default.
    pub fn new(max_vertices: usize) -> Result<Self> {
        check_range(max_vertices)?;
        let checks = if max_vertices >= 7 {
            BTreeSet::from([Check::Thm3, Check::ChordalFree])
        } else {
            Check::ALL.into_iter().collect()
        };
        Ok(SweepConfig { max_vertices, dedup_isomorphism: false, checks })
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_dedup(mut self, dedup: bool) -> Self {
        self.dedup_isomorphism = dedup;
        self
    }
}

/// Replaceable predicates, so the harness itself can be tested against a broken classifier.
#[derive(Clone, Copy)]
pub struct SweepHooks {
    pub chordal: fn(&Graph) -> bool,
    pub star: fn(&SimplicialComplex) -> bool,
}

impl Default for SweepHooks {
    fn default() -> Self {
        SweepHooks { chordal: |g| g.is_chordal().chordal, star: |k| classify_star_condition(k).matches() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub vertices: usize,
    pub edge_code: u64,
    pub check: Check,
    pub facets: Vec<Vec<u32>>,
    /// Verdict of the combinatorial side of the failed equivalence.
    pub combinatorial: bool,
    /// Verdict of the homological (or second) side.
    pub homological: bool,
    pub classification: ClassificationReport,
    pub homology: HomologyReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max_vertices: usize,
    pub dedup_isomorphism: bool,
    pub checks: Vec<Check>,
    pub complexes_checked: u64,
    /// Complexes checked at each vertex count.
    pub per_vertex_count: BTreeMap<usize, u64>,
    /// Per-property counts, e.g. how many complexes satisfied the star condition.
    pub tallies: BTreeMap<String, u64>,
    /// `(n, p, cone size)` of every star-condition complex, with multiplicity.
    pub star_shapes: BTreeMap<String, u64>,
    pub counterexample_total: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.counterexample_total == 0
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    run_sweep_with(cfg, SweepHooks::default())
}

#[derive(Default)]
struct Outcome {
    tallies: BTreeMap<&'static str, u64>,
    star_shape: Option<String>,
    failures: Vec<(Check, bool, bool)>,
}

pub fn run_sweep_with(cfg: &SweepConfig, hooks: SweepHooks) -> Result<SweepReport> {
    check_range(cfg.max_vertices)?;
    let mut report = SweepReport {
        max_vertices: cfg.max_vertices,
        dedup_isomorphism: cfg.dedup_isomorphism,
        checks: cfg.checks.iter().copied().collect(),
        complexes_checked: 0,
        per_vertex_count: BTreeMap::new(),
        tallies: BTreeMap::new(),
        star_shapes: BTreeMap::new(),
        counterexample_total: 0,
        counterexamples: Vec::new(),
    };
    for n in 1..=cfg.max_vertices {
        let codes = graph_codes(n, cfg.dedup_isomorphism)?;
        let outcomes: Vec<Outcome> = codes.par_iter().map(|&code| evaluate(n, code, cfg, &hooks)).collect();
        report.per_vertex_count.insert(n, codes.len() as u64);
        report.complexes_checked += codes.len() as u64;
        for (&code, out) in codes.iter().zip(outcomes) {
            for (name, c) in out.tallies {
                *report.tallies.entry(name.to_string()).or_insert(0) += c;
            }
            if let Some(shape) = out.star_shape {
                *report.star_shapes.entry(shape).or_insert(0) += 1;
            }
            for (check, combinatorial, homological) in out.failures {
                report.counterexample_total += 1;
                if report.counterexamples.len() < COUNTEREXAMPLE_RECORD_LIMIT {
                    report.counterexamples.push(counterexample(n, code, check, combinatorial, homological));
                }
            }
        }
    }
    Ok(report)
}

fn counterexample(n: usize, code: u64, check: Check, combinatorial: bool, homological: bool) -> Counterexample {
    let k = flag_complex_of(n, code);
    let table = HochsterTable::compute(&k);
    Counterexample {
        vertices: n,
        edge_code: code,
        check,
        facets: k.facet_labels(),
        combinatorial,
        homological,
        classification: classify_with_table(&k, &table),
        homology: HomologyReport::from_table(format!("n={n} code={code}"), &table),
    }
}

fn evaluate(n: usize, code: u64, cfg: &SweepConfig, hooks: &SweepHooks) -> Outcome {
    let g = Graph::from_edge_code(n, code).expect("n within range");
    let k = SimplicialComplex::clique_complex(&g).expect("small clique complexes fit the face budget");
    let table = HochsterTable::compute(&k);
    let mut out = Outcome::default();
    let star = (hooks.star)(&k);
    let chordal = (hooks.chordal)(&g);
    if star {
        *out.tallies.entry("star_condition").or_insert(0) += 1;
        if let StarClassification::Matches { p, cone, .. } = classify_star_condition(&k) {
            out.star_shape = Some(format!("n={n} p={p} cone={}", cone.len()));
        }
    }
    if chordal {
        *out.tallies.entry("chordal").or_insert(0) += 1;
    }
    let h_r = table.homology_r();
    let h2_exactly_z = h_r.get(2).is_some_and(HomologyGroup::is_exactly_z);
    let h2_zero = h_r.get(2).is_none_or(HomologyGroup::is_zero);
    for &check in &cfg.checks {
        let (lhs, rhs) = match check {
            Check::Thm3 => {
                let rhs = h2_exactly_z;
                if rhs {
                    *out.tallies.entry("h2_r_exactly_z").or_insert(0) += 1;
                }
                (star, rhs)
            }
            Check::Thm5 => {
                let rhs = one_relator_row(&table.bigraded_z());
                if rhs {
                    *out.tallies.entry("one_relator_row").or_insert(0) += 1;
                }
                (star, rhs)
            }
            Check::Flagmng => {
                let rest = g.vertices().full_mask() & !g.universal_vertices();
                let rhs = is_minimally_non_golod(&induced(&g, rest), hooks);
                (star, rhs)
            }
            Check::Vanishing => {
                if !star {
                    continue;
                }
                *out.tallies.entry("vanishing_checked").or_insert(0) += 1;
                (true, vanishing_check_with_table(&table))
            }
            Check::ChordalFree => (chordal, h2_zero),
            Check::Golod => {
                let no_cycles = g.find_induced_cycles(4).is_empty();
                let acyclic = table.iter().all(|(_, h)| h.nonnegative().iter().skip(1).all(|x| x.is_zero()));
                let mng = is_minimally_non_golod(&g, hooks);
                if mng {
                    *out.tallies.entry("minimally_non_golod").or_insert(0) += 1;
                }
                let bare_cycle = matches!(classify_star_condition(&k), StarClassification::Matches { ref cone, .. } if cone.is_empty());
                if chordal != no_cycles || no_cycles != acyclic {
                    out.failures.push((check, chordal, no_cycles && acyclic));
                }
                (mng, bare_cycle)
            }
        };
        if lhs != rhs {
            out.failures.push((check, lhs, rhs));
        }
    }
    out
}

fn induced(g: &Graph, within: Mask) -> Graph {
    let adj = iter_bits(within).map(|p| crate::bits::compress(g.neighbours(p) & within, within)).collect();
    Graph::from_adjacency(g.vertices().restrict(within), adj)
}

fn is_minimally_non_golod(g: &Graph, hooks: &SweepHooks) -> bool {
    if (hooks.chordal)(g) {
        return false;
    }
    let all = g.vertices().full_mask();
    (0..g.num_vertices()).all(|v| (hooks.chordal)(&induced(g, all & !(1 << v))))
}
