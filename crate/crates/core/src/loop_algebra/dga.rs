use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::series::GradedSeries;
use super::SphereProductSum;
use crate::error::{Error, Result};
use crate::homology::{smith_normal_form, HomologyGroup, IntMatrix};

/// Noncommutative polynomial: word (generator indices) to coefficient, zero terms omitted.
pub type Poly = BTreeMap<Vec<usize>, i64>;

/// Default cap on the number of words materialized per homology computation.
pub const DEFAULT_BASIS_BUDGET: usize = 4_000_000;

/// A free (tensor) algebra on graded generators with a degree `-1` differential
/// specified on generators and extended by the graded Leibniz rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeDGAlgebra {
    names: Vec<String>,
    degrees: Vec<usize>,
    differentials: Vec<Poly>,
}

impl FreeDGAlgebra {
    /// Checks positivity of degrees and that each `d(g)` is homogeneous of degree `deg g - 1`.
    pub fn new(generators: Vec<(String, usize)>, differentials: Vec<Poly>) -> Result<Self> {
        if generators.len() != differentials.len() {
            return Err(Error::InvalidDifferential("one differential per generator required".into()));
        }
        let (names, degrees): (Vec<_>, Vec<_>) = generators.into_iter().unzip();
        if let Some(pos) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::InvalidDifferential(format!("generator {} has degree 0", names[pos])));
        }
        let alg = FreeDGAlgebra { names, degrees, differentials };
        for (g, d) in alg.differentials.iter().enumerate() {
            for word in d.keys() {
                if word.iter().any(|&x| x >= alg.names.len()) {
                    return Err(Error::InvalidDifferential(format!("d({}) uses an unknown generator", alg.names[g])));
                }
                if alg.word_degree(word) + 1 != alg.degrees[g] {
                    return Err(Error::InvalidDifferential(format!(
                        "d({}) is not of degree {}",
                        alg.names[g],
                        alg.degrees[g] as isize - 1
                    )));
                }
            }
        }
        Ok(alg)
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, usize)> {
        self.names.iter().map(String::as_str).zip(self.degrees.iter().copied())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, generator: usize) -> usize {
        self.degrees[generator]
    }

    pub fn differential(&self, generator: usize) -> &Poly {
        &self.differentials[generator]
    }

    pub fn word_degree(&self, word: &[usize]) -> usize {
        word.iter().map(|&g| self.degrees[g]).sum()
    }

    /// Render a polynomial with generator names, e.g. `a1 b1 - b1 a1`.
    pub fn render(&self, p: &Poly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (word, &c)) in p.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                out.push_str(&format!(" {sign} "));
            } else if c < 0 {
                out.push('-');
            }
            if c.abs() != 1 {
                out.push_str(&format!("{}", c.abs()));
            }
            let w: Vec<&str> = word.iter().map(|&g| self.names[g].as_str()).collect();
            out.push_str(&w.join(" "));
        }
        out
    }

    /// `d(c · word)` accumulated into `out`.
    fn d_word_into(&self, word: &[usize], coeff: i64, out: &mut Poly) -> Result<()> {
        let mut parity = 0;
        for (i, &g) in word.iter().enumerate() {
            let sign = if parity % 2 == 0 { coeff } else { coeff.checked_neg().ok_or(Error::Overflow)? };
            for (mono, &c) in &self.differentials[g] {
                let mut w = Vec::with_capacity(word.len() + mono.len() - 1);
                w.extend_from_slice(&word[..i]);
                w.extend_from_slice(mono);
                w.extend_from_slice(&word[i + 1..]);
                let delta = sign.checked_mul(c).ok_or(Error::Overflow)?;
                let slot = out.entry(w).or_insert(0);
                *slot = slot.checked_add(delta).ok_or(Error::Overflow)?;
            }
            parity += self.degrees[g];
        }
        out.retain(|_, c| *c != 0);
        Ok(())
    }

    pub fn d_word(&self, word: &[usize]) -> Result<Poly> {
        let mut out = Poly::new();
        self.d_word_into(word, 1, &mut out)?;
        Ok(out)
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::new();
        for (w, &c) in p {
            self.d_word_into(w, c, &mut out)?;
        }
        Ok(out)
    }

    /// `d(d(g)) = 0` for every generator.
    pub fn d_squared_vanishes(&self) -> bool {
        self.differentials.iter().all(|d| self.apply(d).is_ok_and(|dd| dd.is_empty()))
    }

    fn is_active(&self, g: usize) -> bool {
        !self.differentials[g].is_empty()
    }
}

fn graded_bracket(a: usize, b: usize, deg_a: usize, deg_b: usize) -> Poly {
    let mut p = Poly::new();
    *p.entry(vec![a, b]).or_insert(0) += 1;
    *p.entry(vec![b, a]).or_insert(0) += if (deg_a * deg_b + 1).is_multiple_of(2) { 1 } else { -1 };
    p.retain(|_, c| *c != 0);
    p
}

fn add_into(target: &mut Poly, p: Poly) {
    for (w, c) in p {
        *target.entry(w).or_insert(0) += c;
    }
    target.retain(|_, c| *c != 0);
}

/// Largest number of summands accepted when building a model.
const MAX_MODEL_SUMMANDS: u64 = 4096;

/// Adams–Hilton model of `M` (or of the half-smash `M ⋊ S^1`).
///
/// Generators are `a_i` (degree `d_i - 1`), `b_i` (degree `d - d_i - 1`) and `z`
/// (degree `d - 1`) with `d(z) = Σ [a_i, b_i]`; the half-smash adds `x_i` (degree
/// `d_i`), `y_i` (degree `d - d_i`) and `w` (degree `d`) with
/// `d(w) = Σ ([a_i, y_i] + [x_i, b_i])`. Brackets are `[u, v] = uv + (-1)^{|u||v|+1} vu`.
pub fn adams_hilton_model(m: &SphereProductSum, half_smash: bool) -> Result<FreeDGAlgebra> {
    let k = m.summands();
    if k > MAX_MODEL_SUMMANDS {
        return Err(Error::InvalidSphereProduct(format!(
            "{k} summands exceed the model limit of {MAX_MODEL_SUMMANDS}"
        )));
    }
    let k = k as usize;
    let d = m.dimension();
    let dims: Vec<usize> = m.pair_dims().collect();
    let mut gens: Vec<(String, usize)> = Vec::new();
    let suffix = |i: usize| if k == 1 { String::new() } else { (i + 1).to_string() };
    for (i, &di) in dims.iter().enumerate() {
        gens.push((format!("a{}", suffix(i)), di - 1));
    }
    for (i, &di) in dims.iter().enumerate() {
        gens.push((format!("b{}", suffix(i)), d - di - 1));
    }
    let z = gens.len();
    gens.push(("z".into(), d - 1));
    let mut dz = Poly::new();
    for i in 0..k {
        add_into(&mut dz, graded_bracket(i, k + i, gens[i].1, gens[k + i].1));
    }
    let mut diffs = vec![Poly::new(); z];
    diffs.push(dz);
    if half_smash {
        let x0 = gens.len();
        for (i, &di) in dims.iter().enumerate() {
            gens.push((format!("x{}", suffix(i)), di));
        }
        for (i, &di) in dims.iter().enumerate() {
            gens.push((format!("y{}", suffix(i)), d - di));
        }
        gens.push(("w".into(), d));
        let mut dw = Poly::new();
        for i in 0..k {
            let (a, b, x, y) = (i, k + i, x0 + i, x0 + k + i);
            add_into(&mut dw, graded_bracket(a, y, gens[a].1, gens[y].1));
            add_into(&mut dw, graded_bracket(x, b, gens[x].1, gens[b].1));
        }
        diffs.extend(vec![Poly::new(); 2 * k]);
        diffs.push(dw);
    }
    FreeDGAlgebra::new(gens, diffs)
}

/// Homology of a free DGA, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DgaHomology {
    pub groups: Vec<HomologyGroup>,
    /// `dim C_n`, the number of words of degree `n`.
    pub chain_ranks: Vec<u128>,
}

impl DgaHomology {
    pub fn ranks(&self) -> GradedSeries {
        GradedSeries::new(self.groups.iter().map(|g| g.free_rank as i128).collect())
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }
}

pub fn dga_homology_ranks(a: &FreeDGAlgebra, n: usize) -> Result<GradedSeries> {
    Ok(dga_homology(a, n, DEFAULT_BASIS_BUDGET)?.ranks())
}

/// `H_k` for `k = 0..=n` from the word basis.
///
/// Words without a generator of nonzero differential are cycles that never appear in
/// a boundary column, so only words containing such a generator are materialized;
/// the other dimensions come from counting. Each `d_k` is then a small integer
/// matrix whose rows are the words actually hit.
pub fn dga_homology(a: &FreeDGAlgebra, n: usize, budget: usize) -> Result<DgaHomology> {
    let chain_ranks = word_counts(a, n + 1)?;
    let active: Vec<usize> = (0..a.degrees.len()).filter(|&g| a.is_active(g)).collect();
    let min_active = active.iter().map(|&g| a.degrees[g]).min();
    let reach = min_active.map_or(0, |m| (n + 1).saturating_sub(m));
    let all = words_by_degree(a, reach, |_| true, budget)?;
    let passive = words_by_degree(a, reach, |g| !a.is_active(g), budget)?;

    // boundary matrices d_k : C_k -> C_{k-1} for k = 1..=n+1
    let forms: Vec<(usize, Vec<_>)> = (1..=n + 1)
        .into_par_iter()
        .map(|k| -> Result<(usize, Vec<_>)> {
            let mut cols: Vec<Poly> = Vec::new();
            let mut seen = 0usize;
            for &g in &active {
                let dg = a.degrees[g];
                if dg > k {
                    continue;
                }
                for (du, us) in passive.iter().enumerate().take(k - dg + 1) {
                    let dv = k - dg - du;
                    for u in us {
                        for v in &all[dv] {
                            seen += 1;
                            if seen > budget {
                                return Err(Error::BasisBudget { degree: k, budget });
                            }
                            let mut w = Vec::with_capacity(u.len() + v.len() + 1);
                            w.extend_from_slice(u);
                            w.push(g);
                            w.extend_from_slice(v);
                            let dw = a.d_word(&w)?;
                            if !dw.is_empty() {
                                cols.push(dw);
                            }
                        }
                    }
                }
            }
            let mut rows: HashMap<&Vec<usize>, usize> = HashMap::new();
            for col in &cols {
                for w in col.keys() {
                    let next = rows.len();
                    rows.entry(w).or_insert(next);
                }
            }
            let mut m = IntMatrix::zeros(rows.len(), cols.len());
            for (c, col) in cols.iter().enumerate() {
                for (w, &x) in col {
                    m.set(rows[w], c, x);
                }
            }
            let snf = smith_normal_form(&m);
            Ok((snf.rank, snf.torsion()))
        })
        .collect::<Result<_>>()?;

    let mut groups = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let out_rank = if k == 0 { 0 } else { forms[k - 1].0 };
        let (in_rank, torsion) = (&forms[k].0, forms[k].1.clone());
        let dim = usize::try_from(chain_ranks[k]).map_err(|_| Error::BasisBudget { degree: k, budget })?;
        groups.push(HomologyGroup::new(dim - out_rank - in_rank, torsion));
    }
    Ok(DgaHomology { groups, chain_ranks: chain_ranks[..=n].to_vec() })
}

/// Number of words of each degree `0..=n`.
fn word_counts(a: &FreeDGAlgebra, n: usize) -> Result<Vec<u128>> {
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for k in 1..=n {
        let mut acc: u128 = 0;
        for &d in &a.degrees {
            if d <= k {
                acc = acc.checked_add(c[k - d]).ok_or(Error::SeriesOverflow(k))?;
            }
        }
        c[k] = acc;
    }
    Ok(c)
}

fn words_by_degree(
    a: &FreeDGAlgebra,
    n: usize,
    allow: impl Fn(usize) -> bool,
    budget: usize,
) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    out[0].push(Vec::new());
    let mut total = 1usize;
    for k in 1..=n {
        let mut level = Vec::new();
        for g in (0..a.degrees.len()).filter(|&g| allow(g)) {
            let d = a.degrees[g];
            if d > k {
                continue;
            }
            for w in &out[k - d] {
                let mut x = w.clone();
                x.push(g);
                level.push(x);
            }
            total += out[k - d].len();
            if total > budget {
                return Err(Error::BasisBudget { degree: k, budget });
            }
        }
        out[k] = level;
    }
    Ok(out)
}
