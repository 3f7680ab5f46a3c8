use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::dga::{adams_hilton_model, dga_homology_ranks};
use super::SphereProductSum;
use crate::error::{Error, Result};

/// Largest truncation accepted by the series routines.
pub const MAX_TRUNCATION: usize = 4096;

/// Integer power series `c_0 + c_1 t + ... + c_N t^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSeries {
    coefficients: Vec<i128>,
}

impl GradedSeries {
    pub fn new(coefficients: Vec<i128>) -> Self {
        assert!(!coefficients.is_empty(), "a series needs at least c_0");
        GradedSeries { coefficients }
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<i128> {
        self.coefficients.get(n).copied()
    }

    pub fn truncated(&self, n: usize) -> GradedSeries {
        GradedSeries { coefficients: self.coefficients[..=n.min(self.truncation())].to_vec() }
    }

    /// `1 / poly` up to `t^n`; `poly[0]` must be 1.
    pub fn inverse_of_polynomial(poly: &[i128], n: usize) -> Result<Self> {
        if n > MAX_TRUNCATION {
            return Err(Error::TruncationTooLarge(n));
        }
        assert_eq!(poly.first(), Some(&1), "constant term must be 1");
        let mut c = vec![0i128; n + 1];
        c[0] = 1;
        for k in 1..=n {
            let mut acc: i128 = 0;
            for (i, &p) in poly.iter().enumerate().take(k + 1).skip(1) {
                if p != 0 {
                    acc = p.checked_mul(c[k - i]).and_then(|x| acc.checked_sub(x)).ok_or(Error::SeriesOverflow(k))?;
                }
            }
            c[k] = acc;
        }
        Ok(GradedSeries { coefficients: c })
    }

    /// Smallest degree where the two series differ, over their common range.
    pub fn first_difference(&self, other: &GradedSeries) -> Option<usize> {
        self.coefficients.iter().zip(&other.coefficients).position(|(a, b)| a != b)
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(i128::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for GradedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GradedSeries", 2)?;
        st.serialize_field("truncation", &self.truncation())?;
        st.serialize_field("coefficients", &self.coefficients)?;
        st.end()
    }
}

/// Degrees `d_i - 1` and `d - d_i - 1` of the loop generators `a_i`, `b_i`.
fn generator_degrees(m: &SphereProductSum) -> Vec<(usize, usize, u64)> {
    m.multiplicities().iter().map(|(&di, &c)| (di - 1, m.dimension() - di - 1, c)).collect()
}

/// `1 / (1 - Σ_i (t^{d_i-1} + t^{d-d_i-1}) + t^{d-2})` truncated at `t^n`.
pub fn poincare_series_closed(m: &SphereProductSum, n: usize) -> Result<GradedSeries> {
    let d = m.dimension();
    let mut poly = vec![0i128; d - 1];
    poly[0] = 1;
    for (da, db, c) in generator_degrees(m) {
        poly[da] -= i128::from(c);
        poly[db] -= i128::from(c);
    }
    poly[d - 2] += 1;
    GradedSeries::inverse_of_polynomial(&poly, n)
}

/// Count words in the letters `a_i`, `b_i` with no consecutive factor `a_1 b_1`,
/// graded by total letter degree.
///
/// `designated` is the `d_i` of the summand playing the role of `(a_1, b_1)`.
pub fn rank_oracle_monomials(m: &SphereProductSum, n: usize, designated: usize) -> Result<GradedSeries> {
    if n > MAX_TRUNCATION {
        return Err(Error::TruncationTooLarge(n));
    }
    if !m.multiplicities().contains_key(&designated) {
        return Err(Error::InvalidSphereProduct(format!("no summand with d_i = {designated}")));
    }
    let a1 = designated - 1;
    let b1 = m.dimension() - designated - 1;
    // plain letters other than a_1 and b_1, as (degree, count)
    let mut others: Vec<(usize, i128)> = Vec::new();
    for (da, db, c) in generator_degrees(m) {
        let c = i128::from(c) - i128::from(da == a1 && db == b1);
        if c > 0 {
            others.push((da, c));
            others.push((db, c));
        }
    }
    // free[w]: words of weight w not ending in a_1; ends_a[w]: words ending in a_1
    let mut free = vec![0i128; n + 1];
    let mut ends_a = vec![0i128; n + 1];
    free[0] = 1;
    let add =
        |slot: &mut i128, x: i128, w: usize| slot.checked_add(x).map(|v| *slot = v).ok_or(Error::SeriesOverflow(w));
    for w in 1..=n {
        let mut f = 0i128;
        for &(deg, count) in &others {
            if deg <= w {
                let prev = free[w - deg].checked_add(ends_a[w - deg]).ok_or(Error::SeriesOverflow(w))?;
                add(&mut f, count.checked_mul(prev).ok_or(Error::SeriesOverflow(w))?, w)?;
            }
        }
        if b1 <= w {
            add(&mut f, free[w - b1], w)?;
        }
        free[w] = f;
        if a1 <= w {
            ends_a[w] = free[w - a1].checked_add(ends_a[w - a1]).ok_or(Error::SeriesOverflow(w))?;
        }
    }
    let total = free
        .iter()
        .zip(&ends_a)
        .enumerate()
        .map(|(w, (x, y))| x.checked_add(*y).ok_or(Error::SeriesOverflow(w)))
        .collect::<Result<_>>()?;
    Ok(GradedSeries::new(total))
}

/// `1 / (1 - Σ_g t^{deg g} + t^r)` for every relation degree `1 <= r <= n`, and the
/// free algebra (`None`), over the given generator degrees.
pub fn single_relation_candidates(generator_degrees: &[usize], n: usize) -> Result<Vec<(Option<usize>, GradedSeries)>> {
    let top = generator_degrees.iter().copied().max().unwrap_or(0).max(n);
    let mut base = vec![0i128; top + 1];
    base[0] = 1;
    for &g in generator_degrees {
        base[g] -= 1;
    }
    let mut out = vec![(None, GradedSeries::inverse_of_polynomial(&base, n)?)];
    for r in 1..=n {
        let mut poly = base.clone();
        poly[r] += 1;
        if poly[0] != 1 {
            continue;
        }
        out.push((Some(r), GradedSeries::inverse_of_polynomial(&poly, n)?));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deviation {
    /// `None` for the free algebra on the same generators.
    pub relation_degree: Option<usize>,
    pub candidate: GradedSeries,
    pub first_difference: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeviationReport {
    pub observed: GradedSeries,
    pub generator_degrees: Vec<usize>,
    pub candidates: Vec<Deviation>,
    pub deviates_from_all: bool,
}

/// Compare the homology of the half-smash model `M ⋊ S^1` with every algebra on the
/// generators `a_i, b_i, x_i, y_i` and a single relation.
pub fn half_smash_deviation(m: &SphereProductSum, n: usize) -> Result<DeviationReport> {
    let model = adams_hilton_model(m, true)?;
    let observed = dga_homology_ranks(&model, n)?;
    let mut degrees = Vec::new();
    for di in m.pair_dims() {
        let d = m.dimension();
        degrees.extend([di - 1, d - di - 1, di, d - di]);
    }
    degrees.sort_unstable();
    let candidates: Vec<Deviation> = single_relation_candidates(&degrees, n)?
        .into_iter()
        .map(|(relation_degree, candidate)| Deviation {
            relation_degree,
            first_difference: observed.first_difference(&candidate),
            candidate,
        })
        .collect();
    let deviates_from_all = candidates.iter().all(|c| c.first_difference.is_some());
    Ok(DeviationReport { observed, generator_degrees: degrees, candidates, deviates_from_all })
}

#[cfg(test)]
mod tests {
    use super::super::mcgavran;
    use super::*;

    fn coeffs(s: &GradedSeries) -> Vec<i128> {
        s.coefficients().to_vec()
    }

    #[test]
    fn closed_forms() {
        let s33 = SphereProductSum::new(6, &[3]).unwrap();
        assert_eq!(coeffs(&poincare_series_closed(&s33, 6).unwrap()), vec![1, 0, 2, 0, 3, 0, 4]);
        let m5 = mcgavran(5).unwrap();
        assert_eq!(coeffs(&poincare_series_closed(&m5, 5).unwrap()), vec![1, 0, 5, 5, 25, 49]);
    }

    #[test]
    fn recurrence_for_c5() {
        let c = poincare_series_closed(&mcgavran(5).unwrap(), 20).unwrap();
        let c = c.coefficients();
        for n in 5..=20 {
            assert_eq!(c[n], 5 * c[n - 2] + 5 * c[n - 3] - c[n - 5]);
        }
    }

    #[test]
    fn oracle_matches_closed_form() {
        let s33 = SphereProductSum::new(6, &[3]).unwrap();
        assert_eq!(coeffs(&rank_oracle_monomials(&s33, 6, 3).unwrap()), vec![1, 0, 2, 0, 3, 0, 4]);
        for p in 4..=7 {
            let m = mcgavran(p).unwrap();
            let closed = poincare_series_closed(&m, 16).unwrap();
            for &di in m.multiplicities().keys() {
                assert_eq!(rank_oracle_monomials(&m, 16, di).unwrap(), closed, "p={p} designated {di}");
            }
        }
        for (di, d) in [(2, 4), (2, 5), (3, 6), (3, 7)] {
            let m = SphereProductSum::new(d, &[di]).unwrap();
            assert_eq!(rank_oracle_monomials(&m, 18, di).unwrap(), poincare_series_closed(&m, 18).unwrap());
        }
    }

    #[test]
    fn degree_one_vanishes_for_cycles() {
        for p in 4..=10 {
            assert_eq!(poincare_series_closed(&mcgavran(p).unwrap(), 3).unwrap().get(1), Some(0));
        }
        let m = SphereProductSum::new(4, &[2]).unwrap();
        assert_eq!(poincare_series_closed(&m, 2).unwrap().get(1), Some(2));
    }

    #[test]
    fn guards() {
        let m = mcgavran(4).unwrap();
        assert_eq!(
            rank_oracle_monomials(&m, MAX_TRUNCATION + 1, 3),
            Err(Error::TruncationTooLarge(MAX_TRUNCATION + 1))
        );
        assert!(rank_oracle_monomials(&m, 4, 4).is_err());
        let big = mcgavran(20).unwrap();
        assert!(matches!(poincare_series_closed(&big, 4000), Err(Error::SeriesOverflow(_))));
    }

    #[test]
    fn candidates_include_the_single_relation_series() {
        let cands = single_relation_candidates(&[2, 2], 6).unwrap();
        let four = cands.iter().find(|(r, _)| *r == Some(4)).unwrap();
        assert_eq!(coeffs(&four.1), vec![1, 0, 2, 0, 3, 0, 4]);
        assert_eq!(cands[0].0, None);
    }
}
