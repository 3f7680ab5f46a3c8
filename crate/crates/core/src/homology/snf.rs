//! Dense integer matrices and their Smith normal form.
//!
//! Elimination runs on `i64` with checked arithmetic and restarts on `BigInt`
//! when an intermediate value overflows, so results are exact for any input.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product; `None` on `i64` overflow.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a.checked_mul(other.get(k, j))?.checked_add(out.get(i, j))?;
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn smith_normal_form(&self) -> SmithForm {
        smith_normal_form(self)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ...` and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigUint>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let small = Dense { rows: m.rows, cols: m.cols, data: m.data.clone() };
    let diag = match eliminate(small) {
        Some(d) => d.into_iter().map(|x| BigUint::from(x.unsigned_abs())).collect(),
        None => {
            let big = Dense { rows: m.rows, cols: m.cols, data: m.data.iter().map(|&x| BigInt::from(x)).collect() };
            eliminate(big)
                .expect("bigint elimination cannot overflow")
                .into_iter()
                .map(|x| x.magnitude().clone())
                .collect()
        }
    };
    let diagonal = invariant_factors(diag);
    SmithForm { rank: diagonal.len(), diagonal }
}

/// Turn a list of nonzero diagonal entries into invariant-factor form.
pub fn invariant_factors(mut diag: Vec<BigUint>) -> Vec<BigUint> {
    diag.retain(|d| !d.is_zero());
    diag.sort();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if (&diag[j] % &diag[i]).is_zero() {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

trait Entry: Clone {
    fn is_zero(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    fn quotient(&self, d: &Self) -> Option<Self>;
    /// `self - q * p`, or `None` on overflow.
    fn minus_product(&self, q: &Self, p: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quotient(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn minus_product(&self, q: &Self, p: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*p)?)
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn quotient(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn minus_product(&self, q: &Self, p: &Self) -> Option<Self> {
        Some(self - q * p)
    }
}

struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Entry> Dense<T> {
    fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[target] -= q * row[source], for columns >= from
    fn row_op(&mut self, target: usize, source: usize, q: &T, from: usize) -> Option<()> {
        for c in from..self.cols {
            let s = self.at(source, c).clone();
            if s.is_zero() {
                continue;
            }
            let idx = target * self.cols + c;
            self.data[idx] = self.data[idx].minus_product(q, &s)?;
        }
        Some(())
    }

    fn col_op(&mut self, target: usize, source: usize, q: &T, from: usize) -> Option<()> {
        for r in from..self.rows {
            let s = self.at(r, source).clone();
            if s.is_zero() {
                continue;
            }
            let idx = r * self.cols + target;
            self.data[idx] = self.data[idx].minus_product(q, &s)?;
        }
        Some(())
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let v = self.at(r, c);
                if !v.is_zero() && best.is_none_or(|(br, bc)| v.magnitude_lt(self.at(br, bc))) {
                    best = Some((r, c));
                }
            }
        }
        best
    }
}

/// Diagonalize; returns the nonzero diagonal entries (not yet in divisibility order).
fn eliminate<T: Entry>(mut m: Dense<T>) -> Option<Vec<T>> {
    let mut diag = Vec::new();
    let steps = m.rows.min(m.cols);
    for t in 0..steps {
        let Some((r, c)) = m.smallest_in(t) else { break };
        m.swap_rows(t, r);
        m.swap_cols(t, c);
        loop {
            let mut dirty = false;
            for i in t + 1..m.rows {
                if m.at(i, t).is_zero() {
                    continue;
                }
                let q = m.at(i, t).quotient(m.at(t, t))?;
                m.row_op(i, t, &q, t)?;
                dirty |= !m.at(i, t).is_zero();
            }
            for j in t + 1..m.cols {
                if m.at(t, j).is_zero() {
                    continue;
                }
                let q = m.at(t, j).quotient(m.at(t, t))?;
                m.col_op(j, t, &q, t)?;
                dirty |= !m.at(t, j).is_zero();
            }
            if !dirty {
                break;
            }
            // a remainder survived: move the smallest entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t + 1..m.rows {
                let v = m.at(i, t);
                if !v.is_zero() && v.magnitude_lt(m.at(best.0, best.1)) {
                    best = (i, t);
                }
            }
            for j in t + 1..m.cols {
                let v = m.at(t, j);
                if !v.is_zero() && v.magnitude_lt(m.at(best.0, best.1)) {
                    best = (t, j);
                }
            }
            m.swap_rows(t, best.0);
            m.swap_cols(t, best.1);
        }
        diag.push(m.at(t, t).clone());
    }
    Some(diag)
}

/// Rank of an integer matrix (equal to its rank over the rationals).
pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank
}

pub(crate) fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}
