//! Integer lattices: canonical Hermite bases and Smith invariants.
//!
//! A [`SubgroupBasis`] is the row Hermite normal form of a sublattice of
//! `Z^ambient`: rows in echelon order, positive pivots, entries above each
//! pivot reduced into `[0, pivot)`. Rows can be appended incrementally.
//! Cokernel invariants are read off the Hermite form: rows with unit pivot
//! split off as trivial factors and only the remaining block is diagonalized.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Matrix from rows; all rows must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.row_vectors() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Integer vector stored as sorted `(column, nonzero value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVector(Vec<(usize, BigInt)>);

impl SparseVector {
    /// Sums duplicate columns and drops zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (i, c) in entries {
            *acc.entry(i).or_insert_with(BigInt::zero) += c;
        }
        SparseVector(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn from_dense(v: &[BigInt]) -> Self {
        SparseVector(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        )
    }

    pub fn to_dense(&self, len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in &self.0 {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = &(usize, BigInt)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn leading(&self) -> Option<(usize, &BigInt)> {
        self.0.first().map(|(i, c)| (*i, c))
    }

    pub fn last_index(&self) -> Option<usize> {
        self.0.last().map(|(i, _)| *i)
    }

    pub fn get(&self, col: usize) -> Option<&BigInt> {
        self.0
            .binary_search_by_key(&col, |(i, _)| *i)
            .ok()
            .map(|pos| &self.0[pos].1)
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: &BigInt, other: &SparseVector, b: &BigInt) -> SparseVector {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = j >= other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0);
            let take_right = i >= self.0.len() || (j < other.0.len() && other.0[j].0 < self.0[i].0);
            let (col, val) = if take_left {
                i += 1;
                (self.0[i - 1].0, a * &self.0[i - 1].1)
            } else if take_right {
                j += 1;
                (other.0[j - 1].0, b * &other.0[j - 1].1)
            } else {
                i += 1;
                j += 1;
                (self.0[i - 1].0, a * &self.0[i - 1].1 + b * &other.0[j - 1].1)
            };
            if !val.is_zero() {
                out.push((col, val));
            }
        }
        SparseVector(out)
    }

    /// `self -= q * other`, skipping the copy when `q` is zero.
    fn sub_scaled(&mut self, q: &BigInt, other: &SparseVector) {
        if q.is_zero() {
            return;
        }
        *self = self.combine(&BigInt::one(), other, &-q);
    }

    fn negate(&mut self) {
        for (_, c) in &mut self.0 {
            *c = -std::mem::take(c);
        }
    }
}

/// Canonical basis of a sublattice of `Z^ambient` in row Hermite normal form.
///
/// Every operation that returns leaves the basis canonical, so two bases of
/// the same lattice compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupBasis {
    ambient: usize,
    // keyed by pivot column; each row has a positive entry there
    rows: BTreeMap<usize, SparseVector>,
}

impl SubgroupBasis {
    pub fn new(ambient: usize) -> Self {
        SubgroupBasis {
            ambient,
            rows: BTreeMap::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in echelon order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVector> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.rows.iter().map(|(c, r)| (*c, r.get(*c).expect("pivot entry")))
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rank(), self.ambient);
        for (i, r) in self.rows.values().enumerate() {
            for (j, c) in r.entries() {
                m[(i, *j)] = c.clone();
            }
        }
        m
    }

    fn check_len(&self, v: &SparseVector) -> Result<()> {
        match v.last_index() {
            Some(i) if i >= self.ambient => Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: i + 1,
            }),
            _ => Ok(()),
        }
    }

    /// Adds generators to the lattice and restores the canonical form.
    pub fn extend(&mut self, vectors: impl IntoIterator<Item = SparseVector>) -> Result<()> {
        for v in vectors {
            self.check_len(&v)?;
            self.insert(v);
        }
        self.canonicalize();
        Ok(())
    }

    pub fn extend_dense<'a>(&mut self, vectors: impl IntoIterator<Item = &'a [BigInt]>) -> Result<()> {
        let mut sparse = Vec::new();
        for v in vectors {
            if v.len() != self.ambient {
                return Err(Error::DimensionMismatch {
                    expected: self.ambient,
                    found: v.len(),
                });
            }
            sparse.push(SparseVector::from_dense(v));
        }
        self.extend(sparse)
    }

    fn is_unit_pivot(&self, col: usize) -> bool {
        self.rows
            .get(&col)
            .is_some_and(|r| r.get(col).is_some_and(|p| p.is_one()))
    }

    // Rows are kept with zeros in every unit-pivot column other than their own,
    // which keeps them short when the lattice has small corank.
    fn clear_unit_columns(&self, v: &mut SparseVector) {
        let mut pos = 0;
        while pos < v.0.len() {
            let (col, coeff) = (v.0[pos].0, v.0[pos].1.clone());
            if self.is_unit_pivot(col) {
                v.sub_scaled(&coeff, &self.rows[&col]);
                // entries before `pos` are untouched by rows pivoting at `col`
            } else {
                pos += 1;
            }
        }
    }

    fn clear_column_elsewhere(&mut self, col: usize) {
        let pivot_row = self.rows[&col].clone();
        for (&c, r) in self.rows.range_mut(..col) {
            debug_assert!(c < col);
            if let Some(q) = r.get(col).cloned() {
                r.sub_scaled(&q, &pivot_row);
            }
        }
    }

    fn insert(&mut self, mut v: SparseVector) {
        self.clear_unit_columns(&mut v);
        loop {
            let Some((col, lead)) = v.leading() else {
                return;
            };
            let lead = lead.clone();
            let Some(row) = self.rows.get(&col) else {
                if lead.is_negative() {
                    v.negate();
                }
                let unit = v.get(col).is_some_and(|p| p.is_one());
                self.rows.insert(col, v);
                if unit {
                    self.clear_column_elsewhere(col);
                }
                return;
            };
            let p = row.get(col).expect("pivot entry").clone();
            if lead.is_multiple_of(&p) {
                v.sub_scaled(&(&lead / &p), row);
                continue;
            }
            let egcd = p.extended_gcd(&lead);
            let (mut g, mut s, mut t) = (egcd.gcd, egcd.x, egcd.y);
            if g.is_negative() {
                g = -g;
                s = -s;
                t = -t;
            }
            let new_row = row.combine(&s, &v, &t);
            let rest = v.combine(&(&p / &g), row, &-(&lead / &g));
            let unit = g.is_one();
            self.rows.insert(col, new_row);
            if unit {
                self.clear_column_elsewhere(col);
            }
            v = rest;
        }
    }

    /// Reduces entries above every pivot into `[0, pivot)`.
    fn canonicalize(&mut self) {
        let pivots: BTreeMap<usize, BigInt> = self
            .pivots()
            .filter(|(_, p)| !p.is_one())
            .map(|(c, p)| (c, p.clone()))
            .collect();
        if pivots.is_empty() {
            return;
        }
        // Bottom-up, so every row used as a reducer is already canonical.
        let keys: Vec<usize> = self.rows.keys().rev().copied().collect();
        let mut reduced: BTreeMap<usize, SparseVector> = BTreeMap::new();
        for key in keys {
            let mut r = self.rows.remove(&key).expect("row");
            for (&col, p) in pivots.range(key + 1..) {
                let Some(entry) = r.get(col) else {
                    continue;
                };
                let q = entry.div_floor(p);
                r.sub_scaled(&q, &reduced[&col]);
            }
            reduced.insert(key, r);
        }
        self.rows = reduced;
    }

    /// Whether `v` lies in the lattice, by exact triangular division.
    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        self.check_len(v)?;
        let mut v = v.clone();
        while let Some((col, lead)) = v.leading() {
            let Some(row) = self.rows.get(&col) else {
                return Ok(false);
            };
            let p = row.get(col).expect("pivot entry");
            if !lead.is_multiple_of(p) {
                return Ok(false);
            }
            let q = lead / p;
            v.sub_scaled(&q, row);
        }
        Ok(true)
    }

    /// Free rank and torsion of `Z^ambient / lattice`.
    pub fn quotient_invariants(&self) -> QuotientInvariants {
        // Unit-pivot rows and columns split off; the rest is a small block.
        let unit_cols: Vec<usize> = self
            .pivots()
            .filter(|(_, p)| p.is_one())
            .map(|(c, _)| c)
            .collect();
        let block_rows: Vec<&SparseVector> = self
            .rows
            .iter()
            .filter(|(c, _)| unit_cols.binary_search(c).is_err())
            .map(|(_, r)| r)
            .collect();
        let mut cols: Vec<usize> = block_rows
            .iter()
            .flat_map(|r| r.entries().map(|(c, _)| *c))
            .collect();
        cols.sort_unstable();
        cols.dedup();
        let mut block = IntMatrix::zeros(block_rows.len(), cols.len());
        for (i, r) in block_rows.iter().enumerate() {
            for (c, x) in r.entries() {
                let j = cols.binary_search(c).expect("column collected");
                block[(i, j)] = x.clone();
            }
        }
        let torsion = invariant_factors(block)
            .into_iter()
            .filter(|f| !f.is_one())
            .collect();
        QuotientInvariants {
            free_rank: self.ambient - self.rank(),
            torsion,
        }
    }
}

impl fmt::Display for SubgroupBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_matrix())
    }
}

/// Free rank plus invariant factors greater than one, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl QuotientInvariants {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for QuotientInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.free_rank)?;
        for t in &self.torsion {
            write!(f, " + Z/{t}")?;
        }
        Ok(())
    }
}

pub fn hermite_form(m: &IntMatrix) -> SubgroupBasis {
    let mut b = SubgroupBasis::new(m.cols());
    b.extend_dense(m.row_vectors())
        .expect("rows have the matrix width");
    b
}

pub fn smith_invariants(m: &IntMatrix) -> QuotientInvariants {
    hermite_form(m).quotient_invariants()
}

pub fn lattice_member(b: &SubgroupBasis, v: &[BigInt]) -> Result<bool> {
    if v.len() != b.ambient() {
        return Err(Error::DimensionMismatch {
            expected: b.ambient(),
            found: v.len(),
        });
    }
    b.contains(&SparseVector::from_dense(v))
}

/// Nonzero diagonal of the Smith normal form, positive and in divisibility
/// order. Pivots on the entry of least absolute value.
pub fn invariant_factors(mut a: IntMatrix) -> Vec<BigInt> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_entry(&a, t) else {
            break;
        };
        swap_rows(&mut a, t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                for j in t..cols {
                    let delta = &q * &a[(t, j)];
                    a[(i, j)] -= delta;
                }
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                for i in t..rows {
                    let delta = &q * &a[(i, t)];
                    a[(i, j)] -= delta;
                }
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_entry_in_cross(&a, t);
                swap_rows(&mut a, t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            // pivot row and column are clear; enforce divisibility
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let x = a[(i, j)].clone();
                        a[(t, j)] += x;
                    }
                }
                None => break,
            }
        }
        out.push(a[(t, t)].abs());
        t += 1;
    }
    out
}

fn min_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_entry_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cand = (t..a.rows())
        .map(|i| (i, t))
        .chain((t..a.cols()).map(|j| (t, j)));
    for (i, j) in cand {
        if a[(i, j)].is_zero() {
            continue;
        }
        if a[best].is_zero() || a[(i, j)].abs() < a[best].abs() {
            best = (i, j);
        }
    }
    best
}

fn swap_rows(a: &mut IntMatrix, i: usize, k: usize) {
    if i == k {
        return;
    }
    for j in 0..a.cols() {
        let x = std::mem::take(&mut a[(i, j)]);
        let y = std::mem::replace(&mut a[(k, j)], x);
        a[(i, j)] = y;
    }
}

fn swap_cols(a: &mut IntMatrix, j: usize, k: usize) {
    if j == k {
        return;
    }
    for i in 0..a.rows() {
        let x = std::mem::take(&mut a[(i, j)]);
        let y = std::mem::replace(&mut a[(i, k)], x);
        a[(i, j)] = y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(cols: usize, rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(cols, rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hermite_examples() {
        let m = mat(2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(hermite_form(&m).to_matrix(), m);
        let m = mat(2, &[vec![1, 1], vec![1, -1]]);
        assert_eq!(hermite_form(&m).to_matrix(), mat(2, &[vec![1, 1], vec![0, 2]]));
        let b = hermite_form(&mat(2, &[vec![0, 0]]));
        assert!(b.is_empty());
        assert_eq!(b.ambient(), 2);
    }

    #[test]
    fn hermite_reduces_above_pivots() {
        // lattice generated by (2, 5) and (0, 3): canonical row is (2, 2)
        let b = hermite_form(&mat(2, &[vec![2, 5], vec![0, -3]]));
        assert_eq!(b.to_matrix(), mat(2, &[vec![2, 2], vec![0, 3]]));
        let b = hermite_form(&mat(3, &[vec![4, 6, 1], vec![6, 9, 2]]));
        // gcd step: rows span (2, 3, 0) and (0, 0, 1)
        assert_eq!(b.to_matrix(), mat(3, &[vec![2, 3, 0], vec![0, 0, 1]]));
    }

    #[test]
    fn smith_examples() {
        let inv = smith_invariants(&mat(3, &[vec![2, 2, 2]]));
        assert_eq!(inv.free_rank, 2);
        assert_eq!(inv.torsion, ints(&[2]));
        let inv = smith_invariants(&IntMatrix::identity(3));
        assert_eq!((inv.free_rank, inv.torsion.len()), (0, 0));
        let inv = smith_invariants(&IntMatrix::zeros(0, 5));
        assert_eq!((inv.free_rank, inv.torsion.len()), (5, 0));
        let inv = smith_invariants(&mat(2, &[vec![2, 0], vec![0, 3]]));
        assert_eq!(inv.torsion, ints(&[6]));
        let inv = smith_invariants(&mat(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(inv.torsion, ints(&[2, 6, 12]));
    }

    #[test]
    fn membership() {
        let b = hermite_form(&mat(2, &[vec![1, 1], vec![0, 2]]));
        assert!(lattice_member(&b, &ints(&[1, 3])).unwrap());
        assert!(!lattice_member(&b, &ints(&[0, 1])).unwrap());
        assert!(lattice_member(&b, &ints(&[0, 0])).unwrap());
        assert!(lattice_member(&SubgroupBasis::new(2), &ints(&[0, 0])).unwrap());
        assert!(matches!(
            lattice_member(&b, &ints(&[1, 2, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn incremental_matches_batch() {
        let rows = vec![vec![3, 1, 4, 1], vec![5, 9, 2, 6], vec![5, 3, 5, 8], vec![9, 7, 9, 3]];
        let batch = hermite_form(&mat(4, &rows));
        let mut inc = SubgroupBasis::new(4);
        for r in &rows {
            inc.extend_dense([ints(r).as_slice()]).unwrap();
        }
        assert_eq!(inc, batch);
    }

    #[test]
    fn rejects_wrong_widths() {
        let mut b = SubgroupBasis::new(2);
        assert!(b.extend([SparseVector::from_entries([(2, BigInt::one())])]).is_err());
        assert!(IntMatrix::from_rows(2, &[vec![1i64, 2, 3]]).is_err());
    }

    #[test]
    fn sparse_combine() {
        let x = SparseVector::from_entries([(0, BigInt::from(1)), (3, BigInt::from(2))]);
        let y = SparseVector::from_entries([(1, BigInt::from(5)), (3, BigInt::from(1))]);
        let z = x.combine(&BigInt::from(1), &y, &BigInt::from(-2));
        assert_eq!(z.to_dense(4), ints(&[1, -10, 0, 0]));
    }
}
