//! Exact linear algebra over the rationals.
//!
//! [`RationalMatrix`] is a plain dense matrix with pivoted Gauss–Jordan
//! elimination. [`Echelon`] is an incrementally built, fully reduced row basis
//! over sparse vectors; the oracle streams naturality equations into it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Integer value of `x`, if it is an integer fitting in `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

/// Sparse vector: index → nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Q>;

/// `acc += c * v`, dropping entries that cancel.
pub fn axpy(acc: &mut SparseVec, c: &Q, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&i, x) in v {
        add_entry(acc, i, c * x);
    }
}

pub fn add_entry(acc: &mut SparseVec, i: usize, x: Q) {
    if x.is_zero() {
        return;
    }
    let e = acc.entry(i).or_insert_with(Q::zero);
    *e += x;
    if e.is_zero() {
        acc.remove(&i);
    }
}

pub fn scaled(v: &SparseVec, c: &Q) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(&i, x)| (i, x * c)).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    /// Matrix whose `j`-th column is the sparse vector `cols[j]`.
    pub fn from_sparse_columns(rows: usize, cols: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (&i, x) in col {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn sparse_column(&self, j: usize) -> SparseVec {
        (0..self.rows)
            .filter(|&i| !self.get(i, j).is_zero())
            .map(|i| (i, self.get(i, j).clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::InvalidArgument("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            let mut prow: Vec<(usize, Q)> = Vec::new();
            for j in c..m.cols {
                if !m.get(r, j).is_zero() {
                    let x = m.get(r, j) * &inv;
                    m.set(r, j, x.clone());
                    prow.push((j, x));
                }
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for (j, x) in &prow {
                    let idx = i * m.cols + j;
                    m.data[idx] -= &f * x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space; each vector is 1 on its own free column and
    /// 0 on the other free columns.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(k, f).clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Q]) -> Result<Option<Vec<Q>>> {
        if b.len() != self.rows {
            return Err(Error::InvalidArgument("right-hand side length mismatch".into()));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Q::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A fully reduced row-echelon basis of a subspace of `Q^dim`, grown one vector
/// at a time. Every stored row has a 1 in its pivot column and 0 in the pivot
/// columns of all other rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivot_of_row
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Row with pivot `p`, if any.
    pub fn row_with_pivot(&self, p: usize) -> Option<&SparseVec> {
        self.row_of_pivot.get(&p).map(|&r| &self.rows[r])
    }

    /// `v` minus its projection onto the span along pivot coordinates.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (&p, &r) in &self.row_of_pivot {
            if let Some(c) = out.get(&p).cloned() {
                axpy(&mut out, &(-c), &self.rows[r]);
            }
        }
        out
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut w = self.reduce(v);
        let Some((&p, lead)) = w.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        w = scaled(&w, &inv);
        for row in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &(-c), &w);
            }
        }
        self.row_of_pivot.insert(p, self.rows.len());
        self.pivot_of_row.push(p);
        self.rows.push(w);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the stored basis (in insertion order), if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivot_of_row.iter().map(|p| v.get(p).cloned().unwrap_or_else(Q::zero)).collect())
    }

    /// Null space of the linear forms stored as rows, in `Q^ncols`; each basis
    /// vector is 1 on one free column and 0 on the others.
    pub fn kernel_basis(&self, ncols: usize) -> Vec<SparseVec> {
        (0..ncols)
            .filter(|c| !self.row_of_pivot.contains_key(c))
            .map(|f| {
                let mut v = SparseVec::new();
                v.insert(f, Q::one());
                for (&p, &r) in &self.row_of_pivot {
                    if let Some(x) = self.rows[r].get(&f) {
                        v.insert(p, -x.clone());
                    }
                }
                v
            })
            .collect()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_kernel_solve() {
        let m = RationalMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).unwrap().iter().all(Zero::is_zero));
        let x = m.solve(&[q(4), q(8), q(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![q(4), q(8), q(2)]);
        assert!(m.solve(&[q(1), q(0), q(0)]).unwrap().is_none());
    }

    #[test]
    fn echelon_matches_dense() {
        let rows = [vec![0, 2, 1, -1], vec![1, 1, 0, 0], vec![1, 3, 1, -1], vec![0, 0, 3, 3]];
        let dense = RationalMatrix::from_i64(&rows).unwrap();
        let mut e = Echelon::new();
        for r in &rows {
            let v: SparseVec =
                r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, q(x))).collect();
            e.insert(&v);
        }
        assert_eq!(e.rank(), dense.rank());
        let ker = e.kernel_basis(4);
        assert_eq!(ker.len(), dense.kernel().len());
        for k in ker {
            let v: Vec<Q> = (0..4).map(|i| k.get(&i).cloned().unwrap_or_else(Q::zero)).collect();
            assert!(dense.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn fractions_stay_exact() {
        let m = RationalMatrix::from_i64(&[vec![3, 1], vec![1, 3]]).unwrap();
        let x = m.solve(&[q(1), q(0)]).unwrap().unwrap();
        assert_eq!(x, vec![q_frac(3, 8), q_frac(-1, 8)]);
    }
}
