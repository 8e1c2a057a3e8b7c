//! Exact rank over `Q` of sparse integer matrices.
//!
//! Elimination is fraction-free: a row is reduced as `p * row - a * pivot` and
//! then divided by the gcd of its entries. It runs in `i64` with checked
//! arithmetic and restarts in `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// Sparse integer matrix stored by rows, columns sorted, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        SparseMatrix { n_rows, n_cols, rows: vec![Vec::new(); n_rows] }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(n_rows: usize, n_cols: usize, triplets: &[(usize, usize, i64)]) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for &(r, c, v) in triplets {
            m.add_to(r, c, v);
        }
        m
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let n_cols = dense.first().map_or(0, Vec::len);
        let mut m = Self::zeros(dense.len(), n_cols);
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.add_to(r, c, v);
            }
        }
        m
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.n_rows && c < self.n_cols, "entry ({r}, {c}) out of bounds");
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => {
                row[i].1 += v;
                if row[i].1 == 0 {
                    row.remove(i);
                }
            }
            Err(i) if v != 0 => row.insert(i, (c, v)),
            Err(_) => {}
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |e| e.0).map_or(0, |i| row[i].1)
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.rows[r]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n_cols, self.n_rows);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                t.rows[c].push((r, v));
            }
        }
        t
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n_cols, other.n_rows, "dimension mismatch");
        let mut out = Self::zeros(self.n_rows, other.n_cols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(k, a) in row {
                for &(c, b) in &other.rows[k] {
                    out.add_to(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_map = vec![usize::MAX; self.n_cols];
        for (new, &old) in cols.iter().enumerate() {
            col_map[old] = new;
        }
        let mut out = Self::zeros(rows.len(), cols.len());
        for (new_r, &old_r) in rows.iter().enumerate() {
            for &(c, v) in &self.rows[old_r] {
                if col_map[c] != usize::MAX {
                    out.add_to(new_r, col_map[c], v);
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.n_cols]; self.n_rows];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                d[r][c] = v;
            }
        }
        d
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        // Reduce along the shorter side.
        let m = if self.n_cols < self.n_rows { self.transpose() } else { self.clone() };
        let small: Vec<Vec<(usize, i64)>> = m.rows.clone();
        if let Some(r) = eliminate(small) {
            return r;
        }
        let big = m
            .rows
            .into_iter()
            .map(|row| row.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
            .collect();
        eliminate(big).expect("BigInt elimination cannot overflow")
    }
}

trait Ring: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> Ring for T {}

/// Returns the rank, or `None` on arithmetic overflow.
fn eliminate<T: Ring>(rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut rows: Vec<Vec<(usize, T)>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    // Short rows first keeps fill-in down on boundary matrices.
    rows.sort_by_key(Vec::len);
    let mut pivots: std::collections::HashMap<usize, Vec<(usize, T)>> = Default::default();
    for mut row in rows {
        while let Some(piv) = row.first().and_then(|&(lead, _)| pivots.get(&lead)) {
            row = reduce(&row, piv)?;
        }
        if let Some(&(lead, _)) = row.first() {
            pivots.insert(lead, row);
        }
    }
    Some(pivots.len())
}

/// `p * row - a * piv` where `p`, `a` are the leading entries, divided by content.
fn reduce<T: Ring>(row: &[(usize, T)], piv: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let g = row[0].1.gcd(&piv[0].1);
    let p = piv[0].1.div_floor(&g);
    let a = row[0].1.div_floor(&g);
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.checked_mul(&p)?)
        } else if cj < ci {
            j += 1;
            (cj, T::zero().checked_sub(&piv[j - 1].1.checked_mul(&a)?)?)
        } else {
            i += 1;
            j += 1;
            (ci, row[i - 1].1.checked_mul(&p)?.checked_sub(&piv[j - 1].1.checked_mul(&a)?)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    let content = out.iter().fold(T::zero(), |acc, e| acc.gcd(&e.1));
    if !content.is_zero() && !content.is_one() {
        for e in &mut out {
            e.1 = e.1.div_floor(&content);
        }
    }
    Some(out)
}
