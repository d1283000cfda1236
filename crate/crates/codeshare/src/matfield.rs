//! Exact dense linear algebra over finite fields: reduced row echelon
//! form, rank, kernel bases, and span-membership solving.
//!
//! Matrices are stored row-major. Zero-row matrices are legal (they are
//! the parity checks of full codes), zero-column ones are not needed and
//! rejected. Pivot and column indices are 0-based here; the 1-based
//! participant numbering appears only in the external formats.

use std::fmt;

use crate::galois::{Field, FieldElement, FieldEmbedding};
use crate::{Error, Result};

/// A dense matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixF {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Output of [`MatrixF::rref`].
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub matrix: MatrixF,
    pub rank: usize,
    /// Pivot column indices, ascending, 0-based.
    pub pivots: Vec<usize>,
}

impl MatrixF {
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::Shape("matrix needs at least one column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(MatrixF { field: field.clone(), rows, cols, entries })
    }

    pub fn from_rows(field: &Field, row_vecs: Vec<Vec<FieldElement>>) -> Result<Self> {
        let cols = row_vecs.first().map(Vec::len).ok_or_else(|| {
            Error::Shape("from_rows needs at least one row; use empty() for 0-row matrices".into())
        })?;
        if row_vecs.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        let rows = row_vecs.len();
        Self::new(field, rows, cols, row_vecs.into_iter().flatten().collect())
    }

    /// Row-major integer encodings, one inner vector per row.
    pub fn from_encodings(field: &Field, rows: &[Vec<u64>], cols: usize) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::empty(field, cols));
        }
        let row_vecs = rows
            .iter()
            .map(|r| r.iter().map(|&e| field.element_from_encoding(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Self::from_rows(field, row_vecs)?;
        if m.cols != cols {
            return Err(Error::Shape(format!("expected {} columns, got {}", cols, m.cols)));
        }
        Ok(m)
    }

    /// The 0 x cols matrix.
    pub fn empty(field: &Field, cols: usize) -> Self {
        MatrixF { field: field.clone(), rows: 0, cols, entries: Vec::new() }
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        MatrixF {
            field: field.clone(),
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    /// Submatrix keeping the listed columns, in the given order.
    pub fn columns(&self, cols: &[usize]) -> MatrixF {
        let entries = (0..self.rows)
            .flat_map(|i| cols.iter().map(move |&j| self.entry(i, j).clone()))
            .collect();
        MatrixF {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// Multiplies every entry of column `j` by `factor`.
    pub fn scale_col(&mut self, j: usize, factor: &FieldElement) {
        for i in 0..self.rows {
            self.entries[i * self.cols + j] = &self.entries[i * self.cols + j] * factor;
        }
    }

    pub fn transpose(&self) -> MatrixF {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| self.entry(i, j).clone()))
            .collect();
        MatrixF {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn matmul(&self, rhs: &MatrixF) -> Result<MatrixF> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.field.zero();
                for l in 0..self.cols {
                    acc = &acc + &(self.entry(i, l) * rhs.entry(l, j));
                }
                entries.push(acc);
            }
        }
        Ok(MatrixF { field: self.field.clone(), rows: self.rows, cols: rhs.cols, entries })
    }

    /// M * x for a column vector x of length cols.
    pub fn mat_vec(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(x.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = &acc + &(self.entry(i, j) * &x[j]);
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    /// The unique reduced row echelon form, with rank and pivot columns.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.entry(r, col).is_zero());
            let Some(r) = found else { continue };
            m.swap_rows(pivot_row, r);
            let inv = m.entry(pivot_row, col).inverse().expect("pivot is nonzero");
            m.scale_row(pivot_row, &inv);
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m.entry(r2, col).is_zero() {
                    let factor = m.entry(r2, col).clone();
                    m.row_sub_scaled(r2, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        RowEchelon { rank: pivots.len(), matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of the right kernel {x : Mx = 0}, derived from the
    /// RREF free columns in ascending order; basis vector for free column
    /// f has a 1 at f and the negated RREF column above the pivots.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let ech = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - ech.rank);
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.matrix.entry(r, f);
            }
            basis.push(v);
        }
        basis
    }

    pub fn embed(&self, e: &FieldEmbedding) -> MatrixF {
        let entries = self.entries.iter().map(|a| e.apply(a)).collect();
        MatrixF {
            field: e.target().clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn encodings(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(FieldElement::encoding).collect())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &FieldElement) {
        for j in 0..self.cols {
            self.entries[r * self.cols + j] = &self.entries[r * self.cols + j] * factor;
        }
    }

    /// row r -= factor * row src
    fn row_sub_scaled(&mut self, r: usize, src: usize, factor: &FieldElement) {
        for j in 0..self.cols {
            let scaled = &self.entries[src * self.cols + j] * factor;
            self.entries[r * self.cols + j] = &self.entries[r * self.cols + j] - &scaled;
        }
    }
}

impl fmt::Debug for MatrixF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixF {}x{} over {} {:?}", self.rows, self.cols, self.field, self.encodings())
    }
}

/// Coefficients lambda with sum lambda_i * vectors_i = target, or None
/// when the target is outside the span. Ties are broken by RREF
/// back-substitution with all free variables set to zero, so the answer
/// is deterministic.
pub fn solve_membership(
    vectors: &[Vec<FieldElement>],
    target: &[FieldElement],
) -> Option<Vec<FieldElement>> {
    assert!(!target.is_empty(), "target vector must be nonempty");
    let field = target[0].field().clone();
    let dim = target.len();
    for v in vectors {
        assert_eq!(v.len(), dim, "all vectors must share the target's length");
        assert!(v.iter().all(|e| *e.field() == field), "all vectors must share the target's field");
    }
    assert!(target.iter().all(|e| *e.field() == field));

    // Columns are the candidate vectors, then the target.
    let n = vectors.len();
    let mut entries = Vec::with_capacity(dim * (n + 1));
    for r in 0..dim {
        for v in vectors {
            entries.push(v[r].clone());
        }
        entries.push(target[r].clone());
    }
    let m = MatrixF::new(&field, dim, n + 1, entries).expect("consistent shape");
    let ech = m.rref();
    if ech.pivots.contains(&n) {
        return None;
    }
    let mut lambda = vec![field.zero(); n];
    for (r, &p) in ech.pivots.iter().enumerate() {
        lambda[p] = ech.matrix.entry(r, n).clone();
    }
    Some(lambda)
}
