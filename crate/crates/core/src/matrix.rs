//! Dense matrices over a finite field: determinants, inverses and the
//! MDS / involutory / semi-involutory predicates.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i).iter().map(|e| e.code()).collect::<Vec<_>>())?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Row and column index sets of a square submatrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Minor {
    pub size: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Outcome of an MDS scan; a failure carries the first singular submatrix
/// in (size, rows, cols) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MdsCheck {
    pub is_mds: bool,
    pub witness: Option<Minor>,
}

/// Outcome of the semi-involutory test `A^{-1} = D1·A·D2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiInvolutory {
    Found { d1: Vec<Elem>, d2: Vec<Elem> },
    NotFound { reason: String },
}

impl SemiInvolutory {
    pub fn is_found(&self) -> bool {
        matches!(self, SemiInvolutory::Found { .. })
    }
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for {rows}x{cols}", entries.len())));
        }
        for e in &entries {
            field.element(e.code() as u64)?;
        }
        Ok(Matrix { field: field.clone(), rows, cols, entries })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_codes(field: &Field, rows: &[Vec<u64>]) -> Result<Matrix> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.element(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }

    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, entries: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, m: usize) -> Matrix {
        Matrix::scalar(field, m, Elem::ONE)
    }

    /// `c·I_m`
    pub fn scalar(field: &Field, m: usize, c: Elem) -> Matrix {
        let mut a = Matrix::zero(field, m, m);
        for i in 0..m {
            a.entries[i * m + i] = c;
        }
        a
    }

    pub fn diagonal(field: &Field, d: &[Elem]) -> Matrix {
        let m = d.len();
        let mut a = Matrix::zero(field, m, m);
        for (i, &c) in d.iter().enumerate() {
            a.entries[i * m + i] = c;
        }
        a
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

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn codes(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| e.code()).collect()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn trace(&self) -> Result<Elem> {
        let m = self.square()?;
        Ok((0..m).fold(Elem::ZERO, |acc, i| self.field.add(acc, self.get(i, i))))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = f.add(out.entries[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("addends differ in shape".into()));
        }
        let f = &self.field;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = &self.field;
        Matrix { entries: self.entries.iter().map(|&a| f.mul(a, c)).collect(), ..self.clone() }
    }

    /// Applies `e ↦ φ(e)` to every entry.
    pub fn map(&self, phi: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix { entries: self.entries.iter().map(|&a| phi(a)).collect(), ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix> {
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange);
        }
        let entries = rows.iter().flat_map(|&r| cols.iter().map(move |&c| self.get(r, c))).collect();
        Ok(Matrix { field: self.field.clone(), rows: rows.len(), cols: cols.len(), entries })
    }

    pub fn determinant(&self) -> Result<Elem> {
        let m = self.square()?;
        Ok(det_in_place(&self.field, &mut self.entries.clone(), m))
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        let m = self.square()?;
        let f = &self.field;
        let w = 2 * m;
        let mut aug = vec![Elem::ZERO; m * w];
        for i in 0..m {
            aug[i * w..i * w + m].copy_from_slice(self.row(i));
            aug[i * w + m + i] = Elem::ONE;
        }
        for col in 0..m {
            let piv = (col..m).find(|&r| !aug[r * w + col].is_zero()).ok_or(Error::Singular)?;
            if piv != col {
                for k in 0..w {
                    aug.swap(piv * w + k, col * w + k);
                }
            }
            let inv = f.inv_nonzero(aug[col * w + col]);
            for k in 0..w {
                aug[col * w + k] = f.mul(aug[col * w + k], inv);
            }
            for r in 0..m {
                if r == col {
                    continue;
                }
                let factor = aug[r * w + col];
                if factor.is_zero() {
                    continue;
                }
                for k in 0..w {
                    aug[r * w + k] = f.sub(aug[r * w + k], f.mul(factor, aug[col * w + k]));
                }
            }
        }
        let entries = (0..m).flat_map(|i| aug[i * w + m..(i + 1) * w].to_vec()).collect();
        Ok(Matrix { field: f.clone(), rows: m, cols: m, entries })
    }

    /// First singular `k×k` submatrix in (rows, cols) lexicographic order.
    pub fn first_singular_minor_of_order(&self, k: usize) -> Result<Option<Minor>> {
        let m = self.square()?;
        if k == 0 || k > m {
            return Err(Error::IndexOutOfRange);
        }
        let f = &self.field;
        let mut buf = vec![Elem::ZERO; k * k];
        let row_sets: Vec<Vec<usize>> = (0..m).combinations(k).collect();
        for rows in &row_sets {
            for cols in &row_sets {
                for (a, &r) in rows.iter().enumerate() {
                    for (b, &c) in cols.iter().enumerate() {
                        buf[a * k + b] = self.get(r, c);
                    }
                }
                if det_in_place(f, &mut buf, k).is_zero() {
                    return Ok(Some(Minor { size: k, rows: rows.clone(), cols: cols.clone() }));
                }
            }
        }
        Ok(None)
    }

    /// Every square submatrix nonsingular, scanning sizes in ascending
    /// order. When every entry of `A^{-1}` is nonzero the `(m−1)`-minors
    /// are known to be nonsingular and that size is skipped.
    pub fn is_mds(&self) -> Result<MdsCheck> {
        self.mds_scan(true)
    }

    /// Same verdict and witness as [`Matrix::is_mds`] without the inverse
    /// prefilter.
    pub fn is_mds_full_scan(&self) -> Result<MdsCheck> {
        self.mds_scan(false)
    }

    fn mds_scan(&self, prefilter: bool) -> Result<MdsCheck> {
        let m = self.square()?;
        let skip = if prefilter && m >= 3 {
            self.inverse().is_ok_and(|inv| inv.entries.iter().all(|e| !e.is_zero()))
        } else {
            false
        };
        for k in 1..=m {
            if skip && k == m - 1 {
                continue;
            }
            if let Some(w) = self.first_singular_minor_of_order(k)? {
                return Ok(MdsCheck { is_mds: false, witness: Some(w) });
            }
        }
        debug_assert!(self.entries.iter().all(|e| !e.is_zero()));
        Ok(MdsCheck { is_mds: true, witness: None })
    }

    /// If every entry of `A^{-1}` is nonzero, checks that every
    /// `(m−1)`-minor of `A` is nonsingular. Vacuously true otherwise.
    pub fn nonzero_inverse_minor_check(&self) -> Result<bool> {
        let m = self.square()?;
        let inv = self.inverse()?;
        if inv.entries.iter().any(|e| e.is_zero()) || m < 2 {
            return Ok(true);
        }
        Ok(self.first_singular_minor_of_order(m - 1)?.is_none())
    }

    pub fn is_involutory(&self) -> Result<bool> {
        let m = self.square()?;
        Ok(self.mul(self)? == Matrix::identity(&self.field, m))
    }

    /// Finds diagonal `D1`, `D2` with `A^{-1} = D1·A·D2`.
    ///
    /// With `R_ij = (A^{-1})_ij / A_ij` on the common support, the system
    /// `d1_i·d2_j = R_ij` is solved by propagation over the bipartite
    /// row/column graph of the support; every edge is then rechecked. The
    /// component holding row 0 is normalised to `d1_0 = 1`.
    pub fn semi_involutory(&self) -> Result<SemiInvolutory> {
        let m = self.square()?;
        let inv = self.inverse()?;
        let f = &self.field;
        for idx in 0..m * m {
            if self.entries[idx].is_zero() != inv.entries[idx].is_zero() {
                return Ok(SemiInvolutory::NotFound {
                    reason: format!("zero patterns of A and A^-1 differ at ({}, {})", idx / m, idx % m),
                });
            }
        }
        let ratio = |i: usize, j: usize| f.mul(inv.get(i, j), f.inv_nonzero(self.get(i, j)));
        let mut d1: Vec<Option<Elem>> = vec![None; m];
        let mut d2: Vec<Option<Elem>> = vec![None; m];
        // nodes 0..m are rows, m..2m are columns
        for start in 0..m {
            if d1[start].is_some() {
                continue;
            }
            d1[start] = Some(Elem::ONE);
            let mut queue = VecDeque::from([start]);
            while let Some(node) = queue.pop_front() {
                if node < m {
                    let di = d1[node].unwrap();
                    for j in 0..m {
                        if !self.get(node, j).is_zero() && d2[j].is_none() {
                            d2[j] = Some(f.mul(ratio(node, j), f.inv_nonzero(di)));
                            queue.push_back(m + j);
                        }
                    }
                } else {
                    let j = node - m;
                    let dj = d2[j].unwrap();
                    for i in 0..m {
                        if !self.get(i, j).is_zero() && d1[i].is_none() {
                            d1[i] = Some(f.mul(ratio(i, j), f.inv_nonzero(dj)));
                            queue.push_back(i);
                        }
                    }
                }
            }
        }
        let d1: Vec<Elem> = d1.into_iter().map(|d| d.unwrap_or(Elem::ONE)).collect();
        let d2: Vec<Elem> = d2.into_iter().map(|d| d.unwrap_or(Elem::ONE)).collect();
        for i in 0..m {
            for j in 0..m {
                if !self.get(i, j).is_zero() && f.mul(d1[i], d2[j]) != ratio(i, j) {
                    return Ok(SemiInvolutory::NotFound {
                        reason: format!("ratio matrix is not rank one (inconsistent at ({i}, {j}))"),
                    });
                }
            }
        }
        let check = Matrix::diagonal(f, &d1).mul(self)?.mul(&Matrix::diagonal(f, &d2))?;
        debug_assert_eq!(check, inv);
        Ok(SemiInvolutory::Found { d1, d2 })
    }

    /// `A^2 = d·I` with `d ≠ 0`: then `A^{-1} = (c1 I)·A·(c2 I)` for any
    /// `c1·c2 = d^{-1}`, which is returned.
    pub fn scalar_semi_involutory(&self) -> Result<Option<Elem>> {
        let m = self.square()?;
        let sq = self.mul(self)?;
        let d = sq.get(0, 0);
        if d.is_zero() || sq != Matrix::scalar(&self.field, m, d) {
            return Ok(None);
        }
        Ok(Some(self.field.inv_nonzero(d)))
    }

    pub fn to_json(&self) -> Value {
        json!({"q": self.field.order(), "rows": self.rows, "entries": self.codes()})
    }

    /// Entries as generator polynomials, columns aligned.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|&e| self.field.render(e)).collect()).collect();
        let widths: Vec<usize> =
            (0..self.cols).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1)).collect();
        cells
            .iter()
            .map(|r| {
                let parts: Vec<String> =
                    r.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
                format!("[ {} ]", parts.join("  "))
            })
            .join("\n")
    }
}

/// Determinant of the row-major `k×k` block in `a`, destroying it.
pub(crate) fn det_in_place(f: &Field, a: &mut [Elem], k: usize) -> Elem {
    let mut det = Elem::ONE;
    for col in 0..k {
        let Some(piv) = (col..k).find(|&r| !a[r * k + col].is_zero()) else {
            return Elem::ZERO;
        };
        if piv != col {
            for c in col..k {
                a.swap(piv * k + c, col * k + c);
            }
            det = f.neg(det);
        }
        let p = a[col * k + col];
        det = f.mul(det, p);
        let inv = f.inv_nonzero(p);
        for r in col + 1..k {
            let factor = f.mul(a[r * k + col], inv);
            if factor.is_zero() {
                continue;
            }
            for c in col..k {
                a[r * k + c] = f.sub(a[r * k + c], f.mul(factor, a[col * k + c]));
            }
        }
    }
    det
}
