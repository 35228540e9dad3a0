//! Dense quaternion vectors and matrices.
//!
//! All products keep the written left-to-right order; the scalar ring is
//! noncommutative so `A·B` and the entrywise factors inside it are never
//! reordered. Vectors are columns. A right linear combination of vectors is
//! `Σ u_n·ρ_n` with the scalar on the right.

mod adjoint;
mod eigen;
mod inverse;

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

pub use adjoint::{adjoint_column, complex_adjoint, from_adjoint_column, from_complex_adjoint};
pub use eigen::{eig_hermitian, EigenDecomposition};
pub use inverse::{inverse, inverse_named, PIVOT_RELATIVE_TOLERANCE};

/// Column vector of quaternions.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct QVector(Vec<Quaternion>);

impl QVector {
    pub fn new(entries: Vec<Quaternion>) -> Self {
        QVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        QVector(vec![Quaternion::ZERO; n])
    }

    /// Unit basis vector `e_index`.
    pub fn basis(n: usize, index: usize) -> Self {
        let mut v = QVector::zeros(n);
        v.0[index] = Quaternion::ONE;
        v
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Quaternion) -> Self {
        QVector((0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Quaternion] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [Quaternion] {
        &mut self.0
    }

    pub fn into_inner(self) -> Vec<Quaternion> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Quaternion> {
        self.0.iter()
    }

    /// `self^H · other = Σ conj(self_n)·other_n`.
    pub fn inner(&self, other: &QVector) -> Quaternion {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(u, v)| u.conj() * *v)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|q| q.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `self · q` (scalar on the right).
    pub fn mul_right(&self, q: Quaternion) -> QVector {
        QVector(self.0.iter().map(|v| *v * q).collect())
    }

    /// `q · self` (scalar on the left).
    pub fn mul_left(&self, q: Quaternion) -> QVector {
        QVector(self.0.iter().map(|v| q * *v).collect())
    }

    pub fn scale(&self, s: f64) -> QVector {
        QVector(self.0.iter().map(|v| v.scale(s)).collect())
    }

    pub fn add(&self, other: &QVector) -> QVector {
        debug_assert_eq!(self.len(), other.len());
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| *a + *b).collect())
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        debug_assert_eq!(self.len(), other.len());
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| *a - *b).collect())
    }

    pub fn conj(&self) -> QVector {
        QVector(self.0.iter().map(|q| q.conj()).collect())
    }

    pub fn max_abs_diff(&self, other: &QVector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.max_abs_diff(*b))
            .fold(0.0, f64::max)
    }

    /// `N × 1` matrix view.
    pub fn to_column(&self) -> QMatrix {
        QMatrix::from_columns(std::slice::from_ref(self))
    }

    /// `u · v^H`.
    pub fn outer(&self, other: &QVector) -> QMatrix {
        QMatrix::from_fn(self.len(), other.len(), |r, c| self.0[r] * other.0[c].conj())
    }
}

impl Index<usize> for QVector {
    type Output = Quaternion;
    fn index(&self, i: usize) -> &Quaternion {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut Quaternion {
        &mut self.0[i]
    }
}

impl FromIterator<Quaternion> for QVector {
    fn from_iter<I: IntoIterator<Item = Quaternion>>(iter: I) -> Self {
        QVector(iter.into_iter().collect())
    }
}

impl From<Vec<Quaternion>> for QVector {
    fn from(v: Vec<Quaternion>) -> Self {
        QVector(v)
    }
}

/// Row-major dense quaternion matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(QMatrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(columns: &[QVector]) -> Self {
        let rows = columns.first().map_or(0, QVector::len);
        QMatrix::from_fn(rows, columns.len(), |r, c| columns[c][r])
    }

    pub fn diag(entries: &[Quaternion]) -> Self {
        let mut m = QMatrix::zeros(entries.len(), entries.len());
        for (i, q) in entries.iter().enumerate() {
            m[(i, i)] = *q;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Quaternion] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> QVector {
        QVector::from_fn(self.rows, |r| self[(r, c)])
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `result[r][c] = conj(A[c][r])`.
    pub fn hermitian_transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn matmul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let left = self[(r, t)];
                for c in 0..other.cols {
                    let v = left * other[(t, c)];
                    out[(r, c)] += v;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &QVector) -> Result<QVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(QVector::from_fn(self.rows, |r| {
            self.row(r).iter().zip(v.iter()).map(|(a, b)| *a * *b).sum()
        }))
    }

    /// `w^H · A · w`.
    pub fn quadratic_form(&self, w: &QVector) -> Result<Quaternion> {
        Ok(w.inner(&self.mul_vec(w)?))
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &QMatrix, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(*a, *b)).collect(),
        })
    }

    pub fn scale(&self, s: f64) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| q.scale(s)).collect(),
        }
    }

    /// Adds `s` to every diagonal entry.
    pub fn add_diagonal(&self, s: f64) -> QMatrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)].a += s;
        }
        m
    }

    /// `A + s · u·u^H`.
    pub fn add_outer(&mut self, u: &QVector, s: f64) {
        debug_assert!(self.rows == u.len() && self.cols == u.len());
        for r in 0..self.rows {
            let ur = u[r].scale(s);
            for c in 0..self.cols {
                let v = ur * u[c].conj();
                self[(r, c)] += v;
            }
        }
    }

    pub fn trace_real(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].a).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &QMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.max_abs_diff(*b))
            .fold(0.0, f64::max)
    }

    /// `‖A − A^H‖_F`.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.sub(&self.hermitian_transpose())
            .map(|d| d.frobenius_norm())
            .unwrap_or(f64::INFINITY)
    }

    pub fn is_hermitian(&self, rel_tol: f64) -> bool {
        self.hermitian_defect() <= rel_tol * self.frobenius_norm()
    }

    /// `(A + A^H)/2`; removes rounding asymmetry.
    pub fn hermitian_part(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |r, c| {
            (self[(r, c)] + self[(c, r)].conj()).scale(0.5)
        })
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        &mut self.data[r * self.cols + c]
    }
}


#[cfg(test)]
mod tests {
    use super::test_util::*;
    use super::*;

    #[test]
    fn hermitian_transpose_basics() {
        let id = QMatrix::identity(3);
        assert_eq!(id.hermitian_transpose(), id);
        let m = QMatrix::diag(&[Quaternion::I]);
        assert_eq!(m.hermitian_transpose(), QMatrix::diag(&[-Quaternion::I]));
    }

    #[test]
    fn hermitian_transpose_of_product_reverses() {
        let mut r = rng(11);
        for _ in 0..20 {
            let a = random_matrix(&mut r, 3, 3);
            let b = random_matrix(&mut r, 3, 3);
            let lhs = a.matmul(&b).unwrap().hermitian_transpose();
            let rhs = b.hermitian_transpose().matmul(&a.hermitian_transpose()).unwrap();
            assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
            assert_eq!(lhs.hermitian_transpose().hermitian_transpose(), lhs);
        }
    }

    #[test]
    fn matmul_identity_and_scalar() {
        let mut r = rng(3);
        let a = random_matrix(&mut r, 3, 4);
        assert_eq!(a.matmul(&QMatrix::identity(4)).unwrap(), a);
        let i = QMatrix::diag(&[Quaternion::I]);
        let j = QMatrix::diag(&[Quaternion::J]);
        assert_eq!(i.matmul(&j).unwrap(), QMatrix::diag(&[Quaternion::K]));
        assert!(matches!(a.matmul(&a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn matmul_associative() {
        let mut r = rng(5);
        for _ in 0..20 {
            let a = random_matrix(&mut r, 3, 3);
            let b = random_matrix(&mut r, 3, 3);
            let c = random_matrix(&mut r, 3, 3);
            let lhs = a.matmul(&b).unwrap().matmul(&c).unwrap();
            let rhs = a.matmul(&b.matmul(&c).unwrap()).unwrap();
            assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
        }
    }

    #[test]
    fn hermitian_quadratic_form_is_real() {
        let mut r = rng(9);
        for n in 1..8 {
            let a = random_hpd(&mut r, n, 0.0);
            let w = random_vector(&mut r, n);
            let q = a.quadratic_form(&w).unwrap();
            assert!(q.imag().norm() <= 1e-12 * q.norm());
            assert!(q.a >= 0.0);
        }
    }

    #[test]
    fn inner_product_of_self_is_real_nonnegative() {
        let mut r = rng(13);
        let u = random_vector(&mut r, 6);
        let ip = u.inner(&u);
        assert!(ip.imag().norm() == 0.0 || ip.imag().norm() <= 1e-15 * ip.a);
        assert!((ip.a - u.norm_sqr()).abs() <= 1e-12 * ip.a);
    }

    #[test]
    fn outer_product_matches_column_product() {
        let mut r = rng(17);
        let u = random_vector(&mut r, 4);
        let v = random_vector(&mut r, 3);
        let direct = u.outer(&v);
        let via = u.to_column().matmul(&v.to_column().hermitian_transpose()).unwrap();
        assert!(direct.max_abs_diff(&via) <= 1e-15);
    }
}
