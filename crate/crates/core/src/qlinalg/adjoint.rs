//! Complex adjoint embedding.
//!
//! Splitting `A = A1 + i·A2` entrywise (both blocks complex over unit `j`)
//! gives the `2N × 2M` complex matrix
//!
//! ```text
//! χ(A) = [  A1    conj(A2) ]
//!        [ −A2    conj(A1) ]
//! ```
//!
//! With `i` as a left factor this block layout is an algebra homomorphism:
//! `χ(AB) = χ(A)·χ(B)` and `χ(A^H) = χ(A)^H`. A quaternion column `u`
//! corresponds to the first column of its adjoint, `[u1; −u2]`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{QMatrix, QVector};
use crate::error::{Error, Result};
use crate::quaternion::{ComplexPair, Quaternion};

pub fn complex_adjoint(a: &QMatrix) -> DMatrix<Complex64> {
    let (n, m) = (a.rows(), a.cols());
    let mut out = DMatrix::<Complex64>::zeros(2 * n, 2 * m);
    for r in 0..n {
        for c in 0..m {
            let ComplexPair { c1, c2 } = a[(r, c)].to_complex_pair();
            out[(r, c)] = c1;
            out[(r, c + m)] = c2.conj();
            out[(r + n, c)] = -c2;
            out[(r + n, c + m)] = c1.conj();
        }
    }
    out
}

/// Reads the quaternion matrix back from the left block column of an
/// adjoint. The right block column is ignored.
pub fn from_complex_adjoint(m: &DMatrix<Complex64>) -> Result<QMatrix> {
    if !m.nrows().is_multiple_of(2) || !m.ncols().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "adjoint must have even dimensions, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let (n, k) = (m.nrows() / 2, m.ncols() / 2);
    Ok(QMatrix::from_fn(n, k, |r, c| {
        Quaternion::from_complex_pair(ComplexPair::new(m[(r, c)], -m[(r + n, c)]))
    }))
}

/// `[u1; −u2]` for `u = u1 + i·u2`.
pub fn adjoint_column(u: &QVector) -> Vec<Complex64> {
    let n = u.len();
    let mut out = vec![Complex64::new(0.0, 0.0); 2 * n];
    for (idx, q) in u.iter().enumerate() {
        let ComplexPair { c1, c2 } = q.to_complex_pair();
        out[idx] = c1;
        out[idx + n] = -c2;
    }
    out
}

/// Inverse of [`adjoint_column`]: `[x; y] ↦ x − i·y`.
pub fn from_adjoint_column(col: &[Complex64]) -> QVector {
    let n = col.len() / 2;
    QVector::from_fn(n, |idx| {
        Quaternion::from_complex_pair(ComplexPair::new(col[idx], -col[idx + n]))
    })
}

#[cfg(test)]
mod tests {
    use super::super::test_util::*;
    use super::*;

    fn max_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
        a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn identity_maps_to_identity() {
        let chi = complex_adjoint(&QMatrix::identity(3));
        assert_eq!(chi, DMatrix::<Complex64>::identity(6, 6));
    }

    #[test]
    fn unit_i_block() {
        let chi = complex_adjoint(&QMatrix::diag(&[Quaternion::I]));
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(chi, DMatrix::from_row_slice(2, 2, &[zero, one, -one, zero]));
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut r = rng(21);
        for _ in 0..100 {
            let a = random_matrix(&mut r, 3, 3);
            let b = random_matrix(&mut r, 3, 3);
            let ab = complex_adjoint(&a.matmul(&b).unwrap());
            let prod = complex_adjoint(&a) * complex_adjoint(&b);
            assert!(max_diff(&ab, &prod) <= 1e-12);
            let ah = complex_adjoint(&a.hermitian_transpose());
            assert!(max_diff(&ah, &complex_adjoint(&a).adjoint()) <= 1e-15);
        }
    }

    #[test]
    fn rectangular_homomorphism() {
        let mut r = rng(22);
        let a = random_matrix(&mut r, 4, 2);
        let b = random_matrix(&mut r, 2, 5);
        let ab = complex_adjoint(&a.matmul(&b).unwrap());
        assert!(max_diff(&ab, &(complex_adjoint(&a) * complex_adjoint(&b))) <= 1e-12);
    }

    #[test]
    fn round_trips() {
        let mut r = rng(23);
        let a = random_matrix(&mut r, 3, 4);
        assert_eq!(from_complex_adjoint(&complex_adjoint(&a)).unwrap(), a);
        let u = random_vector(&mut r, 5);
        assert_eq!(from_adjoint_column(&adjoint_column(&u)), u);
        let chi = complex_adjoint(&u.to_column());
        let col: Vec<Complex64> = chi.column(0).iter().copied().collect();
        assert_eq!(col, adjoint_column(&u));
    }
}
