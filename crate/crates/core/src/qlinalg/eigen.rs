//! Hermitian eigendecomposition through the complex adjoint.
//!
//! A Hermitian quaternion matrix has `N` real eigenvalues; its adjoint has
//! the same values, each twice. The complex eigenvectors of one repeated
//! cluster right-span a quaternion eigenspace, so each cluster of size `2k`
//! yields `k` quaternion eigenvectors after a pivoted Gram-Schmidt pass.

use nalgebra::SymmetricEigen;

use super::adjoint::{complex_adjoint, from_adjoint_column};
use super::{QMatrix, QVector};
use crate::error::{Error, Result};

/// Relative gap below which adjoint eigenvalues are considered equal.
const PAIR_TOLERANCE: f64 = 1e-8;
/// Allowed `‖A − A^H‖_F / ‖A‖_F`.
const HERMITIAN_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Real eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, `eigenvectors[n]` pairs with `eigenvalues[n]`.
    pub eigenvectors: Vec<QVector>,
}

impl EigenDecomposition {
    /// `Σ α_n u_n u_n^H`.
    pub fn reconstruct(&self) -> QMatrix {
        let n = self.eigenvectors.first().map_or(0, QVector::len);
        let mut out = QMatrix::zeros(n, n);
        for (alpha, u) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            out.add_outer(u, *alpha);
        }
        out
    }
}

pub fn eig_hermitian(a: &QMatrix) -> Result<EigenDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let scale = a.frobenius_norm();
    let defect = a.hermitian_defect();
    if defect > HERMITIAN_TOLERANCE * scale {
        return Err(Error::Contract(format!(
            "matrix is not Hermitian: ‖A − A^H‖ = {defect:.3e}, ‖A‖ = {scale:.3e}"
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(EigenDecomposition {
            eigenvalues: vec![],
            eigenvectors: vec![],
        });
    }

    let sym = a.hermitian_part();
    let chi = complex_adjoint(&sym);
    let eig = SymmetricEigen::new(chi);

    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[y].total_cmp(&eig.eigenvalues[x]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let max_abs = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tol = PAIR_TOLERANCE * max_abs.max(f64::MIN_POSITIVE);

    let mut clusters: Vec<std::ops::Range<usize>> = Vec::new();
    let mut start = 0;
    for idx in 1..=values.len() {
        if idx == values.len() || values[idx - 1] - values[idx] > tol {
            clusters.push(start..idx);
            start = idx;
        }
    }

    let mut vectors: Vec<QVector> = Vec::with_capacity(n);
    for cluster in clusters {
        if cluster.len() % 2 != 0 {
            return Err(Error::Eigen(format!(
                "adjoint eigenvalues near {:.6e} do not pair up ({} found)",
                values[cluster.start],
                cluster.len()
            )));
        }
        let mut candidates: Vec<QVector> = cluster
            .clone()
            .map(|pos| {
                let col: Vec<_> = eig.eigenvectors.column(order[pos]).iter().copied().collect();
                from_adjoint_column(&col)
            })
            .collect();
        for _ in 0..cluster.len() / 2 {
            for cand in candidates.iter_mut() {
                *cand = orthogonalize(cand, &vectors);
            }
            let (best, norm) = candidates
                .iter()
                .enumerate()
                .map(|(i, c)| (i, c.norm()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .expect("nonempty cluster");
            if norm < 1e-6 {
                return Err(Error::Eigen("eigenspace collapsed during orthogonalization".into()));
            }
            let chosen = candidates.swap_remove(best).scale(1.0 / norm);
            // second pass keeps orthonormality near machine precision
            let chosen = orthogonalize(&chosen, &vectors);
            let renorm = chosen.norm();
            vectors.push(chosen.scale(1.0 / renorm));
        }
    }

    let mut pairs: Vec<(f64, QVector)> = vectors
        .into_iter()
        .map(|u| {
            let alpha = sym.quadratic_form(&u).map(|q| q.a).unwrap_or(f64::NAN);
            (alpha, u)
        })
        .collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Removes the right-span of `basis` (orthonormal) from `v`.
fn orthogonalize(v: &QVector, basis: &[QVector]) -> QVector {
    let mut out = v.clone();
    for u in basis {
        let coeff = u.inner(&out);
        out = out.sub(&u.mul_right(coeff));
    }
    out
}
