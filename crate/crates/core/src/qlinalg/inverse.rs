//! Gauss-Jordan inversion over the quaternion division ring.
//!
//! Row operations premultiply: pivot rows are scaled by `pivot⁻¹` from the
//! left and eliminated as `row_i ← row_i − a_ik·row_k`. Partial pivoting picks
//! the largest modulus in the column, lowest row index on ties.

use super::QMatrix;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Pivots smaller than this times `‖A‖_F` are treated as zero.
pub const PIVOT_RELATIVE_TOLERANCE: f64 = 1e-12;

pub fn inverse(a: &QMatrix) -> Result<QMatrix> {
    inverse_named(a, "matrix inverse")
}

/// Same as [`inverse`]; `context` names the matrix in the singular error.
pub fn inverse_named(a: &QMatrix, context: &str) -> Result<QMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{context}: cannot invert {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let threshold = PIVOT_RELATIVE_TOLERANCE * a.frobenius_norm();
    let mut work = a.clone();
    let mut inv = QMatrix::identity(n);

    for k in 0..n {
        let mut pivot_row = k;
        let mut best = work[(k, k)].norm();
        for r in k + 1..n {
            let m = work[(r, k)].norm();
            if m > best {
                best = m;
                pivot_row = r;
            }
        }
        if !(best > threshold) {
            return Err(Error::Singular {
                context: context.to_string(),
                pivot: best,
                threshold,
            });
        }
        work.swap_rows(k, pivot_row);
        inv.swap_rows(k, pivot_row);

        let p_inv = work[(k, k)].inverse()?;
        for c in 0..n {
            work[(k, c)] = p_inv * work[(k, c)];
            inv[(k, c)] = p_inv * inv[(k, c)];
        }
        work[(k, k)] = Quaternion::ONE;

        for r in 0..n {
            if r == k {
                continue;
            }
            let factor = work[(r, k)];
            if factor == Quaternion::ZERO {
                continue;
            }
            for c in 0..n {
                let wk = work[(k, c)];
                let ik = inv[(k, c)];
                work[(r, c)] -= factor * wk;
                inv[(r, c)] -= factor * ik;
            }
            work[(r, k)] = Quaternion::ZERO;
        }
    }
    Ok(inv)
}
