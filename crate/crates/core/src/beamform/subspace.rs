//! Eigen-subspace view of the interference-plus-noise covariance.
//!
//! With `R_in = Σ α_n u_n u_n^H`, strong interferers occupy the leading
//! eigenvectors and the rest sit at the noise floor. At high INR the inverse
//! is dominated by the noise subspace, so optimal weights become right
//! linear combinations of noise eigenvectors and are blind to every
//! interferer steering vector.

use super::ConstraintSet;
use crate::error::{Error, Result};
use crate::qlinalg::{eig_hermitian, inverse_named, QMatrix, QVector};

/// Noise-subspace approximation of `R_in⁻¹`:
/// `(1/σ²)·Σ_{n > rank} u_n u_n^H`, with `σ²` the mean of the trailing
/// eigenvalues.
pub fn lowrank_inverse_approx(r_in: &QMatrix, interference_rank: usize) -> Result<QMatrix> {
    let n = r_in.rows();
    if interference_rank >= n {
        return Err(Error::Contract(format!(
            "interference rank {interference_rank} leaves no noise subspace in dimension {n}"
        )));
    }
    let eig = eig_hermitian(r_in)?;
    let floor: f64 =
        eig.eigenvalues[interference_rank..].iter().sum::<f64>() / (n - interference_rank) as f64;
    if !(floor > 0.0) {
        return Err(Error::Contract(format!("noise floor {floor:.3e} is not positive")));
    }
    // I − P_int equals the noise projector and avoids summing many tiny terms.
    let mut projector = QMatrix::identity(n);
    for u in &eig.eigenvectors[..interference_rank] {
        projector.add_outer(u, -1.0);
    }
    Ok(projector.scale(1.0 / floor).hermitian_part())
}

/// `‖R_in⁻¹ − approx‖_F`.
pub fn lowrank_inverse_error(r_in: &QMatrix, interference_rank: usize) -> Result<f64> {
    let exact = inverse_named(r_in, "interference-plus-noise covariance")?;
    let approx = lowrank_inverse_approx(r_in, interference_rank)?;
    Ok(exact.sub(&approx)?.frobenius_norm())
}

/// `‖P_int·w‖ / ‖w‖` where `P_int` projects onto the leading
/// `interference_rank` eigenvectors of `r_in`.
pub fn interference_subspace_fraction(
    w: &QVector,
    r_in: &QMatrix,
    interference_rank: usize,
) -> Result<f64> {
    let eig = eig_hermitian(r_in)?;
    let mut proj = QVector::zeros(w.len());
    for u in eig.eigenvectors.iter().take(interference_rank) {
        proj = proj.add(&u.mul_right(u.inner(w)));
    }
    Ok(proj.norm() / w.norm())
}

/// Angle between the quaternion lines through `u` and `v`, in radians.
pub fn principal_angle(u: &QVector, v: &QVector) -> f64 {
    let cos = u.inner(v).norm() / (u.norm() * v.norm());
    cos.clamp(0.0, 1.0).acos()
}

/// Removes the right-span of the constraint columns from `v`, giving a
/// direction `δ` with `δ^H C = 0`.
pub fn project_out_constraints(v: &QVector, cs: &ConstraintSet) -> Result<QVector> {
    let c = &cs.c;
    let gram = c.hermitian_transpose().matmul(c)?;
    let gram_inv = inverse_named(&gram, "constraint Gram matrix C^H C")?;
    let coeffs = gram_inv.mul_vec(&c.hermitian_transpose().mul_vec(v)?)?;
    Ok(v.sub(&c.mul_vec(&coeffs)?))
}
