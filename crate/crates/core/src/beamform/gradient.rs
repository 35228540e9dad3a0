//! Quaternion gradients of the constrained-minimum-variance Lagrangian.
//!
//! For a function `g` of `w`, the gradient with respect to `w*` has entries
//!
//! ```text
//! ∇_{w_n*} g = ¼ (∂g/∂a_n + (∂g/∂b_n)·i + (∂g/∂c_n)·j + (∂g/∂d_n)·k)
//! ```
//!
//! where `w_n = a_n + i·b_n + j·c_n + k·d_n`. The Lagrangian
//!
//! ```text
//! l(w, λ) = w^H R w + (w^H C − f) λ^H + λ (C^H w − f^H)
//! ```
//!
//! splits into `c_w = w^H R w`, `u = w^H C λ^H` and `v = λ C^H w` with
//! gradients `½·R·w`, `Real(C·λ^H)` and `−½·(C·λ^H)*`. They sum to
//! `½(R·w + C·λ^H)`, which vanishes at the optimum for `λ = −f (C^H R⁻¹ C)⁻¹`.
//!
//! `λ` is a `1 × 2` quaternion row.

use super::ConstraintSet;
use crate::error::Result;
use crate::qlinalg::{inverse_named, QMatrix, QVector};
use crate::quaternion::Quaternion;

pub type Multiplier = [Quaternion; 2];

/// `C·λ^H`.
fn c_lambda_h(cs: &ConstraintSet, lambda: &Multiplier) -> Result<QVector> {
    let lambda_h = QVector::new(vec![lambda[0].conj(), lambda[1].conj()]);
    cs.c.mul_vec(&lambda_h)
}

/// `l(w, λ)` as a quaternion; its imaginary part is zero up to rounding.
pub fn lagrangian(w: &QVector, lambda: &Multiplier, r: &QMatrix, cs: &ConstraintSet) -> Result<Quaternion> {
    let quad = r.quadratic_form(w)?;
    let mut out = quad;
    for k in 0..2 {
        let col = cs.column(k);
        let wc = w.inner(&col) - cs.f[k];
        out += wc * lambda[k].conj();
        let cw = col.inner(w) - cs.f[k].conj();
        out += lambda[k] * cw;
    }
    Ok(out)
}

/// `u(w) = w^H C λ^H`.
pub fn u_term(w: &QVector, lambda: &Multiplier, cs: &ConstraintSet) -> Result<Quaternion> {
    Ok(w.inner(&c_lambda_h(cs, lambda)?))
}

/// `v(w) = λ C^H w`.
pub fn v_term(w: &QVector, lambda: &Multiplier, cs: &ConstraintSet) -> Result<Quaternion> {
    Ok(c_lambda_h(cs, lambda)?.inner(w))
}

/// `∇_{w*} (w^H R w) = ½·R·w`.
pub fn grad_quadratic(w: &QVector, r: &QMatrix) -> Result<QVector> {
    Ok(r.mul_vec(w)?.scale(0.5))
}

/// `∇_{w*} u = Real(C·λ^H)`, entrywise real part.
pub fn grad_u(lambda: &Multiplier, cs: &ConstraintSet) -> Result<QVector> {
    Ok(c_lambda_h(cs, lambda)?
        .iter()
        .map(|q| Quaternion::real(q.a))
        .collect())
}

/// `∇_{w*} v = −½·(C·λ^H)*`, entrywise conjugate.
pub fn grad_v(lambda: &Multiplier, cs: &ConstraintSet) -> Result<QVector> {
    Ok(c_lambda_h(cs, lambda)?.conj().scale(-0.5))
}

/// `∇_{w*} l = ∇c_w + ∇u + ∇v = ½(R·w + C·λ^H)`.
pub fn lagrangian_gradient(
    w: &QVector,
    lambda: &Multiplier,
    r: &QMatrix,
    cs: &ConstraintSet,
) -> Result<QVector> {
    Ok(grad_quadratic(w, r)?
        .add(&grad_u(lambda, cs)?)
        .add(&grad_v(lambda, cs)?))
}

/// Multiplier that makes the optimum stationary: `λ = −f (C^H R⁻¹ C)⁻¹`.
pub fn stationary_multiplier(r: &QMatrix, cs: &ConstraintSet) -> Result<Multiplier> {
    let r_inv = inverse_named(r, "covariance R")?;
    let gram = cs.c.hermitian_transpose().matmul(&r_inv.matmul(&cs.c)?)?;
    let gram_inv = inverse_named(&gram, "constraint Gram matrix C^H R^-1 C")?;
    let row = |k: usize| -(cs.f[0] * gram_inv[(0, k)] + cs.f[1] * gram_inv[(1, k)]);
    Ok([row(0), row(1)])
}

/// Central-difference gradient with respect to `w*` of any quaternion-valued
/// function, using the four-component definition above.
pub fn finite_difference_gradient(
    g: impl Fn(&QVector) -> Quaternion,
    w: &QVector,
    step: f64,
) -> QVector {
    let units = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
    QVector::from_fn(w.len(), |n| {
        let mut acc = Quaternion::ZERO;
        for unit in units {
            let mut plus = w.clone();
            let mut minus = w.clone();
            plus[n] += unit.scale(step);
            minus[n] -= unit.scale(step);
            let partial = (g(&plus) - g(&minus)).scale(0.5 / step);
            acc += partial * unit;
        }
        acc.scale(0.25)
    })
}
