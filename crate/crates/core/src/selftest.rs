//! Quick consistency checks runnable from the command line.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::array_model::{synthesize_snapshots, true_covariance};
use crate::beamform::cost::multiplication_cost;
use crate::beamform::gradient::{lagrangian_gradient, stationary_multiplier};
use crate::beamform::{full_qcapon_weights, null_depths, ConstraintSet, SolverKind};
use crate::harness::bundled_config;
use crate::qlinalg::{complex_adjoint, eig_hermitian, inverse, QMatrix};
use crate::quaternion::Quaternion;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail }
}

fn random_quat(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
    )
}

fn random_hpd(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let b = QMatrix::from_fn(n, n, |_, _| random_quat(rng));
    b.matmul(&b.hermitian_transpose()).unwrap().add_diagonal(n as f64)
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Runs every check; none of them panics.
pub fn run() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    let mut out = Vec::new();

    let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
    let table_ok = i * j == k && j * k == i && k * i == j && j * i == -k && i * i == -Quaternion::ONE;
    out.push(check("multiplication table", table_ok, "ij=k, jk=i, ki=j, ji=-k, i²=-1".into()));

    let worst = (0..1000)
        .map(|_| {
            let (p, q) = (random_quat(&mut rng), random_quat(&mut rng));
            ((p * q).norm() - p.norm() * q.norm()).abs() / (p.norm() * q.norm())
        })
        .fold(0.0, f64::max);
    out.push(check("norm multiplicative", worst <= 1e-12, format!("max rel err {worst:.2e}")));

    let a = QMatrix::from_fn(4, 4, |_, _| random_quat(&mut rng));
    let b = QMatrix::from_fn(4, 4, |_, _| random_quat(&mut rng));
    let hom = max_abs(&(complex_adjoint(&a.matmul(&b).unwrap()) - complex_adjoint(&a) * complex_adjoint(&b)));
    out.push(check("complex adjoint homomorphism", hom <= 1e-12, format!("max err {hom:.2e}")));

    let r = random_hpd(&mut rng, 6);
    let detail = match (inverse(&r), complex_adjoint(&r).try_inverse()) {
        (Ok(inv), Some(oracle)) => {
            let err = max_abs(&(complex_adjoint(&inv) - &oracle)) / max_abs(&oracle);
            (err <= 1e-9, format!("rel err vs complex inverse {err:.2e}"))
        }
        (Err(e), _) => (false, e.to_string()),
        (_, None) => (false, "oracle inverse failed".into()),
    };
    out.push(check("inverse", detail.0, detail.1));

    let detail = match eig_hermitian(&r) {
        Ok(eig) => {
            let err = eig.reconstruct().sub(&r).map(|d| d.frobenius_norm()).unwrap_or(f64::INFINITY)
                / r.frobenius_norm();
            let sorted = eig.eigenvalues.windows(2).all(|w| w[0] >= w[1]);
            (err <= 1e-10 && sorted, format!("reconstruction rel err {err:.2e}, sorted {sorted}"))
        }
        Err(e) => (false, e.to_string()),
    };
    out.push(check("hermitian eigendecomposition", detail.0, detail.1));

    let scenario_check = || -> crate::Result<Vec<Check>> {
        let cfg = bundled_config("paper_fig2")?;
        let scenario = cfg.true_scenario(20.0, 20.0)?;
        let (r, _) = true_covariance(&scenario)?;
        let cs = ConstraintSet::from_scenario(&scenario)?;
        let w = full_qcapon_weights(&r, &cs)?;
        let residual = cs.residual(&w.w);
        let depths = null_depths(&w, &scenario)?;
        let deepest = depths.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lambda = stationary_multiplier(&r, &cs)?;
        let grad = lagrangian_gradient(&w.w, &lambda, &r, &cs)?.norm() / w.w.norm();
        let a = synthesize_snapshots(&scenario, 20, 9)?;
        let b = synthesize_snapshots(&scenario, 20, 9)?;
        Ok(vec![
            check("constraint satisfied", residual <= 1e-10, format!("residual {residual:.2e}")),
            check("interferers suppressed", deepest <= -20.0, format!("shallowest null {deepest:.1} dB")),
            check("lagrangian stationary", grad <= 1e-9, format!("relative gradient {grad:.2e}")),
            check("synthesis reproducible", a.snapshots == b.snapshots, "same seed, same snapshots".into()),
        ])
    };
    match scenario_check() {
        Ok(mut checks) => out.append(&mut checks),
        Err(e) => out.push(check("scenario checks", false, e.to_string())),
    }

    let cost = multiplication_cost(SolverKind::FullQCapon, 10)
        .and_then(|f| Ok((f, multiplication_cost(SolverKind::BaselineQCapon, 10)?)));
    let (ok, detail) = match cost {
        Ok((f, b)) => (
            f.counted_real_mults == 12736 && b.counted_real_mults == 17600,
            format!("N=10: full {} baseline {}", f.counted_real_mults, b.counted_real_mults),
        ),
        Err(e) => (false, e.to_string()),
    };
    out.push(check("multiplication count", ok, detail));
    out
}
