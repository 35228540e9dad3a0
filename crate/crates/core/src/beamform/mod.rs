//! Quaternion Capon beamformers and their evaluation.
//!
//! The full beamformer minimises `w^H R w` subject to `w^H C = f`, with
//! `C = [b01 b02]` the composite steering vectors of the two SOI
//! sub-signals and `f = [1 i]`, so the SOI `s01 + i·s02` passes unchanged:
//!
//! ```text
//! w = R⁻¹ C (C^H R⁻¹ C)⁻¹ f^H
//! ```
//!
//! The baseline is the single-constraint Capon beamformer
//! `w = R⁻¹ a0 (a0^H R⁻¹ a0)⁻¹` built for one complex sub-signal. A
//! quaternion SOI needs it twice, once per sub-signal; [`baseline_qcapon_pair`]
//! folds the two outputs into `z1 + i·z2`.

pub mod cost;
pub mod gradient;
pub mod subspace;

use nalgebra::SVD;

use crate::array_model::{composite_steering, Scenario, SnapshotBlock, SubSignalParams};
use crate::error::{Error, Result};
use crate::qlinalg::{complex_adjoint, inverse_named, QMatrix, QVector};
use crate::quaternion::Quaternion;

/// Response floor reported for exact nulls.
pub const DB_FLOOR: f64 = -300.0;

const HERMITIAN_TOLERANCE: f64 = 1e-9;
const INDEPENDENCE_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    FullQCapon,
    BaselineQCapon,
}

impl SolverKind {
    pub fn tag(self) -> &'static str {
        match self {
            SolverKind::FullQCapon => "full-qcapon",
            SolverKind::BaselineQCapon => "baseline-qcapon",
        }
    }
}

/// Where the covariance behind a weight vector came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CovarianceSource {
    True,
    Sample,
    Supplied,
}

impl CovarianceSource {
    pub fn tag(self) -> &'static str {
        match self {
            CovarianceSource::True => "true",
            CovarianceSource::Sample => "sample",
            CovarianceSource::Supplied => "supplied",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BeamformerWeights {
    pub w: QVector,
    pub solver: SolverKind,
    pub covariance: CovarianceSource,
}

impl BeamformerWeights {
    pub fn new(w: QVector, solver: SolverKind) -> Self {
        BeamformerWeights {
            w,
            solver,
            covariance: CovarianceSource::Supplied,
        }
    }

    pub fn with_covariance(mut self, covariance: CovarianceSource) -> Self {
        self.covariance = covariance;
        self
    }

    /// `w^H b`.
    pub fn response(&self, b: &QVector) -> Quaternion {
        self.w.inner(b)
    }
}

/// `C = [b01 b02]` and `f = [1 i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintSet {
    pub c: QMatrix,
    pub f: [Quaternion; 2],
}

impl ConstraintSet {
    pub fn new(b01: &QVector, b02: &QVector) -> Result<Self> {
        if b01.len() != b02.len() {
            return Err(Error::DimensionMismatch(format!(
                "constraint columns of length {} and {}",
                b01.len(),
                b02.len()
            )));
        }
        let c = QMatrix::from_columns(&[b01.clone(), b02.clone()]);
        let svd = SVD::new(complex_adjoint(&c), false, false);
        let smallest = svd.singular_values.iter().copied().fold(f64::INFINITY, f64::min);
        if !(smallest > INDEPENDENCE_TOLERANCE * c.frobenius_norm()) {
            return Err(Error::Contract(format!(
                "constraint columns are linearly dependent (smallest singular value {smallest:.3e})"
            )));
        }
        Ok(ConstraintSet {
            c,
            f: [Quaternion::ONE, Quaternion::I],
        })
    }

    /// Constraint built from the SOI steering vectors of `scenario`.
    pub fn from_scenario(scenario: &Scenario) -> Result<Self> {
        let b = scenario.soi_steering()?;
        if b.len() != 2 {
            return Err(Error::Config("the signal of interest needs two sub-signals".into()));
        }
        ConstraintSet::new(&b[0], &b[1])
    }

    pub fn n_sensors(&self) -> usize {
        self.c.rows()
    }

    pub fn column(&self, idx: usize) -> QVector {
        self.c.column(idx)
    }

    /// `f^H` as a `2 × 1` column.
    pub fn f_hermitian(&self) -> QMatrix {
        QMatrix::from_columns(&[QVector::new(vec![self.f[0].conj(), self.f[1].conj()])])
    }

    /// `max |(w^H C − f)_k|` over both constraints.
    pub fn residual(&self, w: &QVector) -> f64 {
        (0..2)
            .map(|k| (w.inner(&self.column(k)) - self.f[k]).norm())
            .fold(0.0, f64::max)
    }
}

fn check_covariance(r: &QMatrix, n: usize) -> Result<()> {
    if r.rows() != n || r.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "covariance is {}x{}, expected {n}x{n}",
            r.rows(),
            r.cols()
        )));
    }
    if !r.is_hermitian(HERMITIAN_TOLERANCE) {
        return Err(Error::Contract("covariance matrix is not Hermitian".into()));
    }
    Ok(())
}

/// `w = R⁻¹ C (C^H R⁻¹ C)⁻¹ f^H`.
pub fn full_qcapon_weights(r: &QMatrix, cs: &ConstraintSet) -> Result<BeamformerWeights> {
    check_covariance(r, cs.n_sensors())?;
    let r_inv = inverse_named(r, "covariance R")?;
    let w = weights_with_inverse(&r_inv, cs)?;
    Ok(BeamformerWeights::new(w, SolverKind::FullQCapon))
}

/// `A C (C^H A C)⁻¹ f^H` for any stand-in `A` of `R⁻¹`.
pub fn weights_with_inverse(r_inv: &QMatrix, cs: &ConstraintSet) -> Result<QVector> {
    let r_inv_c = r_inv.matmul(&cs.c)?;
    let gram = cs.c.hermitian_transpose().matmul(&r_inv_c)?;
    let gram_inv = inverse_named(&gram, "constraint Gram matrix C^H R^-1 C")?;
    let beta = gram_inv.matmul(&cs.f_hermitian())?;
    Ok(r_inv_c.matmul(&beta)?.column(0))
}

/// `w = R⁻¹ a0 (a0^H R⁻¹ a0)⁻¹`.
pub fn baseline_qcapon_weights(r: &QMatrix, a0: &QVector) -> Result<BeamformerWeights> {
    check_covariance(r, a0.len())?;
    if a0.norm_sqr() == 0.0 {
        return Err(Error::Domain("steering vector is zero".into()));
    }
    let r_inv = inverse_named(r, "covariance R")?;
    let r_inv_a = r_inv.mul_vec(a0)?;
    let denom = a0.inner(&r_inv_a);
    let denom_inv = denom
        .inverse()
        .map_err(|_| Error::Domain("a0^H R^-1 a0 vanished".into()))?;
    Ok(BeamformerWeights::new(r_inv_a.mul_right(denom_inv), SolverKind::BaselineQCapon))
}

/// Baseline applied once per SOI sub-signal, with the two outputs combined
/// as `z = f1·z1 + f2·z2 = z1 + i·z2`. The returned vector is the equivalent
/// single weight `w1·conj(f1) + w2·conj(f2) = w1 − w2·i`.
pub fn baseline_qcapon_pair(r: &QMatrix, cs: &ConstraintSet) -> Result<BeamformerWeights> {
    let w1 = baseline_qcapon_weights(r, &cs.column(0))?;
    let w2 = baseline_qcapon_weights(r, &cs.column(1))?;
    let w = w1.w.mul_right(cs.f[0].conj()).add(&w2.w.mul_right(cs.f[1].conj()));
    Ok(BeamformerWeights::new(w, SolverKind::BaselineQCapon))
}

/// `R + ε·trace(R)/N·I`.
pub fn diagonal_loading(r: &QMatrix, epsilon: f64) -> QMatrix {
    let n = r.rows().max(1) as f64;
    r.add_diagonal(epsilon * r.trace_real() / n)
}

/// `z(t) = w^H q(t)` for every snapshot.
pub fn apply_weights(w: &BeamformerWeights, block: &SnapshotBlock) -> Result<Vec<Quaternion>> {
    if !block.is_empty() && block.n_sensors() != w.w.len() {
        return Err(Error::DimensionMismatch(format!(
            "weights of length {} applied to {} sensors",
            w.w.len(),
            block.n_sensors()
        )));
    }
    Ok(block.snapshots.iter().map(|q| w.w.inner(q)).collect())
}

/// Output SINR in dB, scored against the model covariance of `scenario`:
/// `(σ1²|w^H b01|² + σ2²|w^H b02|²) / (w^H R_in w)`.
pub fn output_sinr(w: &BeamformerWeights, scenario: &Scenario) -> Result<f64> {
    let n = scenario.array.n_sensors;
    if w.w.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "weights of length {} for {n} sensors",
            w.w.len()
        )));
    }
    let mut signal = 0.0;
    for (sub, b) in scenario.soi.sub_signals().zip(scenario.soi_steering()?) {
        signal += sub.power * w.response(&b).norm_sqr();
    }
    let mut noise = scenario.noise_power * w.w.norm_sqr();
    for (b, power) in scenario.interferer_steering()? {
        noise += power * w.response(&b).norm_sqr();
    }
    if !(noise > 0.0) {
        return Err(Error::Domain("interference-plus-noise output power is zero".into()));
    }
    Ok(10.0 * (signal / noise).log10())
}

/// `|w^H b(θ = 90°, φ_p, γ, η_e)|` over the grid, indexed `[p][e]`.
/// Angles in radians.
pub fn beampattern(
    w: &BeamformerWeights,
    phi_grid: &[f64],
    eta_grid: &[f64],
    gamma: f64,
    scenario_array: &crate::array_model::ArrayConfig,
) -> Result<Vec<Vec<f64>>> {
    phi_grid
        .iter()
        .map(|&phi| {
            eta_grid
                .iter()
                .map(|&eta| {
                    let sub = SubSignalParams {
                        theta: std::f64::consts::FRAC_PI_2,
                        phi,
                        gamma,
                        eta,
                        power: 1.0,
                    };
                    Ok(w.response(&composite_steering(&sub, scenario_array)?).norm())
                })
                .collect()
        })
        .collect()
}

/// `20·log10(x)` clamped at [`DB_FLOOR`].
pub fn amplitude_db(x: f64) -> f64 {
    if x > 0.0 {
        (20.0 * x.log10()).max(DB_FLOOR)
    } else {
        DB_FLOOR
    }
}

/// `20·log10(|w^H b_ms| / |w^H b01|)` for each interferer sub-signal.
pub fn null_depths(w: &BeamformerWeights, scenario: &Scenario) -> Result<Vec<f64>> {
    let b01 = composite_steering(&scenario.soi.sub1, &scenario.array)?;
    let reference = w.response(&b01).norm();
    if reference == 0.0 {
        return Err(Error::Domain("beamformer has no response toward the SOI".into()));
    }
    Ok(scenario
        .interferer_steering()?
        .iter()
        .map(|(b, _)| amplitude_db(w.response(b).norm() / reference))
        .collect())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::array_model::{synthesize_snapshots, true_covariance, ArrayConfig, SourceParams};
    use crate::qlinalg::test_util::*;

    pub(crate) fn four_interferer_scenario(inr_db: f64) -> Scenario {
        let p = 10f64.powf(inr_db / 10.0);
        let soi = SourceParams::new(
            SubSignalParams::from_degrees(90.0, 1.5, 90.0, 45.0, p / 2.0),
            Some(SubSignalParams::from_degrees(90.0, 1.5, 0.0, 0.0, p / 2.0)),
        )
        .unwrap();
        let interferers = [(30.0, -80.0), (-70.0, 30.0), (-20.0, 70.0), (50.0, -50.0)]
            .iter()
            .map(|&(phi, eta)| SourceParams::single(SubSignalParams::from_degrees(90.0, phi, 60.0, eta, p)))
            .collect();
        Scenario {
            array: ArrayConfig::half_wavelength(10).unwrap(),
            soi,
            interferers,
            noise_power: 1.0,
        }
    }

    #[test]
    fn identity_covariance_returns_constraint_combination() {
        let n = 4;
        let cs = ConstraintSet::new(&QVector::basis(n, 0), &QVector::basis(n, 1)).unwrap();
        let w = full_qcapon_weights(&QMatrix::identity(n), &cs).unwrap();
        let expected = QVector::new(vec![
            Quaternion::ONE,
            -Quaternion::I,
            Quaternion::ZERO,
            Quaternion::ZERO,
        ]);
        assert!(w.w.max_abs_diff(&expected) < 1e-15);
        assert!(cs.residual(&w.w) < 1e-15);
        assert_eq!(w.solver, SolverKind::FullQCapon);
    }

    #[test]
    fn constraint_holds_on_random_covariances() {
        let mut r = rng(41);
        for _ in 0..25 {
            let n = 6;
            let cov = random_hpd(&mut r, n, 0.5);
            let cs = ConstraintSet::new(&random_vector(&mut r, n), &random_vector(&mut r, n)).unwrap();
            let w = full_qcapon_weights(&cov, &cs).unwrap();
            assert!(cs.residual(&w.w) <= 1e-9);
            let power = cov.quadratic_form(&w.w).unwrap();
            assert!(power.imag().norm() <= 1e-12 * power.norm());
        }
    }

    #[test]
    fn dependent_constraints_rejected() {
        let mut r = rng(42);
        let b = random_vector(&mut r, 5);
        assert!(matches!(
            ConstraintSet::new(&b, &b.mul_right(Quaternion::new(0.3, 0.1, -2.0, 0.5))),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn singular_covariance_names_the_inverse() {
        let n = 3;
        let cs = ConstraintSet::new(&QVector::basis(n, 0), &QVector::basis(n, 1)).unwrap();
        match full_qcapon_weights(&QMatrix::zeros(n, n), &cs) {
            Err(Error::Singular { context, .. }) => assert_eq!(context, "covariance R"),
            other => panic!("unexpected {other:?}"),
        }
        // R invertible but blind to both constraint directions
        let cs = ConstraintSet::new(&QVector::basis(n, 0), &QVector::basis(n, 1)).unwrap();
        let r_inv = QMatrix::diag(&[Quaternion::ZERO, Quaternion::ZERO, Quaternion::ONE]);
        match weights_with_inverse(&r_inv, &cs) {
            Err(Error::Singular { context, .. }) => assert!(context.contains("Gram")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn baseline_examples() {
        let mut r = rng(43);
        let a0 = random_vector(&mut r, 5);
        let w = baseline_qcapon_weights(&QMatrix::identity(5), &a0).unwrap();
        assert!(w.w.max_abs_diff(&a0.scale(1.0 / a0.norm_sqr())) < 1e-15);
        for _ in 0..20 {
            let cov = random_hpd(&mut r, 5, 0.1);
            let a0 = random_vector(&mut r, 5);
            let w = baseline_qcapon_weights(&cov, &a0).unwrap();
            assert!(w.response(&a0).max_abs_diff(Quaternion::ONE) <= 1e-10);
        }
        assert!(baseline_qcapon_weights(&QMatrix::zeros(5, 5), &a0).is_err());
    }

    #[test]
    fn baseline_pair_is_feasible_with_true_covariance() {
        // With the model covariance each single-constraint beamformer nulls
        // the other sub-signal almost completely, so the folded weight nearly
        // satisfies both constraints.
        let sc = four_interferer_scenario(20.0);
        let (cov, _) = true_covariance(&sc).unwrap();
        let cs = ConstraintSet::from_scenario(&sc).unwrap();
        let wb = baseline_qcapon_pair(&cov, &cs).unwrap();
        assert!(cs.residual(&wb.w) < 0.05, "residual {}", cs.residual(&wb.w));
    }

    #[test]
    fn apply_weights_examples() {
        let sc = four_interferer_scenario(20.0);
        let block = synthesize_snapshots(&sc, 12, 4).unwrap();
        let e1 = BeamformerWeights::new(QVector::basis(10, 0), SolverKind::FullQCapon);
        let z = apply_weights(&e1, &block).unwrap();
        for (t, q) in z.iter().enumerate() {
            assert_eq!(*q, block.snapshots[t][0]);
        }
        let short = BeamformerWeights::new(QVector::basis(3, 0), SolverKind::FullQCapon);
        assert!(apply_weights(&short, &block).is_err());
    }

    #[test]
    fn noiseless_soi_passes_unchanged() {
        let mut sc = four_interferer_scenario(20.0);
        sc.interferers.clear();
        sc.noise_power = 0.0;
        let block = synthesize_snapshots(&sc, 50, 6).unwrap();
        let cs = ConstraintSet::from_scenario(&sc).unwrap();
        let (_, _) = true_covariance(&sc).unwrap();
        // any PD covariance gives distortionless weights
        let w = full_qcapon_weights(&QMatrix::identity(10), &cs).unwrap();
        let z = apply_weights(&w, &block).unwrap();
        for (t, q) in z.iter().enumerate() {
            assert!(q.max_abs_diff(block.soi.quaternion_at(t)) <= 1e-8);
        }
        let zero = crate::array_model::SnapshotBlock {
            snapshots: vec![QVector::zeros(10); 3],
            ..block
        };
        assert!(apply_weights(&w, &zero).unwrap().iter().all(|q| *q == Quaternion::ZERO));
    }

    #[test]
    fn sinr_noise_only_closed_form() {
        let mut sc = four_interferer_scenario(20.0);
        sc.interferers.clear();
        sc.noise_power = 0.3;
        let cs = ConstraintSet::from_scenario(&sc).unwrap();
        let mut r = rng(44);
        let cov = random_hpd(&mut r, 10, 1.0);
        let w = full_qcapon_weights(&cov, &cs).unwrap();
        let total = sc.soi.total_power();
        let expected = 10.0 * (total / (0.3 * w.w.norm_sqr())).log10();
        assert!((output_sinr(&w, &sc).unwrap() - expected).abs() < 1e-9);
    }

    #[test]
    fn sinr_scales_with_signal_power() {
        let mut sc = four_interferer_scenario(20.0);
        let (cov, _) = true_covariance(&sc).unwrap();
        let w = full_qcapon_weights(&cov, &ConstraintSet::from_scenario(&sc).unwrap()).unwrap();
        let before = output_sinr(&w, &sc).unwrap();
        sc.soi.sub1.power *= 10.0;
        sc.soi.sub2.as_mut().unwrap().power *= 10.0;
        assert!((output_sinr(&w, &sc).unwrap() - before - 10.0).abs() < 1e-9);
    }

    #[test]
    fn pattern_at_constraint_points() {
        let sc = four_interferer_scenario(20.0);
        let (cov, _) = true_covariance(&sc).unwrap();
        let w = full_qcapon_weights(&cov, &ConstraintSet::from_scenario(&sc).unwrap()).unwrap();
        let s1 = sc.soi.sub1;
        let s2 = sc.soi.sub2.unwrap();
        let p1 = beampattern(&w, &[s1.phi], &[s1.eta], s1.gamma, &sc.array).unwrap();
        let p2 = beampattern(&w, &[s2.phi], &[s2.eta], s2.gamma, &sc.array).unwrap();
        assert!((p1[0][0] - 1.0).abs() < 1e-9);
        assert!((p2[0][0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn single_sensor_pattern_is_flat() {
        let array = ArrayConfig::half_wavelength(6).unwrap();
        let w = BeamformerWeights::new(QVector::basis(6, 0), SolverKind::FullQCapon);
        // γ = 90° makes |p_x + i·p_y| = |cos φ|, so stay at broadside-normalised φ = 0
        let etas: Vec<f64> = (-9..=9).map(|e| (e as f64 * 10.0).to_radians()).collect();
        let pat = beampattern(&w, &[0.0], &etas, 90f64.to_radians(), &array).unwrap();
        assert!(pat[0].iter().all(|v| (v - 1.0).abs() < 1e-12));
        let pat = beampattern(&w, &[0.4, -1.0], &etas, 0.0, &array).unwrap();
        assert!(pat.iter().flatten().all(|v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn orthogonal_interferer_nulled_to_rounding() {
        // broadside SOI (b01 = −1, b02 = i on every sensor) and an interferer
        // at φ = 30° whose steering [1, −j, −1, j] sums to zero, so it is
        // with sin φ = 1/4 for the SOI and 3/4 for the interferer, both
        // Σ conj(a_n)·a'_n and Σ a_n·a'_n vanish on 4 sensors, so the
        // interferer is orthogonal to both constraint columns whatever the
        // polarizations. With R = I the weights lie in the constraint span.
        let array = ArrayConfig::half_wavelength(4).unwrap();
        let phi_soi = 0.25f64.asin().to_degrees();
        let phi_int = 0.75f64.asin().to_degrees();
        let sc = Scenario {
            array,
            soi: SourceParams::new(
                SubSignalParams::from_degrees(90.0, phi_soi, 0.0, 0.0, 1.0),
                Some(SubSignalParams::from_degrees(90.0, phi_soi, 90.0, 0.0, 1.0)),
            )
            .unwrap(),
            interferers: vec![SourceParams::single(SubSignalParams::from_degrees(
                90.0, phi_int, 60.0, -30.0, 1.0,
            ))],
            noise_power: 1.0,
        };
        let cs = ConstraintSet::from_scenario(&sc).unwrap();
        let w = full_qcapon_weights(&QMatrix::identity(4), &cs).unwrap();
        let depth = null_depths(&w, &sc).unwrap()[0];
        assert!(depth < -280.0, "{depth}");
    }

    #[test]
    fn true_covariance_weights_null_all_four_interferers() {
        let sc = four_interferer_scenario(20.0);
        let (cov, _) = true_covariance(&sc).unwrap();
        let w = full_qcapon_weights(&cov, &ConstraintSet::from_scenario(&sc).unwrap()).unwrap();
        let b01 = composite_steering(&sc.soi.sub1, &sc.array).unwrap();
        let reference = w.response(&b01).norm();
        for (b, _) in sc.interferer_steering().unwrap() {
            assert!(w.response(&b).norm() <= 1e-2 * reference);
        }
        assert!(null_depths(&w, &sc).unwrap().iter().all(|d| *d <= -20.0));
    }

    #[test]
    fn null_depths_deepen_with_inr() {
        let depths: Vec<Vec<f64>> = [10.0, 20.0, 30.0]
            .iter()
            .map(|&inr| {
                let sc = four_interferer_scenario(inr);
                let (cov, _) = true_covariance(&sc).unwrap();
                let w = full_qcapon_weights(&cov, &ConstraintSet::from_scenario(&sc).unwrap()).unwrap();
                null_depths(&w, &sc).unwrap()
            })
            .collect();
        for m in 0..4 {
            assert!(depths[1][m] < depths[0][m] && depths[2][m] < depths[1][m]);
        }
    }

    #[test]
    fn full_and_interference_only_covariances_agree() {
        let sc = four_interferer_scenario(20.0);
        let (cov, cov_in) = true_covariance(&sc).unwrap();
        let cs = ConstraintSet::from_scenario(&sc).unwrap();
        let a = full_qcapon_weights(&cov, &cs).unwrap();
        let b = full_qcapon_weights(&cov_in, &cs).unwrap();
        assert!(a.w.max_abs_diff(&b.w) <= 1e-8);
    }

    #[test]
    fn optimal_weights_minimise_power_on_feasible_set() {
        let sc = four_interferer_scenario(20.0);
        let (cov, _) = true_covariance(&sc).unwrap();
        let cs = ConstraintSet::from_scenario(&sc).unwrap();
        let w = full_qcapon_weights(&cov, &cs).unwrap();
        let best = cov.quadratic_form(&w.w).unwrap().a;
        let mut r = rng(45);
        for _ in 0..100 {
            let delta = subspace::project_out_constraints(&random_vector(&mut r, 10), &cs).unwrap();
            let delta = delta.scale(0.1 / delta.norm());
            assert!(cs.residual(&w.w.add(&delta)) < 1e-9);
            let p = cov.quadratic_form(&w.w.add(&delta)).unwrap().a;
            assert!(p >= best);
        }
    }

    #[test]
    fn diagonal_loading_adds_scaled_trace() {
        let m = QMatrix::diag(&[Quaternion::real(1.0), Quaternion::real(3.0)]);
        let l = diagonal_loading(&m, 0.5);
        assert_eq!(l, QMatrix::diag(&[Quaternion::real(2.0), Quaternion::real(4.0)]));
    }
}
