//! Crossed-dipole uniform linear array and the quaternion snapshot model.
//!
//! Each sensor pairs an x-dipole and a y-dipole. A complex sub-signal `s`
//! with polarization `(p_x, p_y)` and spatial steering `a` produces
//! `x = a·p_x·s` and `y = a·p_y·s`, which combine to the quaternion
//! `x + i·y = b·s` with composite steering `b = a·p_x + i·(a·p_y)`.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::qlinalg::{QMatrix, QVector};
use crate::quaternion::{ComplexPair, Quaternion};

const THETA_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArrayConfig {
    pub n_sensors: usize,
    /// Sensor spacing in wavelengths.
    pub spacing_wavelengths: f64,
}

impl ArrayConfig {
    pub fn new(n_sensors: usize, spacing_wavelengths: f64) -> Result<Self> {
        if n_sensors < 2 {
            return Err(Error::Config(format!("array needs at least 2 sensors, got {n_sensors}")));
        }
        if !(spacing_wavelengths > 0.0 && spacing_wavelengths.is_finite()) {
            return Err(Error::Config(format!(
                "sensor spacing must be positive, got {spacing_wavelengths}"
            )));
        }
        Ok(ArrayConfig {
            n_sensors,
            spacing_wavelengths,
        })
    }

    /// Half-wavelength spacing.
    pub fn half_wavelength(n_sensors: usize) -> Result<Self> {
        ArrayConfig::new(n_sensors, 0.5)
    }
}

/// One complex sub-signal: direction, polarization and power. Angles in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubSignalParams {
    pub theta: f64,
    pub phi: f64,
    pub gamma: f64,
    pub eta: f64,
    /// Linear power `E|s|²`.
    pub power: f64,
}

impl SubSignalParams {
    pub fn from_degrees(theta: f64, phi: f64, gamma: f64, eta: f64, power: f64) -> Self {
        SubSignalParams {
            theta: theta.to_radians(),
            phi: phi.to_radians(),
            gamma: gamma.to_radians(),
            eta: eta.to_radians(),
            power,
        }
    }

    pub fn with_power(self, power: f64) -> Self {
        SubSignalParams { power, ..self }
    }
}

/// A source made of one or two complex sub-signals sharing a direction.
/// With two, the source is the quaternion `s1 + i·s2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SourceParams {
    pub sub1: SubSignalParams,
    pub sub2: Option<SubSignalParams>,
}

impl SourceParams {
    pub fn new(sub1: SubSignalParams, sub2: Option<SubSignalParams>) -> Result<Self> {
        if let Some(s2) = sub2 {
            if s2.theta != sub1.theta || s2.phi != sub1.phi {
                return Err(Error::Config(format!(
                    "sub-signals of one source must share a direction: ({}, {}) vs ({}, {}) rad",
                    sub1.theta, sub1.phi, s2.theta, s2.phi
                )));
            }
        }
        Ok(SourceParams { sub1, sub2 })
    }

    pub fn single(sub1: SubSignalParams) -> Self {
        SourceParams { sub1, sub2: None }
    }

    pub fn sub_signals(&self) -> impl Iterator<Item = &SubSignalParams> {
        std::iter::once(&self.sub1).chain(self.sub2.as_ref())
    }

    pub fn total_power(&self) -> f64 {
        self.sub_signals().map(|s| s.power).sum()
    }
}

/// Returns `(p_x, p_y)` as complex numbers over unit `j`.
pub fn polarization(sub: &SubSignalParams) -> Result<(Complex64, Complex64)> {
    if (sub.theta - std::f64::consts::FRAC_PI_2).abs() > THETA_TOLERANCE {
        return Err(Error::OutOfModel(format!(
            "polarization model needs theta = 90 deg, got {:.6} deg",
            sub.theta.to_degrees()
        )));
    }
    let px = Complex64::new(-sub.gamma.cos(), 0.0);
    let py = Complex64::from_polar(sub.phi.cos() * sub.gamma.sin(), sub.eta);
    Ok((px, py))
}

/// Entry `n` is `exp(−j·2π·n·spacing·sinθ·sinφ)`.
pub fn steering_vector(theta: f64, phi: f64, cfg: &ArrayConfig) -> Vec<Complex64> {
    let step = -2.0 * std::f64::consts::PI * cfg.spacing_wavelengths * theta.sin() * phi.sin();
    (0..cfg.n_sensors)
        .map(|n| Complex64::from_polar(1.0, step * n as f64))
        .collect()
}

pub fn composite_steering(sub: &SubSignalParams, cfg: &ArrayConfig) -> Result<QVector> {
    let (px, py) = polarization(sub)?;
    Ok(steering_vector(sub.theta, sub.phi, cfg)
        .into_iter()
        .map(|a| Quaternion::from_complex_pair(ComplexPair::new(a * px, a * py)))
        .collect())
}

/// Array, signal of interest, interferers and per-sensor noise power
/// `E|n_q|²`.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub array: ArrayConfig,
    pub soi: SourceParams,
    pub interferers: Vec<SourceParams>,
    pub noise_power: f64,
}

impl Scenario {
    /// All sources in synthesis order: the SOI first, then the interferers.
    pub fn sources(&self) -> impl Iterator<Item = &SourceParams> {
        std::iter::once(&self.soi).chain(self.interferers.iter())
    }

    /// Composite steering vectors `[b01, b02]` of the SOI sub-signals.
    pub fn soi_steering(&self) -> Result<Vec<QVector>> {
        self.soi
            .sub_signals()
            .map(|s| composite_steering(s, &self.array))
            .collect()
    }

    /// `(steering, power)` for every interferer sub-signal.
    pub fn interferer_steering(&self) -> Result<Vec<(QVector, f64)>> {
        let mut out = Vec::new();
        for src in &self.interferers {
            for sub in src.sub_signals() {
                out.push((composite_steering(sub, &self.array)?, sub.power));
            }
        }
        Ok(out)
    }
}

/// One complex waveform per sub-signal.
#[derive(Clone, Debug, PartialEq)]
pub struct SourceWaveforms {
    pub sub1: Vec<Complex64>,
    pub sub2: Option<Vec<Complex64>>,
}

impl SourceWaveforms {
    /// `s1(t) + i·s2(t)`.
    pub fn quaternion_at(&self, t: usize) -> Quaternion {
        let c2 = self.sub2.as_ref().map_or(Complex64::new(0.0, 0.0), |s| s[t]);
        Quaternion::from_complex_pair(ComplexPair::new(self.sub1[t], c2))
    }
}

/// `T` snapshots of the `N`-sensor array plus the source waveforms that
/// produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct SnapshotBlock {
    pub snapshots: Vec<QVector>,
    pub soi: SourceWaveforms,
    pub interferers: Vec<SourceWaveforms>,
}

impl SnapshotBlock {
    pub fn len(&self) -> usize {
        self.snapshots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshots.is_empty()
    }

    pub fn n_sensors(&self) -> usize {
        self.snapshots.first().map_or(0, QVector::len)
    }
}

/// Deterministic in `seed`; see [`synthesize_snapshots_with_rng`].
pub fn synthesize_snapshots(scenario: &Scenario, snapshots: usize, seed: u64) -> Result<SnapshotBlock> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    synthesize_snapshots_with_rng(scenario, snapshots, &mut rng)
}

/// Draws circular complex Gaussian waveforms for every sub-signal (SOI first,
/// then interferers in order), then quaternion noise whose four real
/// components each carry `noise_power / 4`.
pub fn synthesize_snapshots_with_rng<R: Rng>(
    scenario: &Scenario,
    snapshots: usize,
    rng: &mut R,
) -> Result<SnapshotBlock> {
    if snapshots == 0 {
        return Err(Error::Config("snapshot count must be at least 1".into()));
    }
    let n = scenario.array.n_sensors;
    for src in scenario.sources() {
        for sub in src.sub_signals() {
            if !(sub.power >= 0.0) {
                return Err(Error::Config(format!("negative source power {}", sub.power)));
            }
        }
    }
    if !(scenario.noise_power >= 0.0) {
        return Err(Error::Config(format!("negative noise power {}", scenario.noise_power)));
    }

    let mut draw = |power: f64| -> Vec<Complex64> {
        let sd = (power / 2.0).sqrt();
        (0..snapshots)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(sd * re, sd * im)
            })
            .collect()
    };
    let mut waveforms: Vec<SourceWaveforms> = scenario
        .sources()
        .map(|src| SourceWaveforms {
            sub1: draw(src.sub1.power),
            sub2: src.sub2.map(|s| draw(s.power)),
        })
        .collect();

    let mut data: Vec<QVector> = vec![QVector::zeros(n); snapshots];
    for (src, wave) in scenario.sources().zip(&waveforms) {
        let b1 = composite_steering(&src.sub1, &scenario.array)?;
        add_source(&mut data, &b1, &wave.sub1);
        if let (Some(s2), Some(w2)) = (&src.sub2, &wave.sub2) {
            let b2 = composite_steering(s2, &scenario.array)?;
            add_source(&mut data, &b2, w2);
        }
    }

    let sd = (scenario.noise_power / 4.0).sqrt();
    for snap in data.iter_mut() {
        for q in snap.as_mut_slice() {
            let mut comp = || -> f64 {
                let x: f64 = StandardNormal.sample(rng);
                sd * x
            };
            let noise = Quaternion::new(comp(), comp(), comp(), comp());
            *q += noise;
        }
    }

    let soi = waveforms.remove(0);
    Ok(SnapshotBlock {
        snapshots: data,
        soi,
        interferers: waveforms,
    })
}

fn add_source(data: &mut [QVector], steering: &QVector, wave: &[Complex64]) {
    for (snap, s) in data.iter_mut().zip(wave) {
        let s = Quaternion::from_complex(*s);
        for (q, b) in snap.as_mut_slice().iter_mut().zip(steering.iter()) {
            *q += *b * s;
        }
    }
}

/// Model covariances `(R, R_in)`: `R_in` holds interferers plus noise, `R`
/// adds the SOI sub-signals.
pub fn true_covariance(scenario: &Scenario) -> Result<(QMatrix, QMatrix)> {
    let n = scenario.array.n_sensors;
    let mut r_in = QMatrix::identity(n).scale(scenario.noise_power);
    for (b, power) in scenario.interferer_steering()? {
        r_in.add_outer(&b, power);
    }
    let mut r = r_in.clone();
    for (sub, b) in scenario.soi.sub_signals().zip(scenario.soi_steering()?) {
        r.add_outer(&b, sub.power);
    }
    Ok((r.hermitian_part(), r_in.hermitian_part()))
}

/// `(1/T)·Σ_t q(t)·q(t)^H`, Hermitian by construction.
pub fn sample_covariance(block: &SnapshotBlock) -> Result<QMatrix> {
    if block.is_empty() {
        return Err(Error::Config("sample covariance needs at least one snapshot".into()));
    }
    let n = block.n_sensors();
    let mut acc = QMatrix::zeros(n, n);
    for q in &block.snapshots {
        for r in 0..n {
            acc[(r, r)].a += q[r].norm_sqr();
            for c in r + 1..n {
                let v = q[r] * q[c].conj();
                acc[(r, c)] += v;
            }
        }
    }
    let scale = 1.0 / block.len() as f64;
    Ok(QMatrix::from_fn(n, n, |r, c| {
        if r == c {
            Quaternion::real(acc[(r, r)].a * scale)
        } else if r < c {
            acc[(r, c)].scale(scale)
        } else {
            acc[(c, r)].conj().scale(scale)
        }
    }))
}
