use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::config::{CovarianceChoice, ScenarioConfig, SweepAxis};
use super::output::{pairwise_sum, write_beampattern_csv, write_runlog, write_sweep_csv};
use crate::array_model::{sample_covariance, synthesize_snapshots_with_rng, true_covariance};
use crate::beamform::{
    amplitude_db, baseline_qcapon_pair, beampattern, diagonal_loading, full_qcapon_weights,
    output_sinr, BeamformerWeights, CovarianceSource, SolverKind,
};
use crate::error::{Error, Result};

/// A sweep fails when more than this fraction of its trials hit a solver error.
pub const MAX_FAILURE_FRACTION: f64 = 0.01;

#[derive(Clone, Debug, PartialEq)]
pub struct BeampatternResult {
    pub phi_deg: Vec<f64>,
    pub eta_deg: Vec<f64>,
    /// `[phi][eta]`, dB relative to unit response.
    pub response_db: Vec<Vec<f64>>,
    pub gamma_deg: f64,
}

impl BeampatternResult {
    pub fn at(&self, phi_deg: f64, eta_deg: f64) -> Option<f64> {
        let i = self.phi_deg.iter().position(|p| *p == phi_deg)?;
        let j = self.eta_deg.iter().position(|e| *e == eta_deg)?;
        Some(self.response_db[i][j])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MeanSe {
    pub mean: f64,
    pub se: f64,
}

impl MeanSe {
    pub fn of(xs: &[f64]) -> MeanSe {
        let n = xs.len();
        if n == 0 {
            return MeanSe { mean: f64::NAN, se: f64::NAN };
        }
        let mean = pairwise_sum(xs) / n as f64;
        if n == 1 {
            return MeanSe { mean, se: 0.0 };
        }
        let sq: Vec<f64> = xs.iter().map(|x| (x - mean) * (x - mean)).collect();
        let var = pairwise_sum(&sq) / (n - 1) as f64;
        MeanSe { mean, se: (var / n as f64).sqrt() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub value: f64,
    pub full: MeanSe,
    pub baseline: MeanSe,
    /// Paired per-trial difference, full minus baseline.
    pub diff: MeanSe,
    /// Full weights from the true covariance.
    pub optimal_db: f64,
    pub trials_used: usize,
    pub trials_failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub axis: SweepAxis,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn row(&self, value: f64) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.value == value)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub axis_value: f64,
    pub trial: usize,
    pub seed: u64,
    pub stream: u64,
    pub full_sinr_db: Option<f64>,
    pub baseline_sinr_db: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutput {
    pub result: SweepResult,
    pub records: Vec<TrialRecord>,
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn estimate_covariance(cfg: &ScenarioConfig, snr_db: f64, snapshots: usize, rng: &mut ChaCha8Rng) -> Result<crate::qlinalg::QMatrix> {
    let truth = cfg.true_scenario(snr_db, cfg.inr_db)?;
    let block = synthesize_snapshots_with_rng(&truth, snapshots, rng)?;
    let r = sample_covariance(&block)?;
    Ok(if cfg.diagonal_loading > 0.0 {
        diagonal_loading(&r, cfg.diagonal_loading)
    } else {
        r
    })
}

fn check_snapshots(cfg: &ScenarioConfig, snapshots: usize) -> Result<()> {
    if snapshots < cfg.array.n_sensors && cfg.diagonal_loading == 0.0 {
        return Err(Error::Config(format!(
            "{snapshots} snapshots for {} sensors gives a singular sample covariance; enable diagonal_loading",
            cfg.array.n_sensors
        )));
    }
    Ok(())
}

/// Weights for the configured scenario at its own SNR and INR, built against
/// the assumed constraint. A sample covariance uses `snapshots` drawn from
/// seed `seed`.
pub fn scenario_weights(
    cfg: &ScenarioConfig,
    solver: SolverKind,
    covariance: CovarianceChoice,
    seed: u64,
    snapshots: usize,
) -> Result<BeamformerWeights> {
    let cs = cfg.assumed_constraint()?;
    let (r, source) = match covariance {
        CovarianceChoice::True => {
            let (r, _) = true_covariance(&cfg.true_scenario(cfg.snr_db, cfg.inr_db)?)?;
            (r, CovarianceSource::True)
        }
        CovarianceChoice::Sample => {
            check_snapshots(cfg, snapshots)?;
            let r = estimate_covariance(cfg, cfg.snr_db, snapshots, &mut rng_for(seed, 0))?;
            (r, CovarianceSource::Sample)
        }
    };
    let w = match solver {
        SolverKind::FullQCapon => full_qcapon_weights(&r, &cs)?,
        SolverKind::BaselineQCapon => baseline_qcapon_pair(&r, &cs)?,
    };
    Ok(w.with_covariance(source))
}

/// Full-weight response over φ, η ∈ [−90°, 90°] in 1° steps at the configured γ.
pub fn compute_beampattern(cfg: &ScenarioConfig) -> Result<BeampatternResult> {
    let weights = scenario_weights(
        cfg,
        SolverKind::FullQCapon,
        cfg.beampattern.covariance,
        cfg.seed,
        cfg.snapshots,
    )?;
    let grid: Vec<f64> = (-90..=90).map(f64::from).collect();
    let eta_rad: Vec<f64> = grid.iter().map(|e| e.to_radians()).collect();
    let gamma = cfg.beampattern.gamma_deg.to_radians();
    let array = cfg.array_config();
    let rows: Vec<Vec<f64>> = grid
        .par_iter()
        .map(|phi| {
            let row = beampattern(&weights, &[phi.to_radians()], &eta_rad, gamma, &array)?;
            Ok(row[0].iter().map(|&x| amplitude_db(x)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(BeampatternResult {
        phi_deg: grid.clone(),
        eta_deg: grid,
        response_db: rows,
        gamma_deg: cfg.beampattern.gamma_deg,
    })
}

pub fn run_beampattern(cfg: &ScenarioConfig, out: &Path) -> Result<BeampatternResult> {
    let pattern = compute_beampattern(cfg)?;
    write_beampattern_csv(out, &pattern)?;
    Ok(pattern)
}

fn point(cfg: &ScenarioConfig, axis: SweepAxis, value: f64) -> (f64, usize) {
    match axis {
        SweepAxis::Snr => (value, cfg.snapshots),
        SweepAxis::Snapshots => (cfg.snr_db, value as usize),
        SweepAxis::None => (cfg.snr_db, cfg.snapshots),
    }
}

/// One Monte-Carlo trial: seed `cfg.seed + trial`, stream `axis_index`.
pub fn sweep_trial(
    cfg: &ScenarioConfig,
    axis: SweepAxis,
    axis_index: usize,
    value: f64,
    trial: usize,
) -> TrialRecord {
    let seed = cfg.seed.wrapping_add(trial as u64);
    let stream = axis_index as u64;
    let mut record = TrialRecord {
        axis_value: value,
        trial,
        seed,
        stream,
        full_sinr_db: None,
        baseline_sinr_db: None,
        error: None,
    };
    let (snr_db, snapshots) = point(cfg, axis, value);
    let outcome = (|| -> Result<(f64, f64)> {
        let truth = cfg.true_scenario(snr_db, cfg.inr_db)?;
        let cs = cfg.assumed_constraint()?;
        let r = estimate_covariance(cfg, snr_db, snapshots, &mut rng_for(seed, stream))?;
        let full = full_qcapon_weights(&r, &cs)?.with_covariance(CovarianceSource::Sample);
        let base = baseline_qcapon_pair(&r, &cs)?.with_covariance(CovarianceSource::Sample);
        Ok((output_sinr(&full, &truth)?, output_sinr(&base, &truth)?))
    })();
    match outcome {
        Ok((f, b)) => {
            record.full_sinr_db = Some(f);
            record.baseline_sinr_db = Some(b);
        }
        Err(e) => record.error = Some(e.to_string()),
    }
    record
}

fn optimal_sinr(cfg: &ScenarioConfig, snr_db: f64) -> Result<f64> {
    let truth = cfg.true_scenario(snr_db, cfg.inr_db)?;
    let (r, _) = true_covariance(&truth)?;
    let w: BeamformerWeights = full_qcapon_weights(&r, &cfg.assumed_constraint()?)?;
    output_sinr(&w, &truth)
}

/// Monte-Carlo sweep over `values` of `axis`. Runs on the current rayon pool;
/// results do not depend on its size.
pub fn run_sweep(cfg: &ScenarioConfig, axis: SweepAxis, values: &[f64]) -> Result<SweepOutput> {
    cfg.validate()?;
    let values: Vec<f64> = if axis == SweepAxis::None { vec![0.0] } else { values.to_vec() };
    if values.is_empty() {
        return Err(Error::Config("sweep axis has no values".into()));
    }
    for &v in &values {
        if axis == SweepAxis::Snapshots && (v < 1.0 || v.fract() != 0.0) {
            return Err(Error::Config(format!("snapshot count {v} is not a positive integer")));
        }
        check_snapshots(cfg, point(cfg, axis, v).1)?;
    }

    let jobs: Vec<(usize, usize)> = (0..values.len())
        .flat_map(|a| (0..cfg.trials).map(move |t| (a, t)))
        .collect();
    let records: Vec<TrialRecord> = jobs
        .par_iter()
        .map(|&(a, t)| sweep_trial(cfg, axis, a, values[a], t))
        .collect();

    let failed = records.iter().filter(|r| r.error.is_some()).count();
    if failed as f64 > MAX_FAILURE_FRACTION * records.len() as f64 {
        let first = records.iter().find_map(|r| r.error.clone()).unwrap_or_default();
        return Err(Error::Run(format!(
            "{failed} of {} trials failed (limit {:.0}%); first error: {first}",
            records.len(),
            MAX_FAILURE_FRACTION * 100.0
        )));
    }

    let mut rows = Vec::with_capacity(values.len());
    for (a, &value) in values.iter().enumerate() {
        let chunk = &records[a * cfg.trials..(a + 1) * cfg.trials];
        let ok: Vec<(f64, f64)> = chunk
            .iter()
            .filter_map(|r| Some((r.full_sinr_db?, r.baseline_sinr_db?)))
            .collect();
        if ok.is_empty() {
            return Err(Error::Run(format!("every trial failed at {} = {value}", axis.column_name())));
        }
        let full: Vec<f64> = ok.iter().map(|p| p.0).collect();
        let base: Vec<f64> = ok.iter().map(|p| p.1).collect();
        let diff: Vec<f64> = ok.iter().map(|p| p.0 - p.1).collect();
        rows.push(SweepRow {
            value,
            full: MeanSe::of(&full),
            baseline: MeanSe::of(&base),
            diff: MeanSe::of(&diff),
            optimal_db: optimal_sinr(cfg, point(cfg, axis, value).0)?,
            trials_used: ok.len(),
            trials_failed: chunk.len() - ok.len(),
        });
    }
    Ok(SweepOutput {
        result: SweepResult { axis, rows },
        records,
    })
}

fn runlog_path(out: &Path) -> std::path::PathBuf {
    out.with_extension("runlog.jsonl")
}

fn finish(output: SweepOutput, out: &Path) -> Result<SweepOutput> {
    write_sweep_csv(out, &output.result)?;
    write_runlog(&runlog_path(out), &output.records)?;
    Ok(output)
}

/// SINR against input SNR; writes `out` and a run log next to it.
pub fn run_sinr_sweep(cfg: &ScenarioConfig, values: &[f64], out: &Path) -> Result<SweepOutput> {
    finish(run_sweep(cfg, SweepAxis::Snr, values)?, out)
}

/// SINR against snapshot count; writes `out` and a run log next to it.
pub fn run_snapshot_sweep(cfg: &ScenarioConfig, values: &[f64], out: &Path) -> Result<SweepOutput> {
    finish(run_sweep(cfg, SweepAxis::Snapshots, values)?, out)
}
