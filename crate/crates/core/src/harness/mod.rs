//! Experiment orchestration: beam patterns and Monte-Carlo SINR sweeps.

pub mod config;
mod output;
mod sweep;

pub use config::{
    bundled_config, bundled_names, load_config, parse_config, resolve_config, Angles, ArraySpec,
    BeampatternSpec, CovarianceChoice, ScenarioConfig, SourceSpec, SweepAxis, SweepSpec,
};
pub use output::{format_sig, pairwise_sum, write_beampattern_csv, write_runlog, write_sweep_csv};
pub use sweep::{
    compute_beampattern, run_beampattern, run_sinr_sweep, run_snapshot_sweep, run_sweep,
    scenario_weights, sweep_trial, BeampatternResult, MeanSe, SweepOutput, SweepResult, SweepRow, TrialRecord,
    MAX_FAILURE_FRACTION,
};

/// Runs `f` on a rayon pool with `threads` workers (0 = rayon's default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> crate::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| crate::Error::Run(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}
