use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::sweep::{BeampatternResult, SweepResult, TrialRecord};
use crate::error::Result;

/// `x` with `sig` significant digits, fixed notation.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Pairwise (cascade) summation; the grouping depends only on the length.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        n if n <= 8 => xs.iter().sum(),
        n => {
            let (lo, hi) = xs.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    Ok(BufWriter::new(File::create(path)?))
}

pub fn write_beampattern_csv(path: &Path, pattern: &BeampatternResult) -> Result<()> {
    let mut out = create(path)?;
    writeln!(out, "phi_deg,eta_deg,response_db")?;
    for (i, phi) in pattern.phi_deg.iter().enumerate() {
        for (j, eta) in pattern.eta_deg.iter().enumerate() {
            writeln!(out, "{phi},{eta},{}", format_sig(pattern.response_db[i][j], 6))?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_sweep_csv(path: &Path, result: &SweepResult) -> Result<()> {
    let mut out = create(path)?;
    writeln!(
        out,
        "{},full_mean_db,full_se_db,baseline_mean_db,baseline_se_db,diff_mean_db,diff_se_db,optimal_db,trials_used,trials_failed",
        result.axis.column_name()
    )?;
    let f = |x: f64| format_sig(x, 6);
    for row in &result.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            row.value,
            f(row.full.mean),
            f(row.full.se),
            f(row.baseline.mean),
            f(row.baseline.se),
            f(row.diff.mean),
            f(row.diff.se),
            f(row.optimal_db),
            row.trials_used,
            row.trials_failed
        )?;
    }
    out.flush()?;
    Ok(())
}

/// One JSON object per trial.
pub fn write_runlog(path: &Path, records: &[TrialRecord]) -> Result<()> {
    let mut out = create(path)?;
    for rec in records {
        serde_json::to_writer(&mut out, rec).map_err(std::io::Error::other)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}
