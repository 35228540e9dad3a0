use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qcapon::harness::{self, ScenarioConfig, SweepAxis};
use qcapon::{selftest, Error, Result};

#[derive(Parser)]
#[command(name = "qcapon", version, about = "Quaternion Capon beamforming experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Beam pattern of the full beamformer over (phi, eta).
    Beampattern(Common),
    /// Output SINR against input SNR.
    SinrSweep(SweepArgs),
    /// Output SINR against snapshot count.
    SnapshotSweep(SweepArgs),
    /// Run the built-in consistency checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Config file, or a bundled name (paper_fig2 .. paper_fig5).
    #[arg(long)]
    config: String,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Axis values, overriding the config's sweep section.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    values: Option<Vec<f64>>,
}

fn load(common: &Common) -> Result<ScenarioConfig> {
    let mut cfg = harness::resolve_config(&common.config)?;
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if let Some(trials) = common.trials {
        cfg.trials = trials;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn sweep_values(cfg: &ScenarioConfig, args: &SweepArgs, axis: SweepAxis) -> Result<Vec<f64>> {
    if let Some(v) = &args.values {
        return Ok(v.clone());
    }
    if cfg.sweep.axis == axis {
        return Ok(cfg.sweep.values.clone());
    }
    Err(Error::Config(format!(
        "config has no {} sweep; pass --values",
        axis.column_name()
    )))
}

fn run_sweep(args: &SweepArgs, axis: SweepAxis) -> Result<()> {
    let cfg = load(&args.common)?;
    let values = sweep_values(&cfg, args, axis)?;
    let out = &args.common.out;
    let result = harness::with_threads(args.common.threads, || match axis {
        SweepAxis::Snapshots => harness::run_snapshot_sweep(&cfg, &values, out),
        _ => harness::run_sinr_sweep(&cfg, &values, out),
    })??;
    for row in &result.result.rows {
        println!(
            "{}={} full {} dB (se {}) baseline {} dB (se {}) optimal {} dB",
            axis.column_name(),
            row.value,
            harness::format_sig(row.full.mean, 6),
            harness::format_sig(row.full.se, 3),
            harness::format_sig(row.baseline.mean, 6),
            harness::format_sig(row.baseline.se, 3),
            harness::format_sig(row.optimal_db, 6),
        );
    }
    println!("wrote {}", out.display());
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Beampattern(common) => {
            let cfg = load(&common)?;
            let pattern = harness::with_threads(common.threads, || harness::run_beampattern(&cfg, &common.out))??;
            println!(
                "{} x {} grid at gamma = {} deg, wrote {}",
                pattern.phi_deg.len(),
                pattern.eta_deg.len(),
                pattern.gamma_deg,
                common.out.display()
            );
            Ok(true)
        }
        Command::SinrSweep(args) => run_sweep(&args, SweepAxis::Snr).map(|_| true),
        Command::SnapshotSweep(args) => run_sweep(&args, SweepAxis::Snapshots).map(|_| true),
        Command::Selftest { threads } => {
            let checks = harness::with_threads(threads, selftest::run)?;
            let mut all = true;
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                all &= c.passed;
            }
            Ok(all)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let line = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{line}");
            ExitCode::FAILURE
        }
    }
}
