use qcapon::harness::{bundled_config, parse_config, run_snapshot_sweep, run_sweep, SweepAxis};
use qcapon::Error;

#[test]
fn large_sample_matches_optimal() {
    let mut cfg = bundled_config("paper_fig3").unwrap();
    cfg.trials = 1;
    cfg.snapshots = 100_000;
    let out = run_sweep(&cfg, SweepAxis::Snr, &[0.0]).unwrap();
    let row = &out.result.rows[0];
    assert!((row.full.mean - row.optimal_db).abs() < 0.5, "{row:?}");
    assert!((row.baseline.mean - row.optimal_db).abs() < 0.5, "{row:?}");
}

#[test]
fn custom_scenario_from_text() {
    let text = r#"
snr_db = 10.0
inr_db = 20.0
trials = 4
snapshots = 40
diagonal_loading = 0.01

[array]
n_sensors = 6

[soi]
sub1 = { theta = 90.0, phi = -10.0, gamma = 45.0, eta = 0.0 }
sub2 = { theta = 90.0, phi = -10.0, gamma = 10.0, eta = 60.0 }

[[interferers]]
sub1 = { theta = 90.0, phi = 40.0, gamma = 30.0, eta = 20.0 }
sub2 = { theta = 90.0, phi = 40.0, gamma = 70.0, eta = -20.0 }

[sweep]
axis = "snapshots"
values = [20, 40]
"#;
    let cfg = parse_config(text).unwrap();
    assert_eq!(cfg.seed, 1);
    assert_eq!(cfg.array.spacing_wavelengths, 0.5);
    let truth = cfg.true_scenario(10.0, 20.0).unwrap();
    assert!((truth.interferers[0].total_power() - 100.0).abs() < 1e-9);

    let dir = tempfile::tempdir().unwrap();
    let out = run_snapshot_sweep(&cfg, &cfg.sweep.values, &dir.path().join("s.csv")).unwrap();
    assert_eq!(out.result.rows.len(), 2);
    assert_eq!(out.records.len(), 8);
    assert!(out.result.rows.iter().all(|r| r.trials_failed == 0));
    assert!(dir.path().join("s.runlog.jsonl").exists());
}

#[test]
fn invalid_sweeps_rejected() {
    let mut cfg = bundled_config("paper_fig4").unwrap();
    cfg.trials = 1;
    assert!(matches!(run_sweep(&cfg, SweepAxis::Snapshots, &[]), Err(Error::Config(_))));
    assert!(matches!(run_sweep(&cfg, SweepAxis::Snapshots, &[12.5]), Err(Error::Config(_))));
    cfg.soi.sub1.theta = 91.0;
    assert!(matches!(run_sweep(&cfg, SweepAxis::Snapshots, &[20.0]), Err(Error::Config(_))));
}
