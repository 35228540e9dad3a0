//! Scenario configuration files (TOML).
//!
//! Angles are degrees. Source powers are not listed per signal: the SOI
//! carries `snr_db` above the noise in total, split between its two
//! sub-signals by `soi_power_split`, and every interferer carries `inr_db`
//! (split evenly when it has two sub-signals).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::array_model::{ArrayConfig, Scenario, SourceParams, SubSignalParams};
use crate::beamform::ConstraintSet;
use crate::error::{Error, Result};

const BUNDLED: &[(&str, &str)] = &[
    ("paper_fig2", include_str!("../../configs/paper_fig2.toml")),
    ("paper_fig3", include_str!("../../configs/paper_fig3.toml")),
    ("paper_fig4", include_str!("../../configs/paper_fig4.toml")),
    ("paper_fig5", include_str!("../../configs/paper_fig5.toml")),
];

/// Names accepted by [`bundled_config`].
pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(name, _)| *name)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Angles {
    pub theta: f64,
    pub phi: f64,
    pub gamma: f64,
    pub eta: f64,
}

impl Angles {
    fn shifted(self, error_deg: f64) -> Angles {
        // θ stays at 90°: the polarization model is only defined there
        Angles {
            theta: self.theta,
            phi: self.phi + error_deg,
            gamma: self.gamma + error_deg,
            eta: self.eta + error_deg,
        }
    }

    fn sub_signal(self, power: f64) -> SubSignalParams {
        SubSignalParams::from_degrees(self.theta, self.phi, self.gamma, self.eta, power)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SourceSpec {
    pub sub1: Angles,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub2: Option<Angles>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArraySpec {
    pub n_sensors: usize,
    #[serde(default = "default_spacing")]
    pub spacing_wavelengths: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepAxis {
    Snr,
    Snapshots,
    None,
}

impl SweepAxis {
    pub fn column_name(self) -> &'static str {
        match self {
            SweepAxis::Snr => "snr_db",
            SweepAxis::Snapshots => "snapshots",
            SweepAxis::None => "point",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub axis: SweepAxis,
    #[serde(default)]
    pub values: Vec<f64>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            axis: SweepAxis::None,
            values: vec![],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CovarianceChoice {
    True,
    Sample,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeampatternSpec {
    #[serde(default = "default_pattern_gamma")]
    pub gamma_deg: f64,
    #[serde(default = "default_covariance")]
    pub covariance: CovarianceChoice,
}

impl Default for BeampatternSpec {
    fn default() -> Self {
        BeampatternSpec {
            gamma_deg: default_pattern_gamma(),
            covariance: default_covariance(),
        }
    }
}

/// Validated experiment description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default)]
    pub name: String,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_snapshots")]
    pub snapshots: usize,
    pub snr_db: f64,
    pub inr_db: f64,
    #[serde(default = "default_noise_power")]
    pub noise_power: f64,
    /// Fraction of the SOI power carried by sub-signal 1.
    #[serde(default = "default_split")]
    pub soi_power_split: f64,
    /// Offset added to φ, γ and η of the true SOI relative to the assumed one.
    #[serde(default)]
    pub pointing_error_deg: f64,
    /// Diagonal loading factor ε (load = ε·trace(R)/N); 0 disables.
    #[serde(default)]
    pub diagonal_loading: f64,
    pub array: ArraySpec,
    pub soi: SourceSpec,
    #[serde(default)]
    pub interferers: Vec<SourceSpec>,
    #[serde(default)]
    pub sweep: SweepSpec,
    #[serde(default)]
    pub beampattern: BeampatternSpec,
}

fn default_spacing() -> f64 {
    0.5
}
fn default_pattern_gamma() -> f64 {
    60.0
}
fn default_covariance() -> CovarianceChoice {
    CovarianceChoice::True
}
fn default_seed() -> u64 {
    1
}
fn default_trials() -> usize {
    200
}
fn default_snapshots() -> usize {
    100
}
fn default_noise_power() -> f64 {
    1.0
}
fn default_split() -> f64 {
    0.5
}

/// Reads and validates a config file.
pub fn load_config(path: &Path) -> Result<ScenarioConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// One of the bundled scenario files, by name.
pub fn bundled_config(name: &str) -> Result<ScenarioConfig> {
    let text = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Config(format!("no bundled config named {name:?}")))?;
    parse_config(text)
}

/// A file path if it exists, otherwise a bundled name.
pub fn resolve_config(arg: &str) -> Result<ScenarioConfig> {
    let path = Path::new(arg);
    if path.exists() {
        load_config(path)
    } else if bundled_names().any(|n| n == arg) {
        bundled_config(arg)
    } else {
        Err(Error::Config(format!(
            "{arg:?} is neither a readable file nor a bundled config ({})",
            bundled_names().collect::<Vec<_>>().join(", ")
        )))
    }
}

pub fn parse_config(text: &str) -> Result<ScenarioConfig> {
    let cfg: ScenarioConfig = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.trials < 1 {
            return fail("trials must be >= 1".into());
        }
        if self.snapshots < 1 {
            return fail("snapshots must be >= 1".into());
        }
        ArrayConfig::new(self.array.n_sensors, self.array.spacing_wavelengths)?;
        if !(self.noise_power > 0.0 && self.noise_power.is_finite()) {
            return fail(format!("noise_power must be positive, got {}", self.noise_power));
        }
        if !(0.0..=1.0).contains(&self.soi_power_split) {
            return fail(format!("soi_power_split must lie in [0, 1], got {}", self.soi_power_split));
        }
        if !(self.diagonal_loading >= 0.0 && self.diagonal_loading.is_finite()) {
            return fail(format!("diagonal_loading must be >= 0, got {}", self.diagonal_loading));
        }
        if !self.snr_db.is_finite() || !self.inr_db.is_finite() || !self.pointing_error_deg.is_finite() {
            return fail("snr_db, inr_db and pointing_error_deg must be finite".into());
        }
        let Some(sub2) = self.soi.sub2 else {
            return fail("soi.sub2 is required: the signal of interest has two sub-signals".into());
        };
        check_source("soi", &self.soi)?;
        if sub2.theta != self.soi.sub1.theta || sub2.phi != self.soi.sub1.phi {
            return fail("soi.sub1 and soi.sub2 must share theta and phi".into());
        }
        for (m, src) in self.interferers.iter().enumerate() {
            check_source(&format!("interferers[{m}]"), src)?;
        }
        match self.sweep.axis {
            SweepAxis::None => {}
            axis => {
                if self.sweep.values.is_empty() {
                    return fail("sweep.values must not be empty".into());
                }
                if self.sweep.values.iter().any(|v| !v.is_finite()) {
                    return fail("sweep.values must be finite".into());
                }
                if axis == SweepAxis::Snapshots
                    && self.sweep.values.iter().any(|v| *v < 1.0 || v.fract() != 0.0)
                {
                    return fail("snapshot sweep values must be positive integers".into());
                }
            }
        }
        if !self.beampattern.gamma_deg.is_finite() {
            return fail("beampattern.gamma_deg must be finite".into());
        }
        // the assumed constraint must be usable
        ConstraintSet::new(&self.assumed_steering()?[0], &self.assumed_steering()?[1])?;
        Ok(())
    }

    pub fn array_config(&self) -> ArrayConfig {
        ArrayConfig {
            n_sensors: self.array.n_sensors,
            spacing_wavelengths: self.array.spacing_wavelengths,
        }
    }

    fn soi_powers(&self, snr_db: f64) -> (f64, f64) {
        let total = self.noise_power * 10f64.powf(snr_db / 10.0);
        (total * self.soi_power_split, total * (1.0 - self.soi_power_split))
    }

    fn build(&self, soi: SourceSpec, snr_db: f64, inr_db: f64) -> Result<Scenario> {
        let (p1, p2) = self.soi_powers(snr_db);
        let soi = SourceParams::new(
            soi.sub1.sub_signal(p1),
            soi.sub2.map(|a| a.sub_signal(p2)),
        )?;
        let p_int = self.noise_power * 10f64.powf(inr_db / 10.0);
        let interferers = self
            .interferers
            .iter()
            .map(|src| {
                let share = if src.sub2.is_some() { p_int / 2.0 } else { p_int };
                SourceParams::new(src.sub1.sub_signal(share), src.sub2.map(|a| a.sub_signal(share)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Scenario {
            array: self.array_config(),
            soi,
            interferers,
            noise_power: self.noise_power,
        })
    }

    /// The scenario the array actually sees, with the pointing error applied
    /// to the SOI.
    pub fn true_scenario(&self, snr_db: f64, inr_db: f64) -> Result<Scenario> {
        let err = self.pointing_error_deg;
        let soi = SourceSpec {
            sub1: self.soi.sub1.shifted(err),
            sub2: self.soi.sub2.map(|a| a.shifted(err)),
        };
        self.build(soi, snr_db, inr_db)
    }

    /// The scenario the beamformer believes in (no pointing error).
    pub fn assumed_scenario(&self, snr_db: f64, inr_db: f64) -> Result<Scenario> {
        self.build(self.soi, snr_db, inr_db)
    }

    fn assumed_steering(&self) -> Result<Vec<crate::qlinalg::QVector>> {
        self.assumed_scenario(self.snr_db, self.inr_db)?.soi_steering()
    }

    /// Constraint built from the assumed SOI parameters.
    pub fn assumed_constraint(&self) -> Result<ConstraintSet> {
        let b = self.assumed_steering()?;
        ConstraintSet::new(&b[0], &b[1])
    }
}

fn check_source(label: &str, src: &SourceSpec) -> Result<()> {
    for (idx, angles) in std::iter::once(&src.sub1).chain(src.sub2.as_ref()).enumerate() {
        if (angles.theta - 90.0).abs() > 1e-9 {
            return Err(Error::Config(format!(
                "{label}.sub{}: theta must be 90 (polarization model), got {}",
                idx + 1,
                angles.theta
            )));
        }
        for (name, v) in [("phi", angles.phi), ("gamma", angles.gamma), ("eta", angles.eta)] {
            if !v.is_finite() {
                return Err(Error::Config(format!("{label}.sub{}.{name} must be finite", idx + 1)));
            }
        }
    }
    if let Some(s2) = src.sub2 {
        if s2.theta != src.sub1.theta || s2.phi != src.sub1.phi {
            return Err(Error::Config(format!("{label}: sub-signals must share theta and phi")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_configs_parse() {
        for name in bundled_names() {
            bundled_config(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(bundled_config("nope").is_err());
    }

    #[test]
    fn fig3_lists_the_four_interferer_scenario() {
        let cfg = bundled_config("paper_fig3").unwrap();
        assert_eq!(cfg.array.n_sensors, 10);
        assert_eq!(cfg.soi.sub1, Angles { theta: 90.0, phi: 1.5, gamma: 90.0, eta: 45.0 });
        assert_eq!(cfg.soi.sub2, Some(Angles { theta: 90.0, phi: 1.5, gamma: 0.0, eta: 0.0 }));
        let ints: Vec<(f64, f64, f64, f64)> = cfg
            .interferers
            .iter()
            .map(|s| (s.sub1.theta, s.sub1.phi, s.sub1.gamma, s.sub1.eta))
            .collect();
        assert_eq!(
            ints,
            vec![
                (90.0, 30.0, 60.0, -80.0),
                (90.0, -70.0, 60.0, 30.0),
                (90.0, -20.0, 60.0, 70.0),
                (90.0, 50.0, 60.0, -50.0),
            ]
        );
        assert!(cfg.interferers.iter().all(|s| s.sub2.is_none()));
    }

    fn base_text() -> String {
        bundled_config("paper_fig3")
            .map(|c| toml::to_string(&c).unwrap())
            .unwrap()
    }

    #[test]
    fn zero_trials_rejected() {
        let text = base_text().replace("trials = 200", "trials = 0");
        match parse_config(&text) {
            Err(Error::Config(msg)) => assert!(msg.contains("trials")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mismatched_soi_directions_rejected() {
        let mut cfg = bundled_config("paper_fig3").unwrap();
        cfg.soi.sub2.as_mut().unwrap().phi = 2.0;
        match cfg.validate() {
            Err(Error::Config(msg)) => assert!(msg.contains("share")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected_with_location() {
        let text = format!("bogus_key = 3\n{}", base_text());
        match parse_config(&text) {
            Err(Error::Parse(msg)) => assert!(msg.contains("bogus_key") && msg.contains("line 1"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn off_plane_theta_rejected() {
        let mut cfg = bundled_config("paper_fig3").unwrap();
        cfg.interferers[0].sub1.theta = 80.0;
        assert!(matches!(cfg.validate(), Err(Error::Config(m)) if m.contains("theta")));
    }

    #[test]
    fn pointing_error_shifts_true_soi_only() {
        let cfg = bundled_config("paper_fig4").unwrap();
        assert_eq!(cfg.pointing_error_deg, 1.0);
        let truth = cfg.true_scenario(15.0, 15.0).unwrap();
        let assumed = cfg.assumed_scenario(15.0, 15.0).unwrap();
        let deg = |x: f64| x.to_degrees();
        assert!((deg(truth.soi.sub1.phi) - 2.5).abs() < 1e-12);
        assert!((deg(truth.soi.sub1.gamma) - 91.0).abs() < 1e-12);
        assert!((deg(truth.soi.sub1.eta) - 46.0).abs() < 1e-12);
        assert!((deg(truth.soi.sub2.unwrap().gamma) - 1.0).abs() < 1e-12);
        assert!((deg(truth.soi.sub1.theta) - 90.0).abs() < 1e-12);
        assert!((deg(assumed.soi.sub1.phi) - 1.5).abs() < 1e-12);
        assert_eq!(truth.interferers, assumed.interferers);
    }

    #[test]
    fn powers_follow_snr_inr_and_split() {
        let cfg = bundled_config("paper_fig3").unwrap();
        let sc = cfg.true_scenario(10.0, 20.0).unwrap();
        assert!((sc.soi.sub1.power - 5.0).abs() < 1e-12);
        assert!((sc.soi.sub2.unwrap().power - 5.0).abs() < 1e-12);
        assert!(sc.interferers.iter().all(|s| (s.sub1.power - 100.0).abs() < 1e-9));
    }
}
