//! Residual-based attack trigger.
//!
//! Two residuals drive the decision. The detection residual RD compares
//! measured module voltages against the Koopman prediction sample by
//! sample; `attacked` latches once RD stays above its threshold for
//! `confirm_count` consecutive samples. The isolation residual RI tracks
//! the deviation of the fitted output matrix (the Koopman-mode estimates)
//! from the last reference fitted on clean data; `sensor_attack` latches
//! when an attacked verdict coincides with RI above its own threshold.
//! Verdicts are monotone: once latched they stay latched for the run.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorConfig {
    /// RD threshold in volts.
    pub rd_threshold_v: f64,
    /// RI threshold, dimensionless.
    pub ri_threshold: f64,
    /// Consecutive RD exceedances required to latch.
    pub confirm_count: usize,
}

impl DetectorConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.rd_threshold_v > 0.0) {
            return Err(format!("rd_threshold_v must be positive, got {}", self.rd_threshold_v));
        }
        if !(self.ri_threshold > 0.0) {
            return Err(format!("ri_threshold must be positive, got {}", self.ri_threshold));
        }
        if self.confirm_count == 0 {
            return Err("confirm_count must be >= 1".into());
        }
        Ok(())
    }
}

/// Latched decision state.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DetectorVerdict {
    pub attacked: bool,
    pub sensor_attack: bool,
    /// Sample time at which `attacked` latched.
    pub trigger_time_s: Option<f64>,
}

/// Maximum absolute per-module deviation between measurement and
/// prediction (infinity norm across modules).
pub fn detection_residual(v_meas: &[f64], v_p: &[f64]) -> f64 {
    debug_assert_eq!(v_meas.len(), v_p.len());
    v_meas
        .iter()
        .zip(v_p.iter())
        .map(|(m, p)| (m - p).abs())
        .fold(0.0, f64::max)
}

/// Relative Frobenius deviation of the current output matrix from the
/// reference fitted on uncorrupted data.
pub fn isolation_residual(c_ref: &DMatrix<f64>, c_now: &DMatrix<f64>) -> Result<f64, String> {
    if c_ref.shape() != c_now.shape() {
        return Err(format!(
            "output-matrix shapes differ: {:?} vs {:?}",
            c_ref.shape(),
            c_now.shape()
        ));
    }
    let denom = c_ref.norm();
    if denom == 0.0 {
        return Err("reference output matrix is zero".into());
    }
    Ok((c_now - c_ref).norm() / denom)
}

/// Sequential trigger; one per monitored stream.
#[derive(Debug, Clone)]
pub struct Detector {
    cfg: DetectorConfig,
    verdict: DetectorVerdict,
    consecutive: usize,
    /// Latest isolation residual, refreshed once per window fit.
    current_ri: f64,
}

impl Detector {
    pub fn new(cfg: DetectorConfig) -> Self {
        Self { cfg, verdict: DetectorVerdict::default(), consecutive: 0, current_ri: 0.0 }
    }

    pub fn config(&self) -> &DetectorConfig {
        &self.cfg
    }

    pub fn verdict(&self) -> DetectorVerdict {
        self.verdict
    }

    /// Supplies the RI computed from the most recent window fit.
    pub fn set_isolation_residual(&mut self, ri: f64) {
        self.current_ri = ri;
        self.refresh_sensor_latch();
    }

    /// Per-sample update with the detection residual at time `t_s`.
    pub fn update(&mut self, t_s: f64, rd: f64) -> DetectorVerdict {
        if !self.verdict.attacked {
            if rd > self.cfg.rd_threshold_v {
                self.consecutive += 1;
                if self.consecutive >= self.cfg.confirm_count {
                    self.verdict.attacked = true;
                    self.verdict.trigger_time_s = Some(t_s);
                }
            } else {
                self.consecutive = 0;
            }
        }
        self.refresh_sensor_latch();
        self.verdict
    }

    fn refresh_sensor_latch(&mut self) {
        if self.verdict.attacked && !self.verdict.sensor_attack && self.current_ri > self.cfg.ri_threshold {
            self.verdict.sensor_attack = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg() -> DetectorConfig {
        DetectorConfig { rd_threshold_v: 0.5, ri_threshold: 0.1, confirm_count: 3 }
    }

    #[test]
    fn residual_of_matching_vectors_is_zero() {
        assert_eq!(detection_residual(&[200.0, 201.0], &[200.0, 201.0]), 0.0);
    }

    #[test]
    fn residual_of_uniform_bias_is_its_magnitude() {
        assert_relative_eq!(detection_residual(&[197.0, 198.0], &[200.0, 201.0]), 3.0);
    }

    #[test]
    fn single_corrupted_module_dominates() {
        assert_relative_eq!(detection_residual(&[200.0, 207.5], &[200.0, 201.0]), 6.5);
    }

    #[test]
    fn isolation_residual_cases() {
        let c = DMatrix::from_row_slice(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert_eq!(isolation_residual(&c, &c).unwrap(), 0.0);
        let doubled = &c * 2.0;
        assert_relative_eq!(isolation_residual(&c, &doubled).unwrap(), 1.0, epsilon = 1e-12);
        let wrong = DMatrix::zeros(3, 2);
        assert!(isolation_residual(&c, &wrong).is_err());
    }

    #[test]
    fn quiet_stream_never_latches() {
        let mut d = Detector::new(cfg());
        for k in 0..100 {
            let v = d.update(k as f64, 0.0);
            assert!(!v.attacked);
        }
    }

    #[test]
    fn trigger_counts_consecutive_exceedances() {
        let mut d = Detector::new(cfg());
        for k in 0..10 {
            d.update(k as f64, 0.0);
        }
        // RD jumps at k0 = 10; confirm_count = 3 latches at 12.
        for k in 10..20 {
            let v = d.update(k as f64, 3.0);
            if k < 12 {
                assert!(!v.attacked, "latched too early at {k}");
            } else {
                assert!(v.attacked);
            }
        }
        assert_eq!(d.verdict().trigger_time_s, Some(12.0));
    }

    #[test]
    fn interrupted_exceedances_reset_the_count() {
        let mut d = Detector::new(cfg());
        d.update(0.0, 3.0);
        d.update(1.0, 3.0);
        d.update(2.0, 0.0);
        d.update(3.0, 3.0);
        d.update(4.0, 3.0);
        assert!(!d.verdict().attacked);
        d.update(5.0, 3.0);
        assert!(d.verdict().attacked);
    }

    #[test]
    fn rd_without_ri_is_not_a_sensor_attack() {
        let mut d = Detector::new(cfg());
        d.set_isolation_residual(0.01);
        for k in 0..5 {
            d.update(k as f64, 3.0);
        }
        let v = d.verdict();
        assert!(v.attacked);
        assert!(!v.sensor_attack);
        // RI rising later still latches the sensor flag.
        d.set_isolation_residual(0.5);
        assert!(d.verdict().sensor_attack);
    }

    #[test]
    fn verdict_is_monotone() {
        let mut d = Detector::new(cfg());
        d.set_isolation_residual(1.0);
        for k in 0..5 {
            d.update(k as f64, 3.0);
        }
        assert!(d.verdict().sensor_attack);
        // Residuals falling back never clear the latch.
        d.set_isolation_residual(0.0);
        for k in 5..50 {
            let v = d.update(k as f64, 0.0);
            assert!(v.attacked && v.sensor_attack);
        }
        assert_eq!(d.verdict().trigger_time_s, Some(2.0));
    }

    #[test]
    fn sensor_implies_attacked() {
        let mut d = Detector::new(cfg());
        d.set_isolation_residual(5.0);
        let v = d.update(0.0, 0.0);
        assert!(!v.sensor_attack && !v.attacked);
    }
}
