//! Sensor-attack injectors on the measured voltage channel.
//!
//! Injectors sit between the plant and the estimator and corrupt only
//! `v_meas`; current, ground-truth voltage, and ground-truth SOC pass
//! through untouched. Attack windows are half-open `[start, start+duration)`
//! so the sample at `start` is already attacked.

use crate::telemetry::TelemetryFrame;
use serde::{Deserialize, Serialize};

/// Which corruption the adversary applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttackKind {
    /// No attack; identity injector.
    None,
    /// Denial of service: the channel repeats the last pre-attack frame.
    DosHold,
    /// False data injection: a constant bias on every module.
    FdiBias,
    /// Ascending module voltages are rearranged to descending order.
    DataSwap,
}

/// Attack description for one scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttackSpec {
    pub kind: AttackKind,
    /// Attack onset in seconds.
    #[serde(default)]
    pub start_s: f64,
    /// Attack duration in seconds; `inf` holds until the end of the run.
    #[serde(default = "default_duration")]
    pub duration_s: f64,
    /// Bias in volts, used by `FdiBias` only.
    #[serde(default)]
    pub bias_v: f64,
}

fn default_duration() -> f64 {
    f64::INFINITY
}

impl AttackSpec {
    pub fn none() -> Self {
        Self { kind: AttackKind::None, start_s: 0.0, duration_s: f64::INFINITY, bias_v: 0.0 }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.start_s < 0.0 {
            return Err(format!("attack start_s must be >= 0, got {}", self.start_s));
        }
        if !(self.duration_s > 0.0) {
            return Err(format!("attack duration_s must be positive, got {}", self.duration_s));
        }
        if !self.bias_v.is_finite() {
            return Err("attack bias_v must be finite".into());
        }
        Ok(())
    }

    /// Whether `t_s` falls inside the half-open attack window.
    pub fn active_at(&self, t_s: f64) -> bool {
        self.kind != AttackKind::None
            && t_s >= self.start_s
            && t_s < self.start_s + self.duration_s
    }
}

/// Per-stream injector state.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AttackState {
    /// Frame held during a DoS attack; present iff a hold has begun.
    held_frame: Option<Vec<f64>>,
    /// Most recent measurement received outside the attack window.
    last_clean: Option<Vec<f64>>,
    /// Whether the previous sample fell inside the attack window.
    pub active: bool,
}

/// Applies the attack to one frame's measurement, returning the corrupted
/// voltages. Injectors are total: no attack kind can fail.
pub fn inject(frame: &TelemetryFrame, spec: &AttackSpec, state: &mut AttackState) -> Vec<f64> {
    if !spec.active_at(frame.t_s) {
        state.active = false;
        state.held_frame = None;
        state.last_clean = Some(frame.v_meas.clone());
        return frame.v_meas.clone();
    }
    state.active = true;
    match spec.kind {
        AttackKind::None => frame.v_meas.clone(),
        AttackKind::DosHold => {
            // The hold latches the last measurement received before the
            // attack and repeats it bit-exactly for the whole window. An
            // attack starting on the very first sample holds that sample.
            if state.held_frame.is_none() {
                let held = state.last_clean.clone().unwrap_or_else(|| frame.v_meas.clone());
                state.held_frame = Some(held);
            }
            state.held_frame.as_ref().unwrap().clone()
        }
        AttackKind::FdiBias => frame.v_meas.iter().map(|v| v + spec.bias_v).collect(),
        AttackKind::DataSwap => swap_descending(&frame.v_meas),
    }
}

/// Reassigns values so the sorted-ascending positions receive descending
/// values: the module with the smallest voltage reports the largest, and so
/// on. Ties keep their original relative order (stable sort), which makes
/// the permutation deterministic.
fn swap_descending(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(std::cmp::Ordering::Equal));
    let mut out = values.to_vec();
    let k = values.len();
    for (rank, &pos) in order.iter().enumerate() {
        // Position holding ascending rank r receives the value of rank k-1-r.
        out[pos] = values[order[k - 1 - rank]];
    }
    out
}
