//! Desk-scale battery pack simulator.
//!
//! A first-order Thevenin equivalent circuit stands in for the
//! electrochemical plant: an OCV source per state of charge, a series
//! resistance, and one RC polarization pair. The estimator under test only
//! consumes `(V, I_c)` streams, so any plant with OCV–SOC structure, ohmic
//! drop, and slow polarization exercises it. Module-to-module heterogeneity
//! comes from seeded per-module parameter perturbations so that modules
//! report distinct voltages.
//!
//! Sign convention: positive current discharges the pack.

mod ocv;

pub use ocv::{OcvCurve, OcvError, OcvMapError, OcvSocMap};

use crate::telemetry::{TelemetryFrame, TelemetryStream};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Electrical parameters of one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellParams {
    /// Nominal capacity in ampere-hours.
    pub capacity_ah: f64,
    /// Lower cut-off voltage.
    pub v_min: f64,
    /// Upper cut-off voltage.
    pub v_max: f64,
    /// Series resistance in ohms.
    pub r0: f64,
    /// Polarization resistance in ohms.
    pub r1: f64,
    /// Polarization capacitance in farads.
    pub c1: f64,
    /// Open-circuit voltage curve over SOC in [0, 1].
    pub ocv_curve: OcvCurve,
}

impl CellParams {
    /// 5 Ah NMC-like cylindrical cell with 2.5 V / 4.2 V cut-offs.
    pub fn default_nmc_5ah() -> Self {
        Self {
            capacity_ah: 5.0,
            v_min: 2.5,
            v_max: 4.2,
            r0: 0.02,
            r1: 0.015,
            c1: 2000.0,
            ocv_curve: OcvCurve::default_nmc(),
        }
    }

    pub fn validate(&self) -> Result<(), CellParamError> {
        if !(self.capacity_ah > 0.0) {
            return Err(CellParamError::NonPositive("capacity_ah"));
        }
        if !(self.v_min < self.v_max) {
            return Err(CellParamError::VoltageOrder { v_min: self.v_min, v_max: self.v_max });
        }
        for (name, v) in [("r0", self.r0), ("r1", self.r1), ("c1", self.c1)] {
            if !(v > 0.0) {
                return Err(CellParamError::NonPositive(name));
            }
        }
        if (self.ocv_curve.v_min() - self.v_min).abs() > 1e-9
            || (self.ocv_curve.v_max() - self.v_max).abs() > 1e-9
        {
            return Err(CellParamError::CurveEndpoints {
                curve_lo: self.ocv_curve.v_min(),
                curve_hi: self.ocv_curve.v_max(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CellParamError {
    NonPositive(&'static str),
    VoltageOrder { v_min: f64, v_max: f64 },
    CurveEndpoints { curve_lo: f64, curve_hi: f64 },
}

impl fmt::Display for CellParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellParamError::NonPositive(name) => write!(f, "{name} must be positive"),
            CellParamError::VoltageOrder { v_min, v_max } => {
                write!(f, "v_min {v_min} must be below v_max {v_max}")
            }
            CellParamError::CurveEndpoints { curve_lo, curve_hi } => write!(
                f,
                "OCV curve endpoints ({curve_lo}, {curve_hi}) must match the cut-off voltages"
            ),
        }
    }
}

impl std::error::Error for CellParamError {}

/// Linear capacity fade plus linear resistance growth.
///
/// Deterministic: `capacity * (1 - fade*cycles)`, `r0 * (1 + growth*cycles)`.
pub fn apply_aging(
    cell: &CellParams,
    cycles: u32,
    fade_per_cycle: f64,
    r_growth_per_cycle: f64,
) -> Result<CellParams, AgingError> {
    if !(0.0..0.01).contains(&fade_per_cycle) {
        return Err(AgingError::FadeOutOfRange(fade_per_cycle));
    }
    if r_growth_per_cycle < 0.0 {
        return Err(AgingError::NegativeGrowth(r_growth_per_cycle));
    }
    let factor = 1.0 - fade_per_cycle * cycles as f64;
    if factor <= 0.0 {
        return Err(AgingError::CapacityDepleted { cycles, fade_per_cycle });
    }
    let mut aged = cell.clone();
    aged.capacity_ah = cell.capacity_ah * factor;
    aged.r0 = cell.r0 * (1.0 + r_growth_per_cycle * cycles as f64);
    Ok(aged)
}

#[derive(Debug, Clone, PartialEq)]
pub enum AgingError {
    FadeOutOfRange(f64),
    NegativeGrowth(f64),
    CapacityDepleted { cycles: u32, fade_per_cycle: f64 },
}

impl fmt::Display for AgingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AgingError::FadeOutOfRange(v) => {
                write!(f, "fade_per_cycle must lie in [0, 0.01), got {v}")
            }
            AgingError::NegativeGrowth(v) => {
                write!(f, "r_growth_per_cycle must be non-negative, got {v}")
            }
            AgingError::CapacityDepleted { cycles, fade_per_cycle } => write!(
                f,
                "aging {cycles} cycles at fade {fade_per_cycle} drives capacity to zero"
            ),
        }
    }
}

impl std::error::Error for AgingError {}

/// Series/parallel arrangement of one pack.
///
/// Modules are electrically identical groups of `series_per_module` series
/// positions, each position holding `parallel_per_series` cells. Every
/// module sees the commanded module current; a cell carries
/// `current / parallel_per_series`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PackTopology {
    pub modules: usize,
    pub series_per_module: usize,
    pub parallel_per_series: usize,
    pub label: String,
}

impl PackTopology {
    /// 900 cells: 3 modules of 60s5p, ~250 V ceiling.
    pub fn pack_250v() -> Self {
        Self { modules: 3, series_per_module: 60, parallel_per_series: 5, label: "5p60s x3".into() }
    }

    /// 2000 cells: 5 modules of 80s5p, ~335 V ceiling.
    pub fn pack_335v() -> Self {
        Self { modules: 5, series_per_module: 80, parallel_per_series: 5, label: "5p80s x5".into() }
    }

    /// 2000 cells: 4 modules of 100s5p, ~420 V ceiling.
    pub fn pack_420v() -> Self {
        Self {
            modules: 4,
            series_per_module: 100,
            parallel_per_series: 5,
            label: "5p100s x4".into(),
        }
    }

    pub fn total_cells(&self) -> usize {
        self.modules * self.series_per_module * self.parallel_per_series
    }

    pub fn validate(&self) -> Result<(), TopologyError> {
        if self.modules == 0 || self.series_per_module == 0 || self.parallel_per_series == 0 {
            return Err(TopologyError::ZeroCount);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyError {
    ZeroCount,
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "all topology counts must be >= 1")
    }
}

impl std::error::Error for TopologyError {}

/// Aging configuration applied when constructing a pack.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct AgingConfig {
    pub cycles: u32,
    pub fade_per_cycle: f64,
    pub r_growth_per_cycle: f64,
}

impl Default for AgingConfig {
    fn default() -> Self {
        Self { cycles: 0, fade_per_cycle: 5e-4, r_growth_per_cycle: 2e-4 }
    }
}

/// Mutable simulation state of a pack.
#[derive(Debug, Clone, PartialEq)]
pub struct PackState {
    pub soc_per_module: Vec<f64>,
    pub rc_voltage_per_module: Vec<f64>,
    pub cycle_count: u32,
    pub effective_capacity_ah: f64,
    pub effective_r0: f64,
}

impl PackState {
    pub fn mean_soc(&self) -> f64 {
        self.soc_per_module.iter().sum::<f64>() / self.soc_per_module.len() as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cutoff {
    SocLow { module: usize },
    SocHigh { module: usize },
    VoltageLow { module: usize },
    VoltageHigh { module: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum StepError {
    NonPositiveDt(f64),
    CurrentExceedsRating { current_a: f64, limit_a: f64 },
}

impl fmt::Display for StepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepError::NonPositiveDt(dt) => write!(f, "dt must be positive, got {dt}"),
            StepError::CurrentExceedsRating { current_a, limit_a } => {
                write!(f, "current {current_a} A exceeds the {limit_a} A rating")
            }
        }
    }
}

impl std::error::Error for StepError {}

/// Per-module multiplicative parameter perturbations, drawn once at pack
/// construction.
#[derive(Debug, Clone, PartialEq)]
struct ModuleJitter {
    r0_mul: f64,
    r1_mul: f64,
    cap_mul: f64,
}

/// A constructed pack: topology, aged cell parameters, and frozen
/// per-module heterogeneity.
#[derive(Debug, Clone)]
pub struct Pack {
    pub topology: PackTopology,
    /// Un-aged cell parameters the protocol current rating derives from.
    pub nominal_cell: CellParams,
    /// Aged cell parameters the dynamics use.
    pub cell: CellParams,
    jitter: Vec<ModuleJitter>,
    /// Maximum C-rate accepted by `step`.
    pub max_c_rate: f64,
}

impl Pack {
    /// Builds a pack, applying aging then drawing per-module jitter from a
    /// seeded generator. `jitter_frac` of 0.01 gives +/-1% perturbations.
    pub fn new(
        topology: PackTopology,
        cell: CellParams,
        aging: AgingConfig,
        jitter_frac: f64,
        seed: u64,
    ) -> Result<Self, PackBuildError> {
        topology.validate().map_err(PackBuildError::Topology)?;
        cell.validate().map_err(PackBuildError::Cell)?;
        let aged = apply_aging(&cell, aging.cycles, aging.fade_per_cycle, aging.r_growth_per_cycle)
            .map_err(PackBuildError::Aging)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let jitter = (0..topology.modules)
            .map(|_| ModuleJitter {
                r0_mul: 1.0 + rng.random_range(-jitter_frac..=jitter_frac),
                r1_mul: 1.0 + rng.random_range(-jitter_frac..=jitter_frac),
                cap_mul: 1.0 + rng.random_range(-jitter_frac..=jitter_frac),
            })
            .collect();
        Ok(Self { topology, nominal_cell: cell, cell: aged, jitter, max_c_rate: 2.0 })
    }

    /// Initial state with every module rested at `soc0`.
    pub fn initial_state(&self, soc0: f64) -> PackState {
        let m = self.topology.modules;
        PackState {
            soc_per_module: vec![soc0; m],
            rc_voltage_per_module: vec![0.0; m],
            cycle_count: 0,
            effective_capacity_ah: self.cell.capacity_ah,
            effective_r0: self.cell.r0,
        }
    }

    /// Module current that corresponds to a C-rate against nominal capacity.
    pub fn current_for_c_rate(&self, c_rate: f64) -> f64 {
        c_rate * self.nominal_cell.capacity_ah * self.topology.parallel_per_series as f64
    }

    /// Module terminal voltages for the present state under `current_a`.
    pub fn module_voltages(&self, state: &PackState, current_a: f64) -> Vec<f64> {
        let i_cell = current_a / self.topology.parallel_per_series as f64;
        let series = self.topology.series_per_module as f64;
        (0..self.topology.modules)
            .map(|j| {
                let jit = &self.jitter[j];
                let ocv = self.cell.ocv_curve.value(state.soc_per_module[j]);
                series
                    * (ocv
                        - i_cell * self.cell.r0 * jit.r0_mul
                        - state.rc_voltage_per_module[j])
            })
            .collect()
    }

    /// Advances the state one step and reports the pre-step terminal
    /// voltages. A cutoff marks the first limit violation; the caller
    /// truncates the run there instead of clamping.
    pub fn step(
        &self,
        state: &PackState,
        current_a: f64,
        dt_s: f64,
    ) -> Result<StepOutcome, StepError> {
        if !(dt_s > 0.0) {
            return Err(StepError::NonPositiveDt(dt_s));
        }
        let limit = self.max_c_rate
            * self.nominal_cell.capacity_ah
            * self.topology.parallel_per_series as f64;
        if current_a.abs() > limit {
            return Err(StepError::CurrentExceedsRating { current_a, limit_a: limit });
        }

        let voltages = self.module_voltages(state, current_a);
        let series = self.topology.series_per_module as f64;
        let mut cutoff = None;
        for (j, &v) in voltages.iter().enumerate() {
            if v < self.cell.v_min * series {
                cutoff = Some(Cutoff::VoltageLow { module: j });
                break;
            }
            if v > self.cell.v_max * series {
                cutoff = Some(Cutoff::VoltageHigh { module: j });
                break;
            }
        }

        let i_cell = current_a / self.topology.parallel_per_series as f64;
        let mut next = state.clone();
        for j in 0..self.topology.modules {
            let jit = &self.jitter[j];
            let r1 = self.cell.r1 * jit.r1_mul;
            let tau_rc = r1 * self.cell.c1;
            let decay = (-dt_s / tau_rc).exp();
            next.rc_voltage_per_module[j] =
                state.rc_voltage_per_module[j] * decay + i_cell * r1 * (1.0 - decay);
            let cap = self.cell.capacity_ah * jit.cap_mul;
            next.soc_per_module[j] = state.soc_per_module[j] - i_cell * dt_s / (3600.0 * cap);
        }
        if cutoff.is_none() {
            for (j, &s) in next.soc_per_module.iter().enumerate() {
                if s < 0.0 {
                    cutoff = Some(Cutoff::SocLow { module: j });
                    break;
                }
                if s > 1.0 {
                    cutoff = Some(Cutoff::SocHigh { module: j });
                    break;
                }
            }
        }

        Ok(StepOutcome { state: next, voltages, cutoff })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub state: PackState,
    pub voltages: Vec<f64>,
    pub cutoff: Option<Cutoff>,
}

#[derive(Debug)]
pub enum PackBuildError {
    Topology(TopologyError),
    Cell(CellParamError),
    Aging(AgingError),
}

impl fmt::Display for PackBuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackBuildError::Topology(e) => write!(f, "topology: {e}"),
            PackBuildError::Cell(e) => write!(f, "cell: {e}"),
            PackBuildError::Aging(e) => write!(f, "aging: {e}"),
        }
    }
}

impl std::error::Error for PackBuildError {}

/// Charging protocol for a telemetry run.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Protocol {
    pub mode: ProtocolMode,
    pub c_rate: f64,
    pub initial_soc: f64,
    pub soc_lo: f64,
    pub soc_hi: f64,
    /// Rest after each phase, in seconds.
    pub rest_s: f64,
    /// Charge/discharge pairs for `Cycle` mode.
    pub cycles: u32,
    pub dt_s: f64,
    /// Optional hard stop, in seconds.
    #[serde(default)]
    pub max_duration_s: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProtocolMode {
    Charge,
    Discharge,
    Cycle,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProtocolError {
    BadSocWindow { soc_lo: f64, soc_hi: f64 },
    BadInitialSoc(f64),
    NonPositive(&'static str),
    Step(StepError),
}

impl fmt::Display for ProtocolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProtocolError::BadSocWindow { soc_lo, soc_hi } => {
                write!(f, "need 0 <= soc_lo < soc_hi <= 1, got [{soc_lo}, {soc_hi}]")
            }
            ProtocolError::BadInitialSoc(s) => write!(f, "initial_soc {s} outside [0, 1]"),
            ProtocolError::NonPositive(name) => write!(f, "{name} must be positive"),
            ProtocolError::Step(e) => write!(f, "step: {e}"),
        }
    }
}

impl std::error::Error for ProtocolError {}

/// Why a protocol run ended before meeting its SOC goals.
#[derive(Debug, Clone, PartialEq)]
pub struct Truncation {
    pub t_s: f64,
    pub cutoff: Cutoff,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolRun {
    pub stream: TelemetryStream,
    /// Present when the run hit a voltage/SOC limit before its goal.
    pub truncation: Option<Truncation>,
}

/// Executes a protocol and emits ground-truth telemetry at `1/dt_s`.
///
/// `v_meas` equals `v_true` here; attack injection happens downstream.
pub fn run_protocol(pack: &Pack, protocol: &Protocol) -> Result<ProtocolRun, ProtocolError> {
    if !(protocol.soc_lo >= 0.0 && protocol.soc_lo < protocol.soc_hi && protocol.soc_hi <= 1.0) {
        return Err(ProtocolError::BadSocWindow {
            soc_lo: protocol.soc_lo,
            soc_hi: protocol.soc_hi,
        });
    }
    if !(0.0..=1.0).contains(&protocol.initial_soc) {
        return Err(ProtocolError::BadInitialSoc(protocol.initial_soc));
    }
    if !(protocol.c_rate > 0.0) {
        return Err(ProtocolError::NonPositive("c_rate"));
    }
    if !(protocol.dt_s > 0.0) {
        return Err(ProtocolError::NonPositive("dt_s"));
    }

    let magnitude = pack.current_for_c_rate(protocol.c_rate);
    let rest_samples = (protocol.rest_s / protocol.dt_s).round() as usize;

    #[derive(Clone, Copy, PartialEq)]
    enum Phase {
        Charge,
        Discharge,
        Rest { remaining: usize, then_charge: bool },
        Done,
    }

    let mut phase = match protocol.mode {
        ProtocolMode::Charge => Phase::Charge,
        ProtocolMode::Discharge => Phase::Discharge,
        ProtocolMode::Cycle => Phase::Charge,
    };
    let mut cycles_left = match protocol.mode {
        ProtocolMode::Cycle => protocol.cycles.max(1),
        _ => 1,
    };

    let mut state = pack.initial_state(protocol.initial_soc);
    let mut stream = TelemetryStream::new(protocol.dt_s);
    let mut truncation = None;
    let mut k: usize = 0;

    loop {
        if let Some(limit) = protocol.max_duration_s {
            if k as f64 * protocol.dt_s >= limit {
                break;
            }
        }
        // Phase transitions on the current state.
        let soc = state.mean_soc();
        phase = match phase {
            Phase::Charge if soc >= protocol.soc_hi => {
                if rest_samples > 0 {
                    Phase::Rest { remaining: rest_samples, then_charge: false }
                } else if protocol.mode == ProtocolMode::Cycle {
                    Phase::Discharge
                } else {
                    Phase::Done
                }
            }
            Phase::Discharge if soc <= protocol.soc_lo => {
                cycles_left = cycles_left.saturating_sub(1);
                if protocol.mode != ProtocolMode::Cycle || cycles_left == 0 {
                    if rest_samples > 0 {
                        Phase::Rest { remaining: rest_samples, then_charge: false }
                    } else {
                        Phase::Done
                    }
                } else if rest_samples > 0 {
                    Phase::Rest { remaining: rest_samples, then_charge: true }
                } else {
                    Phase::Charge
                }
            }
            Phase::Rest { remaining: 0, then_charge } => {
                if then_charge {
                    Phase::Charge
                } else if protocol.mode == ProtocolMode::Cycle && cycles_left > 0 && soc >= protocol.soc_hi {
                    Phase::Discharge
                } else {
                    Phase::Done
                }
            }
            p => p,
        };
        // Mid-cycle rest after charge.
        if let Phase::Rest { remaining: 0, .. } = phase {
            phase = Phase::Done;
        }
        if phase == Phase::Done {
            break;
        }

        let current = match phase {
            Phase::Charge => -magnitude,
            Phase::Discharge => magnitude,
            _ => 0.0,
        };

        let outcome = pack.step(&state, current, protocol.dt_s).map_err(ProtocolError::Step)?;
        if let Some(cutoff) = outcome.cutoff {
            truncation = Some(Truncation { t_s: k as f64 * protocol.dt_s, cutoff });
            break;
        }

        stream.frames.push(TelemetryFrame {
            t_s: k as f64 * protocol.dt_s,
            current_a: current,
            v_meas: outcome.voltages.clone(),
            v_true: outcome.voltages,
            soc_true: state.mean_soc(),
        });
        state = outcome.state;
        if let Phase::Rest { remaining, then_charge } = phase {
            phase = Phase::Rest { remaining: remaining - 1, then_charge };
        }
        k += 1;
    }

    Ok(ProtocolRun { stream, truncation })
}

/// Charges a single cell at C/100 and records terminal voltage against
/// Coulomb-counted SOC, downsampled onto a uniform grid.
pub fn build_ocv_soc_map(cell: &CellParams, resolution: usize) -> Result<OcvSocMap, OcvMapError> {
    let resolution = resolution.max(50);
    let current = -cell.capacity_ah / 100.0; // charging
    let i_cell = current;
    let tau_rc = cell.r1 * cell.c1;
    let dt = 1.0;
    let decay = (-dt / tau_rc).exp();

    let mut soc = 0.0_f64;
    let mut v_rc = 0.0_f64;
    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(360_100);
    while soc < 1.0 {
        let v = cell.ocv_curve.value(soc) - i_cell * cell.r0 - v_rc;
        samples.push((soc, v));
        v_rc = v_rc * decay + i_cell * cell.r1 * (1.0 - decay);
        soc -= i_cell * dt / (3600.0 * cell.capacity_ah);
    }
    samples.push((1.0, cell.ocv_curve.value(1.0) - i_cell * cell.r0 - v_rc));

    let soc_grid: Vec<f64> =
        (0..resolution).map(|i| i as f64 / (resolution - 1) as f64).collect();
    let mut ocv_volts = Vec::with_capacity(resolution);
    let mut cursor = 0usize;
    for &s in &soc_grid {
        while cursor + 1 < samples.len() && samples[cursor + 1].0 < s {
            cursor += 1;
        }
        let v = if cursor + 1 >= samples.len() {
            samples[cursor].1
        } else {
            let (s0, v0) = samples[cursor];
            let (s1, v1) = samples[cursor + 1];
            if s1 > s0 {
                let t = ((s - s0) / (s1 - s0)).clamp(0.0, 1.0);
                v0 * (1.0 - t) + v1 * t
            } else {
                v0
            }
        };
        ocv_volts.push(v);
    }

    let map = OcvSocMap { soc_grid, ocv_volts, scale: 1 };
    map.validate()?;
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn small_pack(seed: u64) -> Pack {
        Pack::new(
            PackTopology::pack_250v(),
            CellParams::default_nmc_5ah(),
            AgingConfig { cycles: 0, ..Default::default() },
            0.01,
            seed,
        )
        .unwrap()
    }

    #[test]
    fn rest_relaxes_to_ocv() {
        let mut pack = small_pack(1);
        pack.jitter.iter_mut().for_each(|j| *j = ModuleJitter { r0_mul: 1.0, r1_mul: 1.0, cap_mul: 1.0 });
        let mut state = pack.initial_state(0.6);
        state.rc_voltage_per_module = vec![0.05; 3];
        // Rest long enough for the RC pair to bleed below 1e-9 V.
        for _ in 0..1200 {
            state = pack.step(&state, 0.0, 1.0).unwrap().state;
        }
        assert!(state.rc_voltage_per_module.iter().all(|v| v.abs() < 1e-9));
        let v = pack.module_voltages(&state, 0.0);
        let want = 60.0 * pack.cell.ocv_curve.value(0.6);
        for vj in v {
            assert_relative_eq!(vj, want, epsilon = 1e-9);
        }
    }

    #[test]
    fn ohmic_drop_matches_hand_evaluation() {
        // i_cell = 5 A with r0 = 0.02 ohm: ohmic term is exactly
        // series * 0.1 V; compare against an r0-free twin.
        let mut pack = small_pack(2);
        pack.jitter.iter_mut().for_each(|j| *j = ModuleJitter { r0_mul: 1.0, r1_mul: 1.0, cap_mul: 1.0 });
        let state = pack.initial_state(0.5);
        let current = 5.0 * pack.topology.parallel_per_series as f64;
        let v_loaded = pack.step(&state, current, 1.0).unwrap().voltages;
        let mut no_r0 = pack.clone();
        no_r0.cell.r0 = 1e-30;
        let v_free = no_r0.step(&state, current, 1.0).unwrap().voltages;
        for (a, b) in v_loaded.iter().zip(v_free.iter()) {
            assert_relative_eq!(b - a, 60.0 * 0.1, epsilon = 1e-9);
        }
    }

    #[test]
    fn pack_voltage_ceilings_match_ratings() {
        for (topo, rating) in [
            (PackTopology::pack_250v(), 250.0),
            (PackTopology::pack_335v(), 335.0),
            (PackTopology::pack_420v(), 420.0),
        ] {
            let ceiling = topo.series_per_module as f64 * 4.2;
            let rel = (ceiling - rating).abs() / rating;
            assert!(rel < 0.01, "{}: ceiling {ceiling} vs rating {rating}", topo.label);
            // Simulated full-charge rest voltage agrees with the ceiling.
            let pack = Pack::new(
                topo,
                CellParams::default_nmc_5ah(),
                AgingConfig { cycles: 0, ..Default::default() },
                0.0,
                3,
            )
            .unwrap();
            let state = pack.initial_state(1.0);
            let v = pack.module_voltages(&state, 0.0);
            assert_relative_eq!(v[0], ceiling, epsilon = 1e-9);
        }
    }

    #[test]
    fn aging_identity_and_linear_fade() {
        let cell = CellParams::default_nmc_5ah();
        let same = apply_aging(&cell, 0, 5e-4, 2e-4).unwrap();
        assert_eq!(same.capacity_ah, cell.capacity_ah);
        assert_eq!(same.r0, cell.r0);
        let aged = apply_aging(&cell, 100, 5e-4, 2e-4).unwrap();
        assert_relative_eq!(aged.capacity_ah, 0.95 * cell.capacity_ah, epsilon = 1e-12);
        assert_relative_eq!(aged.r0, 1.02 * cell.r0, epsilon = 1e-12);
    }

    #[test]
    fn aged_pack_reaches_target_soc_sooner() {
        let topo = PackTopology::pack_250v();
        let cell = CellParams::default_nmc_5ah();
        let fresh = Pack::new(topo.clone(), cell.clone(), AgingConfig { cycles: 0, ..Default::default() }, 0.0, 4).unwrap();
        let aged = Pack::new(topo, cell, AgingConfig { cycles: 100, ..Default::default() }, 0.0, 4).unwrap();
        let proto = Protocol {
            mode: ProtocolMode::Charge,
            c_rate: 1.0,
            initial_soc: 0.3,
            soc_lo: 0.0,
            soc_hi: 0.7,
            rest_s: 0.0,
            cycles: 1,
            dt_s: 1.0,
            max_duration_s: None,
        };
        let run_fresh = run_protocol(&fresh, &proto).unwrap();
        let run_aged = run_protocol(&aged, &proto).unwrap();
        assert!(
            run_aged.stream.len() < run_fresh.stream.len(),
            "aged {} vs fresh {}",
            run_aged.stream.len(),
            run_fresh.stream.len()
        );
    }

    #[test]
    fn one_c_charge_moves_soc_by_coulomb_integral() {
        let pack = small_pack(9);
        let proto = Protocol {
            mode: ProtocolMode::Charge,
            c_rate: 1.0,
            initial_soc: 0.3,
            soc_lo: 0.0,
            soc_hi: 0.7,
            rest_s: 0.0,
            cycles: 1,
            dt_s: 1.0,
            max_duration_s: None,
        };
        let run = run_protocol(&pack, &proto).unwrap();
        assert!(run.truncation.is_none());
        // 0.4 SOC at 1C is 1440 s of charge.
        assert!((run.stream.len() as i64 - 1440).abs() <= 2, "len {}", run.stream.len());
        let last = run.stream.frames.last().unwrap();
        assert_relative_eq!(last.soc_true, 0.7, epsilon = 1e-3);
        // Timestamps advance by exactly dt.
        for w in run.stream.frames.windows(2) {
            assert_eq!(w[1].t_s - w[0].t_s, 1.0);
        }
    }

    #[test]
    fn cycle_protocol_alternates_with_rest() {
        let pack = small_pack(10);
        let proto = Protocol {
            mode: ProtocolMode::Cycle,
            c_rate: 1.0,
            initial_soc: 0.3,
            soc_lo: 0.3,
            soc_hi: 0.4,
            rest_s: 30.0,
            cycles: 2,
            dt_s: 1.0,
            max_duration_s: None,
        };
        let run = run_protocol(&pack, &proto).unwrap();
        assert!(run.truncation.is_none());
        let rests = run.stream.frames.iter().filter(|f| f.current_a == 0.0).count();
        // Two charge phases and two discharge phases, each followed by rest.
        assert_eq!(rests, 4 * 30);
        let charges = run.stream.frames.iter().filter(|f| f.current_a < 0.0).count();
        let discharges = run.stream.frames.iter().filter(|f| f.current_a > 0.0).count();
        assert!(charges > 300 && discharges > 300);
    }

    #[test]
    fn charge_discharge_round_trip_restores_soc() {
        let pack = small_pack(11);
        let mut state = pack.initial_state(0.5);
        let start = state.soc_per_module.clone();
        let current = pack.current_for_c_rate(1.0);
        for _ in 0..600 {
            state = pack.step(&state, -current, 1.0).unwrap().state;
        }
        for _ in 0..600 {
            state = pack.step(&state, current, 1.0).unwrap().state;
        }
        for (a, b) in start.iter().zip(state.soc_per_module.iter()) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn rest_voltage_monotone_in_soc() {
        let pack = small_pack(12);
        let mut prev = f64::MIN;
        for i in 0..=20 {
            let state = pack.initial_state(i as f64 / 20.0);
            let v = pack.module_voltages(&state, 0.0)[0];
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn telemetry_is_deterministic_per_seed() {
        let proto = Protocol {
            mode: ProtocolMode::Discharge,
            c_rate: 1.0,
            initial_soc: 0.8,
            soc_lo: 0.6,
            soc_hi: 1.0,
            rest_s: 0.0,
            cycles: 1,
            dt_s: 1.0,
            max_duration_s: Some(120.0),
        };
        let a = run_protocol(&small_pack(77), &proto).unwrap();
        let b = run_protocol(&small_pack(77), &proto).unwrap();
        assert_eq!(a.stream, b.stream);
        let c = run_protocol(&small_pack(78), &proto).unwrap();
        assert_ne!(a.stream, c.stream);
    }

    #[test]
    fn infeasible_charge_truncates_with_report() {
        let pack = small_pack(13);
        // 1C all the way to SOC 1.0 hits the voltage ceiling first.
        let proto = Protocol {
            mode: ProtocolMode::Charge,
            c_rate: 1.0,
            initial_soc: 0.9,
            soc_lo: 0.0,
            soc_hi: 1.0,
            rest_s: 0.0,
            cycles: 1,
            dt_s: 1.0,
            max_duration_s: None,
        };
        let run = run_protocol(&pack, &proto).unwrap();
        let trunc = run.truncation.expect("expected a truncation");
        assert!(matches!(trunc.cutoff, Cutoff::VoltageHigh { .. }));
        assert!(!run.stream.is_empty());
    }

    #[test]
    fn ocv_map_tracks_true_curve_with_ohmic_bias() {
        // With a vanishing polarization branch the C/100 bias is exactly
        // i * r0 = 1 mV.
        let mut cell = CellParams::default_nmc_5ah();
        cell.r1 = 1e-12;
        cell.c1 = 1.0;
        let map = build_ocv_soc_map(&cell, 201).unwrap();
        let mut max_dev = 0.0_f64;
        for (s, v) in map.soc_grid.iter().zip(map.ocv_volts.iter()) {
            max_dev = max_dev.max((v - cell.ocv_curve.value(*s)).abs());
        }
        assert!(max_dev <= 1e-3 + 1e-9, "max deviation {max_dev}");
        // Endpoints near the cut-offs.
        assert!((map.ocv_volts[0] - 2.5).abs() < 2e-3);
        assert!((map.ocv_volts.last().unwrap() - 4.2).abs() < 2e-3);
    }

    #[test]
    fn map_scaling_matches_series_count() {
        let cell = CellParams::default_nmc_5ah();
        let map = build_ocv_soc_map(&cell, 101).unwrap();
        let scaled = map.scaled(60);
        for (a, b) in map.ocv_volts.iter().zip(scaled.ocv_volts.iter()) {
            assert_eq!(*b, *a * 60.0);
        }
    }
}
