//! Measurement data model: telemetry frames and streams, sliding-window
//! configuration, and the delay embedding that prepares snapshot matrices
//! for the Koopman fit.

mod embed;
mod io;

pub use embed::{delay_embed, DataStacks, EmbeddedBatch};
pub use io::{read_stream, write_stream, StreamIoError};

use std::fmt;

/// One timestamped sample of module voltages plus pack current.
///
/// `v_true` and `soc_true` are ground truth carried for the harness only;
/// the estimator never reads them.
#[derive(Debug, Clone, PartialEq)]
pub struct TelemetryFrame {
    /// Sample time in seconds.
    pub t_s: f64,
    /// Charging current in amperes; positive means discharging.
    pub current_a: f64,
    /// Measured module voltages (possibly corrupted by an attack).
    pub v_meas: Vec<f64>,
    /// Ground-truth module voltages.
    pub v_true: Vec<f64>,
    /// Ground-truth state of charge.
    pub soc_true: f64,
}

/// A gap-free sequence of frames sampled at a fixed rate.
#[derive(Debug, Clone, PartialEq)]
pub struct TelemetryStream {
    /// Sample period in seconds.
    pub dt_s: f64,
    /// Frames in time order.
    pub frames: Vec<TelemetryFrame>,
}

impl TelemetryStream {
    pub fn new(dt_s: f64) -> Self {
        Self { dt_s, frames: Vec::new() }
    }

    /// Number of modules, zero for an empty stream.
    pub fn module_count(&self) -> usize {
        self.frames.first().map_or(0, |f| f.v_meas.len())
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    /// Checks the stream invariants: constant module count, strictly
    /// increasing timestamps spaced by `dt_s`, finite values.
    pub fn validate(&self) -> Result<(), StreamError> {
        let m = self.module_count();
        for (i, f) in self.frames.iter().enumerate() {
            if f.v_meas.len() != m || f.v_true.len() != m {
                return Err(StreamError::ModuleCountChanged { row: i });
            }
            let finite = f.t_s.is_finite()
                && f.current_a.is_finite()
                && f.soc_true.is_finite()
                && f.v_meas.iter().all(|v| v.is_finite())
                && f.v_true.iter().all(|v| v.is_finite());
            if !finite {
                return Err(StreamError::NonFinite { row: i });
            }
            if i > 0 {
                let expect = self.frames[i - 1].t_s + self.dt_s;
                if (f.t_s - expect).abs() > 1e-6 * self.dt_s.max(1.0) {
                    return Err(StreamError::NonUniformTimestamps { row: i });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StreamError {
    ModuleCountChanged { row: usize },
    NonFinite { row: usize },
    NonUniformTimestamps { row: usize },
}

impl fmt::Display for StreamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StreamError::ModuleCountChanged { row } => {
                write!(f, "module count changed at row {row}")
            }
            StreamError::NonFinite { row } => write!(f, "non-finite value at row {row}"),
            StreamError::NonUniformTimestamps { row } => {
                write!(f, "non-uniform timestamp at row {row}")
            }
        }
    }
}

impl std::error::Error for StreamError {}

/// Sliding-window sizes for the online Koopman fit.
///
/// A window of `s_total` samples splits into a learning span of `s_learn`
/// followed by a prediction span of `s_total - s_learn`; the window then
/// advances by the prediction span so consecutive prediction spans tile the
/// timeline exactly.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct WindowConfig {
    /// Total window length S in samples.
    pub s_total: usize,
    /// Learning length S-tilde in samples.
    pub s_learn: usize,
    /// Embedded delay in samples.
    pub tau: usize,
    /// Sample period in seconds.
    pub dt_s: f64,
}

impl WindowConfig {
    /// Validates `tau + 2 < s_learn < s_total` and a positive sample period.
    pub fn validate(&self) -> Result<(), WindowConfigError> {
        if !(self.tau + 2 < self.s_learn && self.s_learn < self.s_total) {
            return Err(WindowConfigError::BadLengths {
                s_total: self.s_total,
                s_learn: self.s_learn,
                tau: self.tau,
            });
        }
        if !(self.dt_s > 0.0) {
            return Err(WindowConfigError::BadSamplePeriod(self.dt_s));
        }
        Ok(())
    }

    /// Prediction-horizon length per cycle.
    pub fn horizon(&self) -> usize {
        self.s_total - self.s_learn
    }

    /// Embedded state dimension for `m` modules: m*(tau+1) + tau.
    pub fn embedded_dim(&self, m: usize) -> usize {
        m * (self.tau + 1) + self.tau
    }

    /// Snapshot-pair count available from one learning window.
    pub fn snapshot_count(&self) -> usize {
        self.s_learn - self.tau - 1
    }
}

impl Default for WindowConfig {
    fn default() -> Self {
        Self { s_total: 120, s_learn: 90, tau: 2, dt_s: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WindowConfigError {
    BadLengths { s_total: usize, s_learn: usize, tau: usize },
    BadSamplePeriod(f64),
}

impl fmt::Display for WindowConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowConfigError::BadLengths { s_total, s_learn, tau } => write!(
                f,
                "window lengths must satisfy tau + 2 < s_learn < s_total \
                 (got tau={tau}, s_learn={s_learn}, s_total={s_total})"
            ),
            WindowConfigError::BadSamplePeriod(dt) => {
                write!(f, "sample period must be positive (got {dt})")
            }
        }
    }
}

impl std::error::Error for WindowConfigError {}

/// Advances the window cursor by one prediction cycle.
pub fn advance_window(cursor: usize, cfg: &WindowConfig) -> usize {
    cursor + (cfg.s_total - cfg.s_learn)
}
