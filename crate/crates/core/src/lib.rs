//! Secure module-voltage estimation for multi-module battery packs under
//! sensor attacks.
//!
//! The crate is organized around a streaming pipeline:
//!
//! * [`pack`] — a desk-scale equivalent-circuit pack simulator that produces
//!   module-voltage telemetry under charge/discharge protocols, with
//!   configurable aging and an OCV–SOC map generator.
//! * [`telemetry`] — measurement frames, sliding-window bookkeeping, and the
//!   delay embedding that turns raw streams into snapshot matrices.
//! * [`koopman`] — DMD-with-control identification of a linear surrogate
//!   model from embedded snapshots, plus multi-step voltage rollout.
//! * [`attack`] — sensor-attack injectors (DoS hold, FDI bias, data swap)
//!   acting on the measured voltage channel.
//! * [`detector`] — residual-based attack trigger with a Koopman-mode
//!   deviation residual for sensor-attack isolation.
//! * [`estimator`] — the self-learning secure estimator: Koopman voltage
//!   predictor plus a parallel error predictor, with Stage I and Stage II
//!   (heuristic or GPR) corrections and feedback wiring.
//! * [`gpr`] — exact-inference Gaussian process regression with marginal
//!   likelihood hyperparameter optimization and the region-partitioned
//!   model bank used by the GPR Stage II correction.
//! * [`harness`] — scenario configuration, end-to-end runs, detector
//!   calibration, GPR training pipeline, Monte Carlo sweeps, and reports.

pub mod attack;
pub mod detector;
pub mod estimator;
pub mod gpr;
pub mod harness;
pub mod koopman;
pub mod pack;
pub mod telemetry;
