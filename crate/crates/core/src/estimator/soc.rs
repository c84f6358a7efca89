//! Coulomb-counting SOC tracker.

/// Integrates current against capacity at a fixed sample period.
///
/// Positive (discharging) current decreases SOC. The estimate clamps to
/// `[0, 1]`; clamping events are counted rather than silently absorbed.
#[derive(Debug, Clone, PartialEq)]
pub struct SocTracker {
    pub soc: f64,
    /// Capacity in ampere-hours at the current level the tracker sees.
    pub capacity_ah: f64,
    pub dt_s: f64,
    pub clamp_events: usize,
}

impl SocTracker {
    pub fn new(initial_soc: f64, capacity_ah: f64, dt_s: f64) -> Self {
        Self { soc: initial_soc, capacity_ah, dt_s, clamp_events: 0 }
    }

    /// Advances one sample period under `current_a`.
    pub fn update(&mut self, current_a: f64) {
        self.soc -= self.dt_s * current_a / (3600.0 * self.capacity_ah);
        if self.soc < 0.0 {
            self.soc = 0.0;
            self.clamp_events += 1;
        } else if self.soc > 1.0 {
            self.soc = 1.0;
            self.clamp_events += 1;
        }
    }
}
