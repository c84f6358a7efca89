//! Open-circuit-voltage curves and lookup maps.

use std::fmt;

mod table {
    include!("ocv_table.rs");
}

/// Monotone cubic (Fritsch–Carlson) interpolant of a strictly increasing
/// SOC -> OCV table. Queries outside `[0, 1]` clamp to the endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct OcvCurve {
    soc: Vec<f64>,
    ocv: Vec<f64>,
    slope: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum OcvError {
    TooFewPoints(usize),
    NotStrictlyIncreasing { index: usize },
    NonFinite { index: usize },
}

impl fmt::Display for OcvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OcvError::TooFewPoints(n) => write!(f, "OCV table needs >= 2 points, got {n}"),
            OcvError::NotStrictlyIncreasing { index } => {
                write!(f, "OCV table not strictly increasing at index {index}")
            }
            OcvError::NonFinite { index } => write!(f, "non-finite OCV entry at index {index}"),
        }
    }
}

impl std::error::Error for OcvError {}

impl OcvCurve {
    /// Builds the interpolant, validating strict monotonicity in both
    /// coordinates.
    pub fn from_table(soc: Vec<f64>, ocv: Vec<f64>) -> Result<Self, OcvError> {
        if soc.len() < 2 || soc.len() != ocv.len() {
            return Err(OcvError::TooFewPoints(soc.len().min(ocv.len())));
        }
        for i in 0..soc.len() {
            if !soc[i].is_finite() || !ocv[i].is_finite() {
                return Err(OcvError::NonFinite { index: i });
            }
            if i > 0 && (soc[i] <= soc[i - 1] || ocv[i] <= ocv[i - 1]) {
                return Err(OcvError::NotStrictlyIncreasing { index: i });
            }
        }
        let slope = fritsch_carlson_slopes(&soc, &ocv);
        Ok(Self { soc, ocv, slope })
    }

    /// The bundled NMC-shaped 5 Ah cell curve (2.5 V to 4.2 V).
    pub fn default_nmc() -> Self {
        let soc: Vec<f64> = table::DEFAULT_OCV_TABLE.iter().map(|p| p.0).collect();
        let ocv: Vec<f64> = table::DEFAULT_OCV_TABLE.iter().map(|p| p.1).collect();
        Self::from_table(soc, ocv).expect("bundled table is valid")
    }

    pub fn v_min(&self) -> f64 {
        self.ocv[0]
    }

    pub fn v_max(&self) -> f64 {
        *self.ocv.last().unwrap()
    }

    /// Interpolated OCV at `soc`, clamped to the table range.
    pub fn value(&self, soc: f64) -> f64 {
        let s = &self.soc;
        if soc <= s[0] {
            return self.ocv[0];
        }
        if soc >= *s.last().unwrap() {
            return *self.ocv.last().unwrap();
        }
        let i = match s.binary_search_by(|x| x.partial_cmp(&soc).unwrap()) {
            Ok(i) => return self.ocv[i],
            Err(i) => i - 1,
        };
        let h = s[i + 1] - s[i];
        let t = (soc - s[i]) / h;
        let (y0, y1) = (self.ocv[i], self.ocv[i + 1]);
        let (m0, m1) = (self.slope[i] * h, self.slope[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + m0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + m1 * (t3 - t2)
    }

    /// Samples the curve onto a uniform grid as a lookup map.
    pub fn to_map(&self, resolution: usize, scale: u32) -> OcvSocMap {
        let n = resolution.max(2);
        let soc_grid: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let ocv_volts: Vec<f64> =
            soc_grid.iter().map(|&s| self.value(s) * scale as f64).collect();
        OcvSocMap { soc_grid, ocv_volts, scale }
    }
}

/// Fritsch–Carlson slope limiting keeps the Hermite interpolant monotone.
fn fritsch_carlson_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let d: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / (x[i + 1] - x[i])).collect();
    let mut m = vec![0.0; n];
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for i in 1..n - 1 {
        if d[i - 1] * d[i] <= 0.0 {
            m[i] = 0.0;
        } else {
            m[i] = (d[i - 1] + d[i]) / 2.0;
        }
    }
    for i in 0..n - 1 {
        if d[i] == 0.0 {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        let alpha = m[i] / d[i];
        let beta = m[i + 1] / d[i];
        let s = alpha * alpha + beta * beta;
        if s > 9.0 {
            let t = 3.0 / s.sqrt();
            m[i] = t * alpha * d[i];
            m[i + 1] = t * beta * d[i];
        }
    }
    m
}

/// A sampled SOC -> OCV lookup table, optionally scaled to pack level by a
/// series-cell multiplier.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct OcvSocMap {
    pub soc_grid: Vec<f64>,
    pub ocv_volts: Vec<f64>,
    /// Series-cell multiplier already applied to `ocv_volts` (1 = cell level).
    pub scale: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub enum OcvMapError {
    TooFewPoints { got: usize, need: usize },
    NotMonotone { index: usize, soc: f64 },
}

impl fmt::Display for OcvMapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OcvMapError::TooFewPoints { got, need } => {
                write!(f, "OCV map needs >= {need} grid points, got {got}")
            }
            OcvMapError::NotMonotone { index, soc } => write!(
                f,
                "measured OCV curve is not increasing at grid index {index} (soc {soc:.4}); \
                 simulator misconfiguration"
            ),
        }
    }
}

impl std::error::Error for OcvMapError {}

impl OcvSocMap {
    /// Validates grid shape and strict monotonicity.
    pub fn validate(&self) -> Result<(), OcvMapError> {
        if self.soc_grid.len() < 50 || self.soc_grid.len() != self.ocv_volts.len() {
            return Err(OcvMapError::TooFewPoints {
                got: self.soc_grid.len().min(self.ocv_volts.len()),
                need: 50,
            });
        }
        for i in 1..self.soc_grid.len() {
            if self.ocv_volts[i] <= self.ocv_volts[i - 1] {
                return Err(OcvMapError::NotMonotone { index: i, soc: self.soc_grid[i] });
            }
        }
        Ok(())
    }

    /// Returns a copy scaled by a series-cell multiplier.
    pub fn scaled(&self, scale: u32) -> OcvSocMap {
        let factor = scale as f64 / self.scale as f64;
        OcvSocMap {
            soc_grid: self.soc_grid.clone(),
            ocv_volts: self.ocv_volts.iter().map(|v| v * factor).collect(),
            scale,
        }
    }

    /// Linear interpolation on the grid, clamped at the ends.
    pub fn value(&self, soc: f64) -> f64 {
        let s = &self.soc_grid;
        if soc <= s[0] {
            return self.ocv_volts[0];
        }
        if soc >= *s.last().unwrap() {
            return *self.ocv_volts.last().unwrap();
        }
        let i = match s.binary_search_by(|x| x.partial_cmp(&soc).unwrap()) {
            Ok(i) => return self.ocv_volts[i],
            Err(i) => i - 1,
        };
        let t = (soc - s[i]) / (s[i + 1] - s[i]);
        self.ocv_volts[i] * (1.0 - t) + self.ocv_volts[i + 1] * t
    }

    /// Writes the map as `soc,ocv_v` CSV.
    pub fn write_csv(&self, path: &std::path::Path) -> std::io::Result<()> {
        use std::io::Write;
        let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
        writeln!(w, "soc,ocv_v")?;
        for (s, v) in self.soc_grid.iter().zip(self.ocv_volts.iter()) {
            writeln!(w, "{s},{v}")?;
        }
        Ok(())
    }

    /// Reads a `soc,ocv_v` CSV written by [`OcvSocMap::write_csv`].
    pub fn read_csv(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let mut soc_grid = Vec::new();
        let mut ocv_volts = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if i == 0 {
                if line.trim() != "soc,ocv_v" {
                    return Err(format!("bad header `{line}`"));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split(',');
            let s: f64 = parts
                .next()
                .ok_or_else(|| format!("row {i}: missing soc"))?
                .parse()
                .map_err(|e| format!("row {i}: {e}"))?;
            let v: f64 = parts
                .next()
                .ok_or_else(|| format!("row {i}: missing ocv_v"))?
                .parse()
                .map_err(|e| format!("row {i}: {e}"))?;
            soc_grid.push(s);
            ocv_volts.push(v);
        }
        Ok(OcvSocMap { soc_grid, ocv_volts, scale: 1 })
    }
}
