//! Delay embedding of sliding-window data stacks into snapshot matrices.

use nalgebra::{DMatrix, RowDVector};
use std::fmt;

/// One learning window of voltage-like values paired with the input current.
///
/// Columns are time-ordered. The voltage stack may hold any of the feedback
/// quantities (measurements, self-fed estimates, or error values); the shape
/// contract is the same for all of them.
#[derive(Debug, Clone, PartialEq)]
pub struct DataStacks {
    /// m x S-tilde stack of per-module values.
    pub zeta: DMatrix<f64>,
    /// 1 x S-tilde stack of input current.
    pub zeta_u: RowDVector<f64>,
}

impl DataStacks {
    /// Builds stacks from per-sample column vectors and currents.
    ///
    /// Panics if the lengths differ or `values` is empty; callers assemble
    /// these from windows that are validated upstream.
    pub fn from_columns(values: &[Vec<f64>], currents: &[f64]) -> Self {
        assert_eq!(values.len(), currents.len(), "stack column count mismatch");
        assert!(!values.is_empty(), "empty stack");
        let m = values[0].len();
        let cols = values.len();
        let zeta = DMatrix::from_fn(m, cols, |i, j| values[j][i]);
        let zeta_u = RowDVector::from_row_slice(currents);
        Self { zeta, zeta_u }
    }

    pub fn module_count(&self) -> usize {
        self.zeta.nrows()
    }

    pub fn sample_count(&self) -> usize {
        self.zeta.ncols()
    }
}

/// Snapshot matrices assembled from a delay-embedded learning window.
///
/// With `m` modules and delay `tau`, the embedded state dimension is
/// `n = m*(tau+1) + tau` and the snapshot-pair count is
/// `n_c = s_learn - tau - 1`. Column `j` of `xi_plus` equals column `j+1`
/// of `xi` where both exist, and the first `m` rows of `xi` equal `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedBatch {
    /// n x N_c embedded snapshots.
    pub xi: DMatrix<f64>,
    /// n x N_c one-step-shifted snapshots.
    pub xi_plus: DMatrix<f64>,
    /// 1 x N_c exogenous input row.
    pub u_row: RowDVector<f64>,
    /// m x N_c output targets.
    pub y: DMatrix<f64>,
    /// Embedded delay used to build the batch.
    pub tau: usize,
    /// Module count.
    pub m: usize,
}

impl EmbeddedBatch {
    pub fn state_dim(&self) -> usize {
        self.xi.nrows()
    }

    pub fn snapshot_count(&self) -> usize {
        self.xi.ncols()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedError {
    /// The learning window must hold at least `tau + 3` samples.
    WindowTooShort { samples: usize, tau: usize },
}

impl fmt::Display for EmbedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedError::WindowTooShort { samples, tau } => write!(
                f,
                "window of {samples} samples is too short for delay {tau} \
                 (need at least tau + 3 = {})",
                tau + 3
            ),
        }
    }
}

impl std::error::Error for EmbedError {}

/// Assembles the delay-embedded vector at stack offset `p`:
/// `[V(p); I(p); V(p+1); I(p+1); ...; I(p+tau-1); V(p+tau)]`.
///
/// Interleaved voltage/current pairs with a final voltage-only block, so the
/// newest current enters through the exogenous input instead.
pub(crate) fn embedded_column(stacks: &DataStacks, tau: usize, p: usize) -> Vec<f64> {
    let m = stacks.module_count();
    let mut d = Vec::with_capacity(m * (tau + 1) + tau);
    for k in 0..=tau {
        for i in 0..m {
            d.push(stacks.zeta[(i, p + k)]);
        }
        if k < tau {
            d.push(stacks.zeta_u[p + k]);
        }
    }
    d
}

/// Rearranges a learning window into delay-embedded snapshot matrices.
pub fn delay_embed(stacks: &DataStacks, tau: usize) -> Result<EmbeddedBatch, EmbedError> {
    let s_learn = stacks.sample_count();
    if s_learn < tau + 3 {
        return Err(EmbedError::WindowTooShort { samples: s_learn, tau });
    }
    let m = stacks.module_count();
    let n = m * (tau + 1) + tau;
    let n_c = s_learn - tau - 1;

    let mut xi = DMatrix::zeros(n, n_c);
    let mut xi_plus = DMatrix::zeros(n, n_c);
    let mut u_row = RowDVector::zeros(n_c);
    let mut y = DMatrix::zeros(m, n_c);

    for j in 0..n_c {
        let d = embedded_column(stacks, tau, j);
        let d_next = embedded_column(stacks, tau, j + 1);
        for r in 0..n {
            xi[(r, j)] = d[r];
            xi_plus[(r, j)] = d_next[r];
        }
        u_row[j] = stacks.zeta_u[j + tau];
        for i in 0..m {
            y[(i, j)] = stacks.zeta[(i, j)];
        }
    }

    Ok(EmbeddedBatch { xi, xi_plus, u_row, y, tau, m })
}
