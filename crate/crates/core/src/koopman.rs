//! DMD-with-control identification of a finite linear surrogate model from
//! delay-embedded snapshots, and multi-step voltage rollout.
//!
//! The fit solves two least-squares problems with truncated-SVD
//! pseudo-inverses: `[A B] = xi_plus * pinv([xi; u_row])` for the state
//! transition and `C = y * pinv(xi)` for the output map. Singular values
//! below `rank_tol * sigma_max` are discarded, so near-collinear delay
//! coordinates (constant-current windows, resting packs) resolve to the
//! minimum-norm solution instead of blowing up.

use crate::telemetry::EmbeddedBatch;
use nalgebra::{Complex, DMatrix, DVector};
use std::fmt;

/// Default relative singular-value cutoff: full rank on clean desk data,
/// truncation only for numerically degenerate directions.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// A fitted linear surrogate model `z+ = A z + B u`, `v = C z`.
#[derive(Debug, Clone, PartialEq)]
pub struct KoopmanModel {
    /// n x n state transition.
    pub a: DMatrix<f64>,
    /// n x 1 input map.
    pub b: DVector<f64>,
    /// m x n output map; its columns are the finite Koopman-mode estimates.
    pub c: DMatrix<f64>,
    /// Embedded delay the batch was built with.
    pub tau: usize,
    /// Module count.
    pub m: usize,
    /// Relative Frobenius residual of the state fit.
    pub state_fro: f64,
    /// Relative Frobenius residual of the output fit.
    pub output_fro: f64,
    /// Rank retained by the truncated pseudo-inverse of the state problem.
    pub svd_rank_used: usize,
}

impl KoopmanModel {
    pub fn state_dim(&self) -> usize {
        self.a.nrows()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FitError {
    NonFiniteInput,
    /// Every singular value fell below the cutoff.
    RankDeficient,
    /// Fewer snapshot pairs than the overdetermined fit requires.
    Underdetermined { snapshots: usize, needed: usize },
}

impl fmt::Display for FitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitError::NonFiniteInput => write!(f, "non-finite value in snapshot data"),
            FitError::RankDeficient => {
                write!(f, "snapshot matrix is rank deficient to degeneracy")
            }
            FitError::Underdetermined { snapshots, needed } => write!(
                f,
                "{snapshots} snapshot pairs underdetermine the fit (need {needed})"
            ),
        }
    }
}

impl std::error::Error for FitError {}

/// Truncated-SVD pseudo-inverse. Returns the pseudo-inverse and the rank
/// retained after discarding singular values below `rank_tol * sigma_max`.
fn pinv_truncated(mat: &DMatrix<f64>, rank_tol: f64) -> Result<(DMatrix<f64>, usize), FitError> {
    let svd = mat.clone().svd(true, true);
    let u = svd.u.as_ref().expect("svd requested u");
    let v_t = svd.v_t.as_ref().expect("svd requested v_t");
    let sigma = &svd.singular_values;
    let sigma_max = sigma.iter().cloned().fold(0.0_f64, f64::max);
    if !(sigma_max > 0.0) || !sigma_max.is_finite() {
        return Err(FitError::RankDeficient);
    }
    let cutoff = rank_tol * sigma_max;
    let rank = sigma.iter().filter(|&&s| s > cutoff).count();
    if rank == 0 {
        return Err(FitError::RankDeficient);
    }
    // pinv = V * S^-1 * U^T restricted to the retained rank.
    let vt_r = v_t.rows(0, rank);
    let u_r = u.columns(0, rank);
    let mut scaled = vt_r.transpose();
    for k in 0..rank {
        let inv = 1.0 / sigma[k];
        scaled.column_mut(k).scale_mut(inv);
    }
    Ok((scaled * u_r.transpose(), rank))
}

/// Fits the linear surrogate model from one embedded learning window.
pub fn fit(batch: &EmbeddedBatch, rank_tol: f64) -> Result<KoopmanModel, FitError> {
    let n = batch.state_dim();
    let n_c = batch.snapshot_count();
    if n_c < n + 1 {
        return Err(FitError::Underdetermined { snapshots: n_c, needed: n + 1 });
    }
    let finite = batch.xi.iter().all(|v| v.is_finite())
        && batch.xi_plus.iter().all(|v| v.is_finite())
        && batch.u_row.iter().all(|v| v.is_finite())
        && batch.y.iter().all(|v| v.is_finite());
    if !finite {
        return Err(FitError::NonFiniteInput);
    }

    // Stacked regressor [xi; u_row], (n+1) x N_c.
    let mut regressor = DMatrix::zeros(n + 1, n_c);
    regressor.rows_mut(0, n).copy_from(&batch.xi);
    regressor.row_mut(n).copy_from(&batch.u_row);

    let (reg_pinv, rank) = pinv_truncated(&regressor, rank_tol)?;
    let lambda = &batch.xi_plus * reg_pinv;
    let a = lambda.columns(0, n).into_owned();
    let b = lambda.column(n).into_owned();

    let (xi_pinv, _) = pinv_truncated(&batch.xi, rank_tol)?;
    let c = &batch.y * xi_pinv;

    let state_resid = (&batch.xi_plus - &lambda * &regressor).norm();
    let state_scale = batch.xi_plus.norm().max(f64::MIN_POSITIVE);
    let output_resid = (&batch.y - &c * &batch.xi).norm();
    let output_scale = batch.y.norm().max(f64::MIN_POSITIVE);

    Ok(KoopmanModel {
        a,
        b,
        c,
        tau: batch.tau,
        m: batch.m,
        state_fro: state_resid / state_scale,
        output_fro: output_resid / output_scale,
        svd_rank_used: rank,
    })
}

/// Streaming rollout state for a fitted model.
#[derive(Debug, Clone)]
pub struct Rollout {
    z: DVector<f64>,
}

impl Rollout {
    /// Seeds the rollout from an embedded state column.
    pub fn new(z0: DVector<f64>) -> Self {
        Self { z: z0 }
    }

    /// Advances one step with input `u` and returns the output vector.
    pub fn step(&mut self, model: &KoopmanModel, u: f64) -> DVector<f64> {
        self.z = &model.a * &self.z + &model.b * u;
        &model.c * &self.z
    }

    pub fn state(&self) -> &DVector<f64> {
        &self.z
    }

    pub fn is_finite(&self) -> bool {
        self.z.iter().all(|v| v.is_finite())
    }
}

/// Multi-step prediction over a current sequence.
///
/// Seeds from `z0` (the last embedded column of the learning window) and
/// iterates `z <- A z + B u`, emitting `C z` per step as the columns of an
/// m x H matrix. `finite` is false when the propagation left the finite
/// range; the harness treats that as an estimator fault.
pub struct HorizonPrediction {
    pub voltages: DMatrix<f64>,
    pub finite: bool,
}

pub fn predict_horizon(
    model: &KoopmanModel,
    z0: &DVector<f64>,
    currents: &[f64],
) -> HorizonPrediction {
    let h = currents.len();
    let mut out = DMatrix::zeros(model.m, h);
    let mut roll = Rollout::new(z0.clone());
    let mut finite = true;
    for (j, &u) in currents.iter().enumerate() {
        let v = roll.step(model, u);
        finite &= v.iter().all(|x| x.is_finite());
        out.set_column(j, &v);
    }
    HorizonPrediction { voltages: out, finite }
}

/// Eigenvalues of the state transition, sorted by magnitude descending.
pub fn spectrum(model: &KoopmanModel) -> Vec<Complex<f64>> {
    let mut eigs: Vec<Complex<f64>> = model.a.complex_eigenvalues().iter().cloned().collect();
    eigs.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap_or(std::cmp::Ordering::Equal));
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::telemetry::{delay_embed, DataStacks};
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Simulates `z+ = A0 z + B0 u`, `y = C0 z` and packs the trajectory
    /// into an EmbeddedBatch whose state IS the simulated state.
    pub(crate) fn lti_batch(
        n: usize,
        m: usize,
        steps: usize,
        seed: u64,
    ) -> (EmbeddedBatch, DMatrix<f64>, DVector<f64>, DMatrix<f64>, Vec<f64>, Vec<DVector<f64>>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        // Scale to spectral radius ~0.9 for a stable rollout.
        let rho = a
            .complex_eigenvalues()
            .iter()
            .map(|e| e.norm())
            .fold(0.0_f64, f64::max);
        a.scale_mut(0.9 / rho.max(1e-12));
        let b = DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
        let c = DMatrix::from_fn(m, n, |_, _| rng.random_range(-1.0..1.0));

        let mut z = DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
        let mut states = vec![z.clone()];
        let mut inputs = Vec::new();
        for _ in 0..steps {
            let u: f64 = rng.random_range(-1.0..1.0);
            z = &a * &z + &b * u;
            inputs.push(u);
            states.push(z.clone());
        }

        let n_c = steps - 1;
        let mut xi = DMatrix::zeros(n, n_c);
        let mut xi_plus = DMatrix::zeros(n, n_c);
        let mut u_row = nalgebra::RowDVector::zeros(n_c);
        let mut y = DMatrix::zeros(m, n_c);
        for j in 0..n_c {
            xi.set_column(j, &states[j]);
            xi_plus.set_column(j, &states[j + 1]);
            u_row[j] = inputs[j];
            y.set_column(j, &(&c * &states[j]));
        }
        let batch = EmbeddedBatch { xi, xi_plus, u_row, y, tau: 0, m };
        (batch, a, b, c, inputs, states)
    }

    #[test]
    fn exact_recovery_of_linear_system() {
        let (batch, ..) = lti_batch(6, 2, 80, 42);
        let model = fit(&batch, DEFAULT_RANK_TOL).unwrap();
        assert!(model.state_fro < 1e-8, "state residual {}", model.state_fro);
        assert!(model.output_fro < 1e-8, "output residual {}", model.output_fro);
    }

    #[test]
    fn fifty_step_rollout_matches_truth() {
        let (batch, a0, b0, c0, _, _) = lti_batch(5, 2, 90, 7);
        let model = fit(&batch, DEFAULT_RANK_TOL).unwrap();

        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let z0 = DVector::from_fn(5, |_, _| rng.random_range(-1.0..1.0));
        let currents: Vec<f64> = (0..50).map(|_| rng.random_range(-1.0..1.0)).collect();

        let pred = predict_horizon(&model, &z0, &currents);
        assert!(pred.finite);

        let mut z = z0.clone();
        let mut err: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for (j, &u) in currents.iter().enumerate() {
            z = &a0 * &z + &b0 * u;
            let truth = &c0 * &z;
            err = err.max((&truth - pred.voltages.column(j)).norm());
            scale = scale.max(truth.norm());
        }
        assert!(err / scale < 1e-6, "rollout error {}", err / scale);
    }

    #[test]
    fn constant_stream_is_a_fixed_point() {
        let values: Vec<Vec<f64>> = (0..40).map(|_| vec![3.7, 3.8]).collect();
        let currents = vec![0.0; 40];
        let stacks = DataStacks::from_columns(&values, &currents);
        let batch = delay_embed(&stacks, 2).unwrap();
        let model = fit(&batch, DEFAULT_RANK_TOL).unwrap();
        let z0 = batch.xi.column(batch.snapshot_count() - 1).into_owned();
        let pred = predict_horizon(&model, &z0, &[0.0; 10]);
        assert!(pred.finite);
        for j in 0..10 {
            assert_relative_eq!(pred.voltages[(0, j)], 3.7, epsilon = 1e-9);
            assert_relative_eq!(pred.voltages[(1, j)], 3.8, epsilon = 1e-9);
        }
    }

    #[test]
    fn least_squares_beats_perturbations() {
        // Normal-equations oracle: the SVD solution must reach the same
        // residual as the explicit normal-equations solve, and perturbing it
        // can only increase the misfit.
        let (batch, ..) = lti_batch(4, 1, 40, 3);
        let model = fit(&batch, DEFAULT_RANK_TOL).unwrap();
        let n = batch.state_dim();
        let n_c = batch.snapshot_count();
        let mut regressor = DMatrix::zeros(n + 1, n_c);
        regressor.rows_mut(0, n).copy_from(&batch.xi);
        regressor.row_mut(n).copy_from(&batch.u_row);

        let mut lambda = DMatrix::zeros(n, n + 1);
        lambda.columns_mut(0, n).copy_from(&model.a);
        lambda.column_mut(n).copy_from(&model.b);

        // Independent oracle: solve (G G^T) X^T = G xi_plus^T row by row via
        // Gaussian elimination on the normal equations.
        let g = &regressor;
        let gram = g * g.transpose();
        let rhs = g * batch.xi_plus.transpose();
        let oracle = solve_dense(&gram, &rhs);
        let resid_fit = (&batch.xi_plus - &lambda * g).norm();
        let resid_oracle = (&batch.xi_plus - oracle.transpose() * g).norm();
        assert!(resid_fit <= resid_oracle + 1e-9);

        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..8 {
            let delta = DMatrix::from_fn(n, n + 1, |_, _| rng.random_range(-1e-3..1e-3));
            let perturbed = &lambda + delta;
            let resid_perturbed = (&batch.xi_plus - perturbed * g).norm();
            assert!(resid_perturbed >= resid_fit - 1e-12);
        }
    }

    /// Plain Gaussian elimination with partial pivoting; test-only oracle.
    fn solve_dense(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
        let n = a.nrows();
        let mut aug = a.clone();
        let mut x = b.clone();
        for col in 0..n {
            let mut piv = col;
            for r in col + 1..n {
                if aug[(r, col)].abs() > aug[(piv, col)].abs() {
                    piv = r;
                }
            }
            aug.swap_rows(col, piv);
            x.swap_rows(col, piv);
            let d = aug[(col, col)];
            for r in col + 1..n {
                let f = aug[(r, col)] / d;
                for c2 in col..n {
                    let v = aug[(col, c2)];
                    aug[(r, c2)] -= f * v;
                }
                for c2 in 0..x.ncols() {
                    let v = x[(col, c2)];
                    x[(r, c2)] -= f * v;
                }
            }
        }
        for col in (0..n).rev() {
            for c2 in 0..x.ncols() {
                let mut s = x[(col, c2)];
                for k in col + 1..n {
                    s -= aug[(col, k)] * x[(k, c2)];
                }
                x[(col, c2)] = s / aug[(col, col)];
            }
        }
        x
    }

    #[test]
    fn identity_model_holds_prediction() {
        let n = 4;
        let model = KoopmanModel {
            a: DMatrix::identity(n, n),
            b: DVector::zeros(n),
            c: DMatrix::identity(2, n).columns(0, n).into_owned(),
            tau: 0,
            m: 2,
            state_fro: 0.0,
            output_fro: 0.0,
            svd_rank_used: n,
        };
        let z0 = DVector::from_vec(vec![1.0, 2.0, 3.0, 4.0]);
        let want = &model.c * &z0;
        let pred = predict_horizon(&model, &z0, &[5.0, -2.0, 0.0]);
        for j in 0..3 {
            assert_relative_eq!(pred.voltages[(0, j)], want[0], epsilon = 1e-14);
            assert_relative_eq!(pred.voltages[(1, j)], want[1], epsilon = 1e-14);
        }
    }

    #[test]
    fn single_step_equals_direct_evaluation() {
        let (batch, ..) = lti_batch(3, 1, 30, 11);
        let model = fit(&batch, DEFAULT_RANK_TOL).unwrap();
        let z0 = batch.xi.column(0).into_owned();
        let u0 = 0.37;
        let pred = predict_horizon(&model, &z0, &[u0]);
        let direct = &model.c * (&model.a * &z0 + &model.b * u0);
        assert_relative_eq!(pred.voltages[(0, 0)], direct[0], epsilon = 1e-13);
    }

    #[test]
    fn spectrum_of_diagonal_model() {
        let a = DMatrix::from_diagonal(&DVector::from_vec(vec![0.5, 0.9]));
        let model = KoopmanModel {
            a,
            b: DVector::zeros(2),
            c: DMatrix::identity(1, 2),
            tau: 0,
            m: 1,
            state_fro: 0.0,
            output_fro: 0.0,
            svd_rank_used: 2,
        };
        let eigs = spectrum(&model);
        assert_relative_eq!(eigs[0].re, 0.9, epsilon = 1e-12);
        assert_relative_eq!(eigs[1].re, 0.5, epsilon = 1e-12);

        let ident = KoopmanModel {
            a: DMatrix::identity(3, 3),
            ..model
        };
        for e in spectrum(&ident) {
            assert_relative_eq!(e.re, 1.0, epsilon = 1e-12);
            assert_relative_eq!(e.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn refit_is_deterministic() {
        let (batch, ..) = lti_batch(5, 2, 60, 5);
        let m1 = fit(&batch, DEFAULT_RANK_TOL).unwrap();
        let m2 = fit(&batch, DEFAULT_RANK_TOL).unwrap();
        assert_eq!(m1, m2);
    }

    #[test]
    fn output_residual_matches_recorded_value() {
        let (batch, ..) = lti_batch(4, 2, 50, 17);
        let model = fit(&batch, DEFAULT_RANK_TOL).unwrap();
        let resid = (&batch.y - &model.c * &batch.xi).norm() / batch.y.norm();
        assert_relative_eq!(resid, model.output_fro, epsilon = 1e-12);
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let (mut batch, ..) = lti_batch(3, 1, 30, 2);
        batch.xi[(0, 0)] = f64::NAN;
        assert!(matches!(fit(&batch, DEFAULT_RANK_TOL), Err(FitError::NonFiniteInput)));
    }

    #[test]
    fn underdetermined_batch_is_rejected() {
        let (batch, ..) = lti_batch(8, 1, 6, 2);
        assert!(matches!(
            fit(&batch, DEFAULT_RANK_TOL),
            Err(FitError::Underdetermined { .. })
        ));
    }
}
