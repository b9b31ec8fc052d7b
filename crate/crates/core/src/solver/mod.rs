//! Semi-implicit convexity-splitting time stepping in Fourier space.
//!
//! Each step solves, mode by mode,
//!
//! ```text
//! u_hat' = [u_hat + dt (K h_hat / eps - C1 K u_hat + (lambda (u0 - u))_hat + C2 u_hat)]
//!          / [1 + dt (C2 + eps K^2 - C1 K)]
//! ```
//!
//! where `K <= 0` is the Laplacian symbol and `h` the variant's drive term
//! evaluated on the current iterate. The denominator is at least 1 for every
//! mode, so the step is always solvable.

mod config;
mod diagnostics;
mod energy;

pub use config::{auto_c1, auto_c2, parse_stages, Coefficient, SolverConfig, Stage, StepParams};
pub use diagnostics::{save_diagnostics, write_diagnostics_csv, DiagnosticsRecord, CSV_HEADER};
pub use energy::{energy_e1, energy_e2};

use rustfft::num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{build_lambda_field, ensure_same_dims, mse, Field2D, InpaintProblem, Region};
use crate::nonlinearity::NonlinearVariant;
use crate::spectral::SpectralWorkspace;

/// The per-stage linear operator with its denominators precomputed.
#[derive(Debug)]
pub struct Stepper<'a> {
    problem: &'a InpaintProblem,
    ws: &'a SpectralWorkspace,
    params: StepParams,
    lambda: Field2D,
    inv_denominator: Vec<f64>,
}

impl<'a> Stepper<'a> {
    pub fn new(
        problem: &'a InpaintProblem,
        ws: &'a SpectralWorkspace,
        params: StepParams,
    ) -> Result<Self> {
        params.validate()?;
        ensure_same_dims(ws.dims(), problem.dims())?;
        let StepParams {
            epsilon,
            dt,
            c1,
            c2,
            ..
        } = params;
        let inv_denominator = ws
            .lap_symbol()
            .iter()
            .zip(ws.bilap_symbol())
            .map(|(&k, &k2)| {
                let d = 1.0 + dt * (c2 + epsilon * k2 - c1 * k);
                assert!(d >= 1.0, "step denominator {d} < 1");
                1.0 / d
            })
            .collect();
        Ok(Stepper {
            problem,
            ws,
            params,
            lambda: build_lambda_field(problem),
            inv_denominator,
        })
    }

    pub fn params(&self) -> &StepParams {
        &self.params
    }

    /// Advances `u` by one time step.
    pub fn step(&self, u: &Field2D) -> Result<Field2D> {
        ensure_same_dims(self.ws.dims(), u.dims())?;
        if !u.is_finite() {
            return Err(Error::NonFinite("step input"));
        }
        let StepParams {
            epsilon,
            dt,
            c1,
            c2,
            variant,
        } = self.params;
        let ws = self.ws;

        let u_hat = ws.forward_real(u.data());
        let h = variant.evaluate(u, &u_hat, ws);
        let fidelity: Vec<f64> = self
            .lambda
            .data()
            .iter()
            .zip(self.problem.u0().data())
            .zip(u.data())
            .map(|((l, u0), v)| l * (u0 - v))
            .collect();
        let (h_hat, f_hat) = ws.forward_real_pair(h.data(), &fidelity);

        let next: Vec<Complex64> = u_hat
            .iter()
            .zip(&h_hat)
            .zip(&f_hat)
            .zip(ws.lap_symbol().iter().zip(&self.inv_denominator))
            .map(|(((&uh, &hh), &fh), (&k, &inv_den))| {
                (uh + (hh * (k / epsilon) - uh * (c1 * k) + fh + uh * c2) * dt) * inv_den
            })
            .collect();
        Ok(ws.field(ws.inverse_to_real(next)))
    }
}

/// One time step of the scheme. Builds the stage operator on every call;
/// use [`Stepper`] when stepping repeatedly.
pub fn step(
    u: &Field2D,
    problem: &InpaintProblem,
    params: &StepParams,
    ws: &SpectralWorkspace,
) -> Result<Field2D> {
    Stepper::new(problem, ws, *params)?.step(u)
}

/// State handed to a run observer after every step.
#[derive(Debug)]
pub struct Progress<'a> {
    /// Global iteration count, starting at 1.
    pub iteration: usize,
    pub stage: usize,
    pub epsilon: f64,
    pub field: &'a Field2D,
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub field: Field2D,
    pub records: Vec<DiagnosticsRecord>,
    pub iterations: usize,
}

/// Drives a full staged run from `u = u0`.
#[derive(Debug)]
pub struct Solver<'a> {
    problem: &'a InpaintProblem,
    config: &'a SolverConfig,
    truth: Option<&'a Field2D>,
    ws: SpectralWorkspace,
}

impl<'a> Solver<'a> {
    pub fn new(problem: &'a InpaintProblem, config: &'a SolverConfig) -> Result<Self> {
        config.validate(problem.lambda0())?;
        let ws = SpectralWorkspace::for_field(problem.u0())?;
        Ok(Solver {
            problem,
            config,
            truth: None,
            ws,
        })
    }

    /// Enables `mse_unknown` in the diagnostics.
    pub fn with_ground_truth(mut self, truth: &'a Field2D) -> Result<Self> {
        ensure_same_dims(self.problem.dims(), truth.dims())?;
        self.truth = Some(truth);
        Ok(self)
    }

    pub fn workspace(&self) -> &SpectralWorkspace {
        &self.ws
    }

    pub fn run(&self) -> Result<RunOutput> {
        self.run_with(|_| {})
    }

    /// Runs every stage in order, calling `observer` after each step.
    pub fn run_with(&self, mut observer: impl FnMut(&Progress<'_>)) -> Result<RunOutput> {
        let lambda0 = self.problem.lambda0();
        let mut u = self.problem.u0().clone();
        let mut records = Vec::new();
        let mut iteration = 0;

        for (stage_idx, stage) in self.config.stages.iter().enumerate() {
            let stepper = Stepper::new(
                self.problem,
                &self.ws,
                self.config.step_params(stage, lambda0),
            )?;
            let mut residual = f64::NAN;
            for _ in 0..stage.iterations {
                let next = stepper.step(&u)?;
                iteration += 1;
                if !next.is_finite() {
                    return Err(Error::BlowUp { iteration });
                }
                residual = next.max_abs_diff(&u)?;
                u = next;
                observer(&Progress {
                    iteration,
                    stage: stage_idx,
                    epsilon: stage.epsilon,
                    field: &u,
                    residual,
                });
                if iteration % self.config.record_every == 0 {
                    records.push(self.record(&u, iteration, stage.epsilon, residual)?);
                }
                if self.config.residual_tol.is_some_and(|tol| residual < tol) {
                    break;
                }
            }
            if records.last().map(|r| r.iteration) != Some(iteration) {
                records.push(self.record(&u, iteration, stage.epsilon, residual)?);
            }
        }
        Ok(RunOutput {
            field: u,
            records,
            iterations: iteration,
        })
    }

    fn record(
        &self,
        u: &Field2D,
        iteration: usize,
        epsilon: f64,
        residual: f64,
    ) -> Result<DiagnosticsRecord> {
        let mask = self.problem.mask();
        let e1 = match self.config.variant {
            NonlinearVariant::DoubleWell => {
                Some(energy_e1(u, epsilon, &self.config.variant, &self.ws)?)
            }
            NonlinearVariant::ShockFilter { .. } => None,
        };
        Ok(DiagnosticsRecord {
            iteration,
            epsilon,
            e1,
            e2: energy_e2(u, self.problem)?,
            residual,
            mse_known: mse(u, self.problem.u0(), Region::Outside(mask))?,
            mse_unknown: self
                .truth
                .map(|t| mse(u, t, Region::Inside(mask)))
                .transpose()?,
        })
    }
}

/// Runs `config` on `problem` without ground truth or observer.
pub fn run(problem: &InpaintProblem, config: &SolverConfig) -> Result<RunOutput> {
    Solver::new(problem, config)?.run()
}
