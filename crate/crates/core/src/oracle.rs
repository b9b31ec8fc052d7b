//! Slow reference implementations for checking the spectral solver.
//!
//! Nothing here shares code with [`crate::spectral`] or [`crate::solver`]:
//! transforms are direct double sums and the finite-difference integrator
//! uses its own stencils. Not meant for production runs.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::field::{Field2D, InpaintProblem};
use crate::nonlinearity::NonlinearVariant;
use crate::solver::StepParams;

/// Largest grid accepted by [`naive_dft_step`].
pub const NAIVE_DFT_LIMIT: usize = 32;

type Complex = (f64, f64);

/// Direct 2D DFT with precomputed per-axis twiddles.
struct DirectDft {
    w: usize,
    h: usize,
    // twiddle[j] = exp(-2 pi i j / n)
    tw_x: Vec<Complex>,
    tw_y: Vec<Complex>,
}

impl DirectDft {
    fn new(w: usize, h: usize) -> Self {
        let table = |n: usize| {
            (0..n)
                .map(|j| {
                    let a = -2.0 * PI * j as f64 / n as f64;
                    (a.cos(), a.sin())
                })
                .collect()
        };
        DirectDft {
            w,
            h,
            tw_x: table(w),
            tw_y: table(h),
        }
    }

    /// `sign = -1` forward (unnormalized), `+1` inverse (normalized by `1/(w h)`).
    fn transform(&self, input: &[Complex], sign: f64) -> Vec<Complex> {
        let (w, h) = (self.w, self.h);
        let mut out = vec![(0.0, 0.0); w * h];
        for l in 0..h {
            for k in 0..w {
                let (mut re, mut im) = (0.0, 0.0);
                for y in 0..h {
                    let (cy, sy) = self.tw_y[(l * y) % h];
                    for x in 0..w {
                        let (cx, sx) = self.tw_x[(k * x) % w];
                        // exp(sign * -i * angle): conjugate the twiddle for the inverse
                        let (c, s) = (cx * cy - sx * sy, cx * sy + sx * cy);
                        let s = if sign < 0.0 { s } else { -s };
                        let (a, b) = input[y * w + x];
                        re += a * c - b * s;
                        im += a * s + b * c;
                    }
                }
                out[l * w + k] = (re, im);
            }
        }
        if sign > 0.0 {
            let norm = 1.0 / (w * h) as f64;
            for v in &mut out {
                v.0 *= norm;
                v.1 *= norm;
            }
        }
        out
    }

    fn forward_real(&self, f: &[f64]) -> Vec<Complex> {
        let c: Vec<Complex> = f.iter().map(|&v| (v, 0.0)).collect();
        self.transform(&c, -1.0)
    }

    fn inverse_real(&self, s: &[Complex]) -> Vec<f64> {
        self.transform(s, 1.0).into_iter().map(|c| c.0).collect()
    }
}

fn angular_wavenumber(k: usize, n: usize, spacing: f64) -> f64 {
    let f = if 2 * k <= n { k as f64 } else { k as f64 - n as f64 };
    2.0 * PI * f / (n as f64 * spacing)
}

/// Same contract as [`crate::solver::step`], with every transform done by direct summation.
pub fn naive_dft_step(u: &Field2D, problem: &InpaintProblem, params: &StepParams) -> Result<Field2D> {
    let (w, h) = u.dims();
    if w > NAIVE_DFT_LIMIT || h > NAIVE_DFT_LIMIT {
        return Err(Error::GridTooLarge {
            width: w,
            height: h,
            limit: NAIVE_DFT_LIMIT,
        });
    }
    if problem.dims() != (w, h) {
        return Err(Error::DimensionMismatch {
            expected: problem.dims(),
            actual: (w, h),
        });
    }
    params.validate()?;
    let spacing = u.spacing();
    let dft = DirectDft::new(w, h);

    let kx: Vec<f64> = (0..w).map(|k| angular_wavenumber(k, w, spacing)).collect();
    let ky: Vec<f64> = (0..h).map(|k| angular_wavenumber(k, h, spacing)).collect();
    // odd derivatives drop the Nyquist mode of even axes
    let dkx: Vec<f64> = (0..w).map(|k| if 2 * k == w { 0.0 } else { kx[k] }).collect();
    let dky: Vec<f64> = (0..h).map(|k| if 2 * k == h { 0.0 } else { ky[k] }).collect();
    let lap = |k: usize, l: usize| -(kx[k] * kx[k] + ky[l] * ky[l]);

    let u_hat = dft.forward_real(u.data());

    let h_field: Vec<f64> = match params.variant {
        NonlinearVariant::DoubleWell => u
            .data()
            .iter()
            .map(|&v| 2.0 * v * (1.0 - v) * (1.0 - 2.0 * v))
            .collect(),
        NonlinearVariant::ShockFilter { delta } => {
            let mut sx = vec![(0.0, 0.0); w * h];
            let mut sy = vec![(0.0, 0.0); w * h];
            let mut sl = vec![(0.0, 0.0); w * h];
            for l in 0..h {
                for k in 0..w {
                    let i = l * w + k;
                    let (a, b) = u_hat[i];
                    // multiply by i * kappa
                    sx[i] = (-b * dkx[k], a * dkx[k]);
                    sy[i] = (-b * dky[l], a * dky[l]);
                    sl[i] = (a * lap(k, l), b * lap(k, l));
                }
            }
            let gx = dft.inverse_real(&sx);
            let gy = dft.inverse_real(&sy);
            let lu = dft.inverse_real(&sl);
            (0..w * h)
                .map(|i| (gx[i] * gx[i] + gy[i] * gy[i] + delta * delta).sqrt() * lu[i].atan())
                .collect()
        }
    };
    let h_hat = dft.forward_real(&h_field);

    let fidelity: Vec<f64> = (0..w * h)
        .map(|i| {
            let lambda = if problem.mask().inside()[i] {
                0.0
            } else {
                problem.lambda0()
            };
            lambda * (problem.u0().data()[i] - u.data()[i])
        })
        .collect();
    let f_hat = dft.forward_real(&fidelity);

    let StepParams {
        epsilon,
        dt,
        c1,
        c2,
        ..
    } = *params;
    let mut next = vec![(0.0, 0.0); w * h];
    for l in 0..h {
        for k in 0..w {
            let i = l * w + k;
            let kk = lap(k, l);
            let den = 1.0 + dt * (c2 + epsilon * kk * kk - c1 * kk);
            let coef_u = 1.0 + dt * (c2 - c1 * kk);
            let coef_h = dt * kk / epsilon;
            next[i] = (
                (coef_u * u_hat[i].0 + coef_h * h_hat[i].0 + dt * f_hat[i].0) / den,
                (coef_u * u_hat[i].1 + coef_h * h_hat[i].1 + dt * f_hat[i].1) / den,
            );
        }
    }
    Ok(Field2D::from_parts(w, h, spacing, dft.inverse_real(&next)))
}

fn wrap(i: usize, d: isize, n: usize) -> usize {
    (i as isize + d).rem_euclid(n as isize) as usize
}

/// Five-point periodic Laplacian.
pub fn fd_laplacian(u: &Field2D) -> Field2D {
    let (w, h) = u.dims();
    let inv_h2 = 1.0 / (u.spacing() * u.spacing());
    Field2D::from_fn(w, h, |x, y| {
        let c = u.get(x, y);
        (u.get(wrap(x, 1, w), y) + u.get(wrap(x, -1, w), y) + u.get(x, wrap(y, 1, h))
            + u.get(x, wrap(y, -1, h))
            - 4.0 * c)
            * inv_h2
    })
    .with_spacing(u.spacing())
}

/// Central-difference gradient on the periodic grid.
pub fn fd_gradient(u: &Field2D) -> (Field2D, Field2D) {
    let (w, h) = u.dims();
    let inv_2h = 0.5 / u.spacing();
    let gx = Field2D::from_fn(w, h, |x, y| {
        (u.get(wrap(x, 1, w), y) - u.get(wrap(x, -1, w), y)) * inv_2h
    });
    let gy = Field2D::from_fn(w, h, |x, y| {
        (u.get(x, wrap(y, 1, h)) - u.get(x, wrap(y, -1, h))) * inv_2h
    });
    (gx.with_spacing(u.spacing()), gy.with_spacing(u.spacing()))
}

/// Forward-Euler step of `u_t = lap(h(u) / eps - eps lap u) + lambda (u0 - u)`
/// with finite-difference derivatives. Requires `dt <= spacing^4 / (64 eps)`.
pub fn explicit_fd_step(
    u: &Field2D,
    problem: &InpaintProblem,
    variant: &NonlinearVariant,
    epsilon: f64,
    dt: f64,
) -> Result<Field2D> {
    if problem.dims() != u.dims() {
        return Err(Error::DimensionMismatch {
            expected: problem.dims(),
            actual: u.dims(),
        });
    }
    let spacing = u.spacing();
    let bound = spacing.powi(4) / (64.0 * epsilon);
    if !(dt > 0.0 && dt <= bound) {
        return Err(Error::InvalidParameter(format!(
            "explicit step {dt} exceeds the stability bound {bound}"
        )));
    }
    let lap = fd_laplacian(u);
    let drive: Vec<f64> = match *variant {
        NonlinearVariant::DoubleWell => u
            .data()
            .iter()
            .map(|&v| 2.0 * v * (1.0 - v) * (1.0 - 2.0 * v))
            .collect(),
        NonlinearVariant::ShockFilter { delta } => {
            let (gx, gy) = fd_gradient(u);
            (0..u.len())
                .map(|i| {
                    let (a, b) = (gx.data()[i], gy.data()[i]);
                    (a * a + b * b + delta * delta).sqrt() * lap.data()[i].atan()
                })
                .collect()
        }
    };
    let potential: Vec<f64> = drive
        .iter()
        .zip(lap.data())
        .map(|(h, l)| h / epsilon - epsilon * l)
        .collect();
    let (w, hgt) = u.dims();
    let flux = fd_laplacian(&Field2D::from_parts(w, hgt, spacing, potential));
    let data = (0..u.len())
        .map(|i| {
            let lambda = if problem.mask().inside()[i] {
                0.0
            } else {
                problem.lambda0()
            };
            let v = u.data()[i];
            v + dt * (flux.data()[i] + lambda * (problem.u0().data()[i] - v))
        })
        .collect();
    Ok(Field2D::from_parts(w, hgt, spacing, data))
}
