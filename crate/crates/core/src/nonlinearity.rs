//! Pointwise drive terms of the evolution: the arctan shock filter and the
//! double-well baseline.

use crate::error::{Error, Result};
use crate::field::Field2D;
use rustfft::num_complex::Complex64;

use crate::spectral::SpectralWorkspace;

/// Which nonlinear term drives the phase separation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NonlinearVariant {
    /// `sqrt(|grad u|^2 + delta^2) * arctan(lap u)`.
    ShockFilter { delta: f64 },
    /// `H'(u)` for the double well `H(u) = u^2 (1 - u)^2` with wells at 0 and 1.
    DoubleWell,
}

impl NonlinearVariant {
    pub fn shock() -> Self {
        NonlinearVariant::ShockFilter { delta: 0.0 }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            NonlinearVariant::ShockFilter { delta } if !(delta >= 0.0 && delta.is_finite()) => {
                Err(Error::InvalidParameter(format!(
                    "shock-filter delta must be nonnegative, got {delta}"
                )))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NonlinearVariant::ShockFilter { .. } => "shock",
            NonlinearVariant::DoubleWell => "doublewell",
        }
    }

    /// Evaluates the drive term on `u`, reusing its spectrum when the term needs derivatives.
    pub(crate) fn evaluate(&self, u: &Field2D, u_hat: &[Complex64], ws: &SpectralWorkspace) -> Field2D {
        match *self {
            NonlinearVariant::ShockFilter { delta } => shock_from_spectrum(u_hat, ws, delta),
            NonlinearVariant::DoubleWell => double_well_term(u),
        }
    }
}

/// Shock-filter term `sqrt(|grad u|^2 + delta^2) * arctan(lap u)` with spectral derivatives.
pub fn shock_term(u: &Field2D, ws: &SpectralWorkspace, delta: f64) -> Result<Field2D> {
    NonlinearVariant::ShockFilter { delta }.validate()?;
    let u_hat = ws.forward(u)?;
    Ok(shock_from_spectrum(u_hat.data(), ws, delta))
}

fn shock_from_spectrum(u_hat: &[Complex64], ws: &SpectralWorkspace, delta: f64) -> Field2D {
    let lap = ws.laplacian_of(u_hat);
    let (gx, gy) = ws.gradient_of(u_hat);
    let d2 = delta * delta;
    let data = gx
        .data()
        .iter()
        .zip(gy.data())
        .zip(lap.data())
        .map(|((&ux, &uy), &l)| (ux * ux + uy * uy + d2).sqrt() * l.atan())
        .collect();
    ws.field(data)
}

/// Double-well potential `H(u) = u^2 (1 - u)^2`.
pub fn double_well_potential(u: f64) -> f64 {
    let v = u * (1.0 - u);
    v * v
}

/// `H'(u) = 2 u (1 - u) (1 - 2u)`.
pub fn double_well_derivative(u: f64) -> f64 {
    2.0 * u * (1.0 - u) * (1.0 - 2.0 * u)
}

/// `H''(u) = 2 - 12 u + 12 u^2`.
pub fn double_well_curvature(u: f64) -> f64 {
    2.0 - 12.0 * u + 12.0 * u * u
}

/// Pointwise `H'(u)`.
pub fn double_well_term(u: &Field2D) -> Field2D {
    u.map(double_well_derivative)
}
