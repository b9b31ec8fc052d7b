use crate::error::{Error, Result};
use crate::field::{ensure_same_dims, Field2D, InpaintProblem};
use crate::nonlinearity::{double_well_potential, NonlinearVariant};
use crate::spectral::SpectralWorkspace;

/// Ginzburg-Landau energy `sum (eps/2 |grad u|^2 + H(u)/eps) * spacing^2`.
///
/// The gradient term is summed in Fourier space with the Laplacian symbol,
/// `sum |grad u|^2 = (1/N) sum -K |u_hat|^2`, which is the quadratic form the
/// implicit part of the step uses. Only the double-well variant has a
/// closed-form potential.
pub fn energy_e1(
    u: &Field2D,
    epsilon: f64,
    variant: &NonlinearVariant,
    ws: &SpectralWorkspace,
) -> Result<f64> {
    if !matches!(variant, NonlinearVariant::DoubleWell) {
        return Err(Error::EnergyUndefined);
    }
    let u_hat = ws.forward(u)?;
    let n = u.len() as f64;
    let dirichlet: f64 = u_hat
        .data()
        .iter()
        .zip(ws.lap_symbol())
        .map(|(c, k)| -k * c.norm_sqr())
        .sum::<f64>()
        / n;
    let potential: f64 = u.data().iter().map(|&v| double_well_potential(v)).sum();
    let h2 = ws.spacing() * ws.spacing();
    Ok(h2 * (0.5 * epsilon * dirichlet + potential / epsilon))
}

/// Fidelity energy `(lambda0 / 2) * spacing^2 * sum_{outside mask} (u0 - u)^2`.
pub fn energy_e2(u: &Field2D, problem: &InpaintProblem) -> Result<f64> {
    ensure_same_dims(problem.dims(), u.dims())?;
    let h = u.spacing();
    let sum: f64 = u
        .data()
        .iter()
        .zip(problem.u0().data())
        .zip(problem.mask().inside())
        .filter(|(_, &inside)| !inside)
        .map(|((a, b), _)| (b - a) * (b - a))
        .sum();
    Ok(0.5 * problem.lambda0() * h * h * sum)
}
