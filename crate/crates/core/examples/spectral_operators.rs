//! Spectral derivatives on the periodic grid against their closed forms.
//!
//! ```text
//! cargo run --example spectral_operators
//! ```

use std::f64::consts::PI;

use shockch::nonlinearity::shock_term;
use shockch::spectral::{bilaplacian, gradient, laplacian};
use shockch::{Field2D, SpectralWorkspace};

fn main() -> shockch::Result<()> {
    let n = 128;
    let s = 2.0 * PI / n as f64;
    let u = Field2D::from_fn(n, n, |x, y| (x as f64 * s).sin() * (2.0 * y as f64 * s).cos()).with_spacing(s);
    let ws = SpectralWorkspace::for_field(&u)?;

    let lap = laplacian(&u, &ws)?;
    let bilap = bilaplacian(&u, &ws)?;
    let (gx, gy) = gradient(&u, &ws)?;

    // u = sin x cos 2y is an eigenfunction: lap u = -5u.
    println!("laplacian    max error {:.2e}", lap.max_abs_diff(&u.map(|v| -5.0 * v))?);
    println!("bilaplacian  max error {:.2e}", bilap.max_abs_diff(&u.map(|v| 25.0 * v))?);
    let gx_exact = Field2D::from_fn(n, n, |x, y| (x as f64 * s).cos() * (2.0 * y as f64 * s).cos());
    let gy_exact = Field2D::from_fn(n, n, |x, y| -2.0 * (x as f64 * s).sin() * (2.0 * y as f64 * s).sin());
    println!("d/dx         max error {:.2e}", gx.data().iter().zip(gx_exact.data()).fold(0.0f64, |m, (a, b)| m.max((a - b).abs())));
    println!("d/dy         max error {:.2e}", gy.data().iter().zip(gy_exact.data()).fold(0.0f64, |m, (a, b)| m.max((a - b).abs())));

    let line = Field2D::from_fn(256, 4, |x, _| (x as f64 * 2.0 * PI / 256.0).sin()).with_spacing(2.0 * PI / 256.0);
    let h = shock_term(&line, &SpectralWorkspace::for_field(&line)?, 0.0)?;
    let exact = 0.5f64.sqrt() * (-(0.5f64.sqrt())).atan();
    println!("shock term at x = pi/4: {:.7} (closed form {exact:.7})", h.get(32, 0));
    Ok(())
}
