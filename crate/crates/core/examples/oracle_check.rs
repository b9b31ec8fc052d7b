//! Cross-checks one solver step against the direct-DFT oracle and a short
//! trajectory against the explicit finite-difference oracle.
//!
//! ```text
//! cargo run --example oracle_check
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shockch::oracle::{explicit_fd_step, naive_dft_step};
use shockch::solver::{auto_c1, auto_c2, Stepper, StepParams};
use shockch::{Field2D, InpaintProblem, Mask2D, NonlinearVariant, SpectralWorkspace};

fn main() -> shockch::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 16;
    let u0 = Field2D::from_fn(n, n, |_, _| rng.gen::<f64>());
    let mask = Mask2D::from_fn(n, n, |x, y| (5..11).contains(&x) && (5..11).contains(&y));
    let problem = InpaintProblem::new(u0.clone(), mask, 1e4)?;
    let ws = SpectralWorkspace::for_field(&u0)?;

    for variant in [NonlinearVariant::shock(), NonlinearVariant::DoubleWell] {
        let params = StepParams { epsilon: 2.0, dt: 1.0, c1: auto_c1(2.0), c2: auto_c2(1e4), variant };
        let fast = Stepper::new(&problem, &ws, params)?.step(&u0)?;
        let slow = naive_dft_step(&u0, &problem, &params)?;
        println!("{:<10} fft vs direct dft: {:.2e}", variant.name(), fast.max_abs_diff(&slow)?);
    }

    let tau = 2.0 * std::f64::consts::PI / n as f64;
    let smooth = Field2D::from_fn(n, n, |x, y| 0.5 + 0.3 * (x as f64 * tau).sin() * (y as f64 * tau).cos());
    let problem = InpaintProblem::new(smooth.clone(), Mask2D::empty(n, n), 0.0)?;
    let variant = NonlinearVariant::shock();
    let params = StepParams { epsilon: 1.0, dt: 1e-4, c1: auto_c1(1.0), c2: 1.0, variant };
    let stepper = Stepper::new(&problem, &ws, params)?;
    let (mut a, mut b) = (smooth.clone(), smooth);
    for _ in 0..10 {
        a = stepper.step(&a)?;
        b = explicit_fd_step(&b, &problem, &variant, 1.0, 1e-4)?;
    }
    println!("spectral vs finite differences after 10 steps: {:.2e}", a.max_abs_diff(&b)?);
    Ok(())
}
