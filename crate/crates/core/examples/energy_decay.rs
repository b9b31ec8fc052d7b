//! Pure Cahn-Hilliard coarsening of random noise. With no fidelity term and
//! C1 above the potential's curvature, the discrete Ginzburg-Landau energy
//! decreases at every step.
//!
//! ```text
//! cargo run --release --example energy_decay
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shockch::solver::{energy_e1, Coefficient, Solver};
use shockch::{Field2D, InpaintProblem, Mask2D, NonlinearVariant, SolverConfig, Stage};

fn main() -> shockch::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let u0 = Field2D::from_fn(64, 64, |_, _| rng.gen::<f64>());
    let problem = InpaintProblem::new(u0, Mask2D::empty(64, 64), 0.0)?;
    let variant = NonlinearVariant::DoubleWell;
    let config = SolverConfig {
        stages: vec![Stage::new(1.0, 500)],
        c1: Coefficient::Fixed(3.0),
        variant,
        ..SolverConfig::default()
    };

    let solver = Solver::new(&problem, &config)?;
    let ws = solver.workspace();
    let mut previous = energy_e1(problem.u0(), 1.0, &variant, ws)?;
    println!("step     0  E1 {previous:.6}");
    let mut increases = 0;
    solver.run_with(|p| {
        let e = energy_e1(p.field, 1.0, &variant, ws).unwrap_or(f64::NAN);
        if e > previous + 1e-10 {
            increases += 1;
        }
        if p.iteration % 50 == 0 {
            println!("step {:>5}  E1 {e:.6}", p.iteration);
        }
        previous = e;
    })?;
    println!("energy increases: {increases}");
    Ok(())
}
