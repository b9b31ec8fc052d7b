//! Cross with a hexagonal hole, saving the state after 200, 1000, 4000 and
//! 8000 iterations to show how recovery slows as the hole closes.
//!
//! ```text
//! cargo run --release --example cross_snapshots [OUT_DIR]
//! ```

use std::path::PathBuf;

use shockch::field::{fill_region, generate_cross, generate_mask_hexagon, mse, save_grayscale, Region};
use shockch::solver::{parse_stages, Solver};
use shockch::{InpaintProblem, SolverConfig};

fn main() -> shockch::Result<()> {
    let out_dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("shockch"));
    std::fs::create_dir_all(&out_dir).map_err(|e| shockch::Error::io(&out_dir, e))?;

    let truth = generate_cross(64, 64, 16)?;
    let mask = generate_mask_hexagon(64, 64, (32, 32), 14.0)?;
    let problem = InpaintProblem::new(fill_region(&truth, &mask, 0.5)?, mask.clone(), 1e3)?;
    let config = SolverConfig::default().with_stages(parse_stages("100:4000,2:4000")?);

    let mut saved = Vec::new();
    Solver::new(&problem, &config)?.run_with(|p| {
        if [200, 1000, 4000, 8000].contains(&p.iteration) {
            let err = mse(p.field, &truth, Region::Inside(&mask)).unwrap_or(f64::NAN);
            println!("iteration {:>5}  eps {:>5}  mse in hole {err:.5}", p.iteration, p.epsilon);
            saved.push((p.iteration, p.field.clone()));
        }
    })?;
    for (iteration, field) in &saved {
        save_grayscale(field, out_dir.join(format!("cross_{iteration:05}.pgm")))?;
    }
    println!("wrote {} snapshots to {}", saved.len(), out_dir.display());
    Ok(())
}
