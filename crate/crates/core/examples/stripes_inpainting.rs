//! Fills a square hole cut out of a stripe pattern with the shock-filter flow.
//!
//! ```text
//! cargo run --release --example stripes_inpainting [OUT_DIR]
//! ```

use std::path::PathBuf;

use shockch::field::{fill_region, generate_mask_rect, generate_stripes, mse, save_grayscale, Region};
use shockch::solver::{parse_stages, run};
use shockch::{InpaintProblem, SolverConfig};

fn main() -> shockch::Result<()> {
    let out_dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("shockch"));
    std::fs::create_dir_all(&out_dir).map_err(|e| shockch::Error::io(&out_dir, e))?;

    let truth = generate_stripes(64, 64, 32)?;
    let mask = generate_mask_rect(64, 64, 24, 24, 16, 16)?;
    let damaged = fill_region(&truth, &mask, 0.5)?;
    let problem = InpaintProblem::new(damaged.clone(), mask.clone(), 1e4)?;

    let config = SolverConfig::default().with_stages(parse_stages("100:4000,2:4000")?);
    let out = run(&problem, &config)?;

    println!("iterations      {}", out.iterations);
    println!("mse in hole     {:.6}", mse(&out.field, &truth, Region::Inside(&mask))?);
    println!("mse everywhere  {:.6}", mse(&out.field, &truth, Region::All)?);

    save_grayscale(&damaged, out_dir.join("stripes_damaged.pgm"))?;
    save_grayscale(&out.field, out_dir.join("stripes_inpainted.pgm"))?;
    println!("wrote images to {}", out_dir.display());
    Ok(())
}
