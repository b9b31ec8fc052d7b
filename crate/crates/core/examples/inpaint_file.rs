//! Inpaints an image file and writes the result plus a diagnostics CSV.
//! Without arguments a damaged stripe image is generated first.
//!
//! ```text
//! cargo run --release --example inpaint_file [IMAGE MASK OUT_DIR]
//! ```

use std::path::PathBuf;

use shockch::field::{
    fill_region, generate_mask_rect, generate_stripes, load_grayscale, load_mask, save_grayscale, save_mask,
};
use shockch::solver::{parse_stages, save_diagnostics, Solver};
use shockch::{InpaintProblem, SolverConfig};

fn main() -> shockch::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out_dir = args.get(2).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("shockch"));
    std::fs::create_dir_all(&out_dir).map_err(|e| shockch::Error::io(&out_dir, e))?;

    let (image, mask) = match (args.first(), args.get(1)) {
        (Some(image), Some(mask)) => (PathBuf::from(image), PathBuf::from(mask)),
        _ => {
            let truth = generate_stripes(64, 64, 32)?;
            let mask = generate_mask_rect(64, 64, 24, 16, 16, 32)?;
            let (image_path, mask_path) = (out_dir.join("input.png"), out_dir.join("mask.png"));
            save_grayscale(&fill_region(&truth, &mask, 0.5)?, &image_path)?;
            save_mask(&mask, &mask_path)?;
            (image_path, mask_path)
        }
    };

    let problem = InpaintProblem::new(load_grayscale(&image)?, load_mask(&mask)?, 1e4)?;
    let config = SolverConfig { record_every: 500, ..SolverConfig::default() }
        .with_stages(parse_stages("100:4000,2:4000")?);
    let out = Solver::new(&problem, &config)?.run()?;

    save_grayscale(&out.field, out_dir.join("inpainted.png"))?;
    save_diagnostics(&out.records, out_dir.join("diagnostics.csv"))?;
    for r in &out.records {
        println!("{:>5}  eps {:>5}  residual {:.2e}  mse known {:.2e}", r.iteration, r.epsilon, r.residual, r.mse_known);
    }
    println!("wrote inpainted.png and diagnostics.csv to {}", out_dir.display());
    Ok(())
}
