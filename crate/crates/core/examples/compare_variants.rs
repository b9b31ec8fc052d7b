//! Runs the double-well and shock-filter flows on the same problem and prints
//! the error table the `compare` subcommand produces.
//!
//! ```text
//! cargo run --release --example compare_variants [stripes|cross]
//! ```

use shockch::cli::{format_compare_table, CompareRow};
use shockch::field::{
    fill_region, generate_cross, generate_mask_hexagon, generate_mask_rect, generate_stripes, mse, Region,
};
use shockch::solver::{parse_stages, run};
use shockch::{InpaintProblem, NonlinearVariant, SolverConfig};

fn main() -> shockch::Result<()> {
    let shape = std::env::args().nth(1).unwrap_or_else(|| "stripes".into());
    let (truth, mask) = match shape.as_str() {
        "cross" => (generate_cross(64, 64, 16)?, generate_mask_hexagon(64, 64, (32, 32), 14.0)?),
        _ => (generate_stripes(64, 64, 32)?, generate_mask_rect(64, 64, 24, 24, 16, 16)?),
    };
    let problem = InpaintProblem::new(fill_region(&truth, &mask, 0.5)?, mask.clone(), 1e4)?;

    let mut rows = Vec::new();
    for (variant, stages) in [
        (NonlinearVariant::DoubleWell, "100:4000,1:4000"),
        (NonlinearVariant::shock(), "100:4000,2:4000"),
    ] {
        let config = SolverConfig::default().with_variant(variant).with_stages(parse_stages(stages)?);
        let out = run(&problem, &config)?;
        rows.push(CompareRow {
            variant: variant.name(),
            iterations: out.iterations,
            mse_all: mse(&out.field, &truth, Region::All)?,
            mse_omega: mse(&out.field, &truth, Region::Inside(&mask))?,
        });
    }
    print!("{}", format_compare_table(&rows));
    Ok(())
}
