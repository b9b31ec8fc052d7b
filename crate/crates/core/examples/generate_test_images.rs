//! Writes the synthetic test images and masks used throughout the crate.
//!
//! ```text
//! cargo run --example generate_test_images [OUT_DIR]
//! ```

use std::path::PathBuf;

use shockch::field::{
    fill_region, generate_cross, generate_mask_hexagon, generate_mask_rect, generate_stripes, save_grayscale,
    save_mask,
};

fn main() -> shockch::Result<()> {
    let out_dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("shockch"));
    std::fs::create_dir_all(&out_dir).map_err(|e| shockch::Error::io(&out_dir, e))?;

    let cases = [
        ("stripes", generate_stripes(64, 64, 32)?, generate_mask_rect(64, 64, 24, 24, 16, 16)?),
        ("cross", generate_cross(64, 64, 16)?, generate_mask_hexagon(64, 64, (32, 32), 14.0)?),
    ];
    for (name, truth, mask) in &cases {
        save_grayscale(truth, out_dir.join(format!("{name}_truth.pgm")))?;
        save_grayscale(&fill_region(truth, mask, 0.5)?, out_dir.join(format!("{name}_damaged.pgm")))?;
        save_mask(mask, out_dir.join(format!("{name}_mask.pgm")))?;
        println!("{name:<8} {} of {} pixels masked", mask.count_inside(), truth.len());
    }
    println!("wrote images to {}", out_dir.display());
    Ok(())
}
