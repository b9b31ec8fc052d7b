//! Binary-image inpainting with a fourth-order Cahn-Hilliard-type flow.
//!
//! The damaged region of a grayscale image is filled by evolving
//!
//! ```text
//! u_t = lap( h(u) / eps - eps lap u ) + lambda(x) (u0 - u)
//! ```
//!
//! where `lambda` is `lambda0` on known pixels and zero on the inpainting
//! domain. The drive term `h` is either the shock filter
//! `|grad u| arctan(lap u)` or the classical double-well derivative. Time
//! stepping uses a convexity-splitting scheme that is linear-implicit in
//! Fourier space, so each step is a diagonal solve on the periodic grid.
//!
//! ```no_run
//! use shockch::field::{fill_region, generate_cross, generate_mask_hexagon, InpaintProblem};
//! use shockch::solver::{run, SolverConfig, Stage};
//!
//! let truth = generate_cross(64, 64, 16).unwrap();
//! let mask = generate_mask_hexagon(64, 64, (32, 32), 14.0).unwrap();
//! let damaged = fill_region(&truth, &mask, 0.5).unwrap();
//! let problem = InpaintProblem::new(damaged, mask, 1e4).unwrap();
//! let config = SolverConfig::default()
//!     .with_stages(vec![Stage::new(100.0, 4000), Stage::new(2.0, 4000)]);
//! let out = run(&problem, &config).unwrap();
//! println!("{} iterations", out.iterations);
//! ```

pub mod cli;
pub mod error;
pub mod field;
pub mod nonlinearity;
pub mod oracle;
pub mod solver;
pub mod spectral;

pub use error::{Error, Result};
pub use field::{Field2D, InpaintProblem, Mask2D};
pub use nonlinearity::NonlinearVariant;
pub use solver::{SolverConfig, Stage};
pub use spectral::SpectralWorkspace;
