//! Batch command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 for I/O and argument errors, 2 when a run blows up.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::field::{
    self, generate_cross, generate_mask_hexagon, generate_mask_rect, generate_stripes, mse,
    Field2D, InpaintProblem, Mask2D, Region,
};
use crate::nonlinearity::NonlinearVariant;
use crate::solver::{
    energy_e1, energy_e2, parse_stages, save_diagnostics, Coefficient, RunOutput, Solver,
    SolverConfig, Stage,
};
use crate::spectral::SpectralWorkspace;

#[derive(Debug, Parser)]
#[command(
    name = "shockch",
    version,
    about = "Inpaint grayscale images with shock-filter or double-well Cahn-Hilliard flows"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inpaint one image.
    Inpaint(InpaintArgs),
    /// Run the double-well (A) and shock-filter (B) flows and compare them to a ground truth.
    Compare(CompareArgs),
    /// Generate a synthetic test image and mask.
    Gen(GenArgs),
    /// Report energies and errors of an image against its original.
    Diag(DiagArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Shock,
    Doublewell,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Time step.
    #[arg(long, default_value_t = 1.0)]
    pub dt: f64,
    /// Fidelity weight on known pixels.
    #[arg(long, default_value_t = 1e4)]
    pub lambda0: f64,
    /// Stabilization constant C1, or "auto" for max(1, 3/eps).
    #[arg(long, default_value = "auto")]
    pub c1: Coefficient,
    /// Stabilization constant C2, or "auto" for lambda0 + 1.
    #[arg(long, default_value = "auto")]
    pub c2: Coefficient,
    /// Gradient regularization of the shock filter.
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    /// Stop a stage once max |u_{n+1} - u_n| falls below this.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Diagnostics and progress interval, in iterations.
    #[arg(long, default_value_t = 100)]
    pub record_every: usize,
}

impl SolverArgs {
    fn config(&self, variant: VariantArg, stages: Vec<Stage>) -> SolverConfig {
        SolverConfig {
            dt: self.dt,
            stages,
            c1: self.c1,
            c2: self.c2,
            variant: match variant {
                VariantArg::Shock => NonlinearVariant::ShockFilter { delta: self.delta },
                VariantArg::Doublewell => NonlinearVariant::DoubleWell,
            },
            residual_tol: self.tol,
            record_every: self.record_every,
        }
    }
}

#[derive(Debug, Args)]
pub struct InpaintArgs {
    #[arg(long)]
    pub image: PathBuf,
    /// Mask image; pixels >= 128 mark the region to inpaint.
    #[arg(long)]
    pub mask: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = VariantArg::Shock)]
    pub variant: VariantArg,
    /// Comma-separated "eps:iters" stages.
    #[arg(long, default_value = "100:4000,2:4000")]
    pub stages: String,
    /// Write per-iteration diagnostics as CSV.
    #[arg(long)]
    pub diag: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub truth: PathBuf,
    #[arg(long)]
    pub image: PathBuf,
    #[arg(long)]
    pub mask: PathBuf,
    /// Outputs go to <prefix>_doublewell.pgm and <prefix>_shock.pgm.
    #[arg(long)]
    pub out_prefix: PathBuf,
    /// Stages for the double-well run.
    #[arg(long, default_value = "100:4000,1:4000")]
    pub stages_a: String,
    /// Stages for the shock-filter run.
    #[arg(long, default_value = "100:4000,2:4000")]
    pub stages_b: String,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    Stripes,
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MaskShapeArg {
    Rect,
    Hexagon,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub shape: ShapeArg,
    #[arg(long, value_enum)]
    pub mask: MaskShapeArg,
    /// Grid size as WxH.
    #[arg(long)]
    pub size: String,
    /// Stripe period in pixels.
    #[arg(long, default_value_t = 8)]
    pub period: usize,
    /// Cross arm thickness; defaults to a quarter of the smaller side.
    #[arg(long)]
    pub thickness: Option<usize>,
    /// Rectangle as x0,y0,w,h; defaults to a centered quarter-width, half-height block.
    #[arg(long)]
    pub rect: Option<String>,
    /// Hexagon center as cx,cy; defaults to the grid center.
    #[arg(long)]
    pub center: Option<String>,
    /// Hexagon circumradius; defaults to a fifth of the smaller side.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Intensity written into the masked pixels of the damaged image.
    #[arg(long, default_value_t = 0.5)]
    pub fill: f64,
    /// Damaged image (mask region filled with --fill).
    #[arg(long)]
    pub out_image: PathBuf,
    #[arg(long)]
    pub out_mask: PathBuf,
    /// Undamaged image.
    #[arg(long)]
    pub out_truth: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiagArgs {
    /// Image to evaluate, e.g. an inpainting result.
    #[arg(long)]
    pub image: PathBuf,
    /// The damaged input the result was computed from.
    #[arg(long)]
    pub original: PathBuf,
    #[arg(long)]
    pub mask: PathBuf,
    #[arg(long)]
    pub truth: Option<PathBuf>,
    /// Interface width used for the double-well energy.
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1e4)]
    pub lambda0: f64,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BlowUp { .. } => 2,
                _ => 1,
            }
        }
    }
}

pub fn execute(command: &Command) -> Result<()> {
    match command {
        Command::Inpaint(a) => inpaint(a),
        Command::Compare(a) => compare(a),
        Command::Gen(a) => gen(a),
        Command::Diag(a) => diag(a),
    }
}

fn load_problem(image: &Path, mask: &Path, lambda0: f64) -> Result<InpaintProblem> {
    let u0 = field::load_grayscale(image)?;
    let mask = field::load_mask(mask)?;
    InpaintProblem::new(u0, mask, lambda0)
}

fn run_logged(solver: &Solver<'_>, record_every: usize, label: &str) -> Result<RunOutput> {
    let stderr = std::io::stderr();
    solver.run_with(|p| {
        if p.iteration % record_every == 0 {
            let _ = writeln!(
                stderr.lock(),
                "{label}iteration {} eps {} residual {:.3e}",
                p.iteration,
                p.epsilon,
                p.residual
            );
        }
    })
}

fn inpaint(a: &InpaintArgs) -> Result<()> {
    let stages = parse_stages(&a.stages)?;
    let problem = load_problem(&a.image, &a.mask, a.solver.lambda0)?;
    let config = a.solver.config(a.variant, stages);
    let solver = Solver::new(&problem, &config)?;
    let out = run_logged(&solver, config.record_every, "")?;
    field::save_grayscale(&out.field, &a.out)?;
    if let Some(path) = &a.diag {
        save_diagnostics(&out.records, path)?;
    }
    Ok(())
}

fn compare(a: &CompareArgs) -> Result<()> {
    let stages_a = parse_stages(&a.stages_a)?;
    let stages_b = parse_stages(&a.stages_b)?;
    let truth = field::load_grayscale(&a.truth)?;
    let problem = load_problem(&a.image, &a.mask, a.solver.lambda0)?;
    crate::field::ensure_same_dims(problem.dims(), truth.dims())?;

    let mut rows = Vec::new();
    for (variant, stages) in [(VariantArg::Doublewell, stages_a), (VariantArg::Shock, stages_b)] {
        let config = a.solver.config(variant, stages);
        let name = config.variant.name();
        let solver = Solver::new(&problem, &config)?.with_ground_truth(&truth)?;
        let out = run_logged(&solver, config.record_every, &format!("[{name}] "))?;
        let path = prefixed(&a.out_prefix, name);
        field::save_grayscale(&out.field, &path)?;
        rows.push(CompareRow {
            variant: name,
            iterations: out.iterations,
            mse_all: mse(&out.field, &truth, Region::All)?,
            mse_omega: mse(&out.field, &truth, Region::Inside(problem.mask()))?,
        });
    }
    print!("{}", format_compare_table(&rows));
    Ok(())
}

fn prefixed(prefix: &Path, name: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(format!("_{name}.pgm"));
    PathBuf::from(s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow {
    pub variant: &'static str,
    pub iterations: usize,
    pub mse_all: f64,
    pub mse_omega: f64,
}

pub fn format_compare_table(rows: &[CompareRow]) -> String {
    let mut s = format!(
        "{:<12}{:>12}{:>14}{:>14}\n",
        "variant", "iterations", "mse_all", "mse_omega"
    );
    for r in rows {
        s.push_str(&format!(
            "{:<12}{:>12}{:>14.6}{:>14.6}\n",
            r.variant, r.iterations, r.mse_all, r.mse_omega
        ));
    }
    s
}

fn parse_size(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidGeometry(format!("size {s:?} is not of the form WxH"));
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let w: usize = w.trim().parse().map_err(|_| bad())?;
    let h: usize = h.trim().parse().map_err(|_| bad())?;
    if w == 0 || h == 0 {
        return Err(Error::InvalidGeometry(format!("size {w}x{h} must be positive")));
    }
    Ok((w, h))
}

fn parse_list<const N: usize>(s: &str, what: &str) -> Result<[usize; N]> {
    let values: Vec<usize> = s
        .split(',')
        .map(|v| v.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidGeometry(format!("bad {what} {s:?}")))?;
    values
        .try_into()
        .map_err(|_| Error::InvalidGeometry(format!("{what} needs {N} comma-separated integers")))
}

fn gen(a: &GenArgs) -> Result<()> {
    let (w, h) = parse_size(&a.size)?;
    let truth = match a.shape {
        ShapeArg::Stripes => generate_stripes(w, h, a.period)?,
        ShapeArg::Cross => generate_cross(w, h, a.thickness.unwrap_or(w.min(h) / 4).max(1))?,
    };
    let mask = match a.mask {
        MaskShapeArg::Rect => {
            let [x0, y0, rw, rh] = match &a.rect {
                Some(r) => parse_list::<4>(r, "rectangle")?,
                None => {
                    let (rw, rh) = ((w / 4).max(1), (h / 2).max(1));
                    [(w - rw) / 2, (h - rh) / 2, rw, rh]
                }
            };
            generate_mask_rect(w, h, x0, y0, rw, rh)?
        }
        MaskShapeArg::Hexagon => {
            let [cx, cy] = match &a.center {
                Some(c) => parse_list::<2>(c, "center")?,
                None => [w / 2, h / 2],
            };
            let radius = a.radius.unwrap_or(w.min(h) as f64 / 5.0);
            generate_mask_hexagon(w, h, (cx, cy), radius)?
        }
    };
    if !(0.0..=1.0).contains(&a.fill) {
        return Err(Error::InvalidParameter(format!(
            "fill value {} must lie in [0, 1]",
            a.fill
        )));
    }
    field::save_grayscale(&field::fill_region(&truth, &mask, a.fill)?, &a.out_image)?;
    field::save_mask(&mask, &a.out_mask)?;
    if let Some(path) = &a.out_truth {
        field::save_grayscale(&truth, path)?;
    }
    Ok(())
}

fn diag(a: &DiagArgs) -> Result<()> {
    let image = field::load_grayscale(&a.image)?;
    let problem = load_problem(&a.original, &a.mask, a.lambda0)?;
    crate::field::ensure_same_dims(problem.dims(), image.dims())?;
    if !(a.epsilon > 0.0) {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let ws = SpectralWorkspace::for_field(&image)?;
    let truth: Option<Field2D> = a.truth.as_ref().map(field::load_grayscale).transpose()?;
    let mask: &Mask2D = problem.mask();

    let mut out = String::new();
    let e1 = energy_e1(&image, a.epsilon, &NonlinearVariant::DoubleWell, &ws)?;
    out.push_str(&format!("e1_doublewell {e1}\n"));
    out.push_str(&format!("e2 {}\n", energy_e2(&image, &problem)?));
    out.push_str(&format!(
        "mse_known {}\n",
        mse(&image, problem.u0(), Region::Outside(mask))?
    ));
    if let Some(t) = &truth {
        out.push_str(&format!("mse_unknown {}\n", mse(&image, t, Region::Inside(mask))?));
        out.push_str(&format!("mse_all {}\n", mse(&image, t, Region::All)?));
    }
    print!("{out}");
    Ok(())
}
