use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nonlinearity::NonlinearVariant;

/// One leg of a multi-scale schedule: a fixed interface width run for a fixed budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stage {
    pub epsilon: f64,
    pub iterations: usize,
}

impl Stage {
    pub fn new(epsilon: f64, iterations: usize) -> Self {
        Stage {
            epsilon,
            iterations,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::InvalidParameter("epsilon must be positive".into()));
        }
        if self.iterations == 0 {
            return Err(Error::InvalidParameter(
                "stage iterations must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Parses `"eps:iters,eps:iters,..."`.
pub fn parse_stages(s: &str) -> Result<Vec<Stage>> {
    let stages = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|pair| {
            let (eps, iters) = pair.split_once(':').ok_or_else(|| {
                Error::InvalidParameter(format!("stage {pair:?} is not of the form eps:iters"))
            })?;
            let epsilon: f64 = eps.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("bad epsilon {eps:?} in stage {pair:?}"))
            })?;
            let iterations: usize = iters.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("bad iteration count {iters:?} in stage {pair:?}"))
            })?;
            let stage = Stage::new(epsilon, iterations);
            stage.validate()?;
            Ok(stage)
        })
        .collect::<Result<Vec<_>>>()?;
    if stages.is_empty() {
        return Err(Error::InvalidParameter("at least one stage is required".into()));
    }
    Ok(stages)
}

/// A stabilization constant: explicit, or derived from epsilon / lambda0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coefficient {
    Auto,
    Fixed(f64),
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Coefficient::Auto);
        }
        s.parse::<f64>()
            .map(Coefficient::Fixed)
            .map_err(|_| Error::InvalidParameter(format!("expected a number or 'auto', got {s:?}")))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Auto => f.write_str("auto"),
            Coefficient::Fixed(v) => write!(f, "{v}"),
        }
    }
}

/// `C1 = max(1, 3 / epsilon)`.
pub fn auto_c1(epsilon: f64) -> f64 {
    (3.0 / epsilon).max(1.0)
}

/// `C2 = lambda0 + 1`, which keeps the fidelity split convex.
pub fn auto_c2(lambda0: f64) -> f64 {
    lambda0 + 1.0
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub dt: f64,
    pub stages: Vec<Stage>,
    pub c1: Coefficient,
    pub c2: Coefficient,
    pub variant: NonlinearVariant,
    /// Ends a stage early once `max |u_{n+1} - u_n|` drops below this.
    pub residual_tol: Option<f64>,
    pub record_every: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            dt: 1.0,
            stages: vec![Stage::new(100.0, 4000), Stage::new(2.0, 4000)],
            c1: Coefficient::Auto,
            c2: Coefficient::Auto,
            variant: NonlinearVariant::shock(),
            residual_tol: None,
            record_every: 100,
        }
    }
}

impl SolverConfig {
    pub fn with_stages(mut self, stages: Vec<Stage>) -> Self {
        self.stages = stages;
        self
    }

    pub fn with_variant(mut self, variant: NonlinearVariant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_dt(mut self, dt: f64) -> Self {
        self.dt = dt;
        self
    }

    pub fn total_iterations(&self) -> usize {
        self.stages.iter().map(|s| s.iterations).sum()
    }

    /// Checks the config against the fidelity weight it will run with.
    pub fn validate(&self, lambda0: f64) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "time step must be positive, got {}",
                self.dt
            )));
        }
        if self.stages.is_empty() {
            return Err(Error::InvalidParameter("at least one stage is required".into()));
        }
        for stage in &self.stages {
            stage.validate()?;
        }
        if let Coefficient::Fixed(c1) = self.c1 {
            if !(c1 > 0.0 && c1.is_finite()) {
                return Err(Error::InvalidParameter(format!("C1 must be positive, got {c1}")));
            }
        }
        if let Coefficient::Fixed(c2) = self.c2 {
            if !(c2 > 0.0 && c2.is_finite()) {
                return Err(Error::InvalidParameter(format!("C2 must be positive, got {c2}")));
            }
            if c2 <= lambda0 {
                return Err(Error::InvalidParameter(format!(
                    "C2 = {c2} must exceed lambda0 = {lambda0}"
                )));
            }
        }
        if let Some(tol) = self.residual_tol {
            if !(tol >= 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "residual tolerance must be nonnegative, got {tol}"
                )));
            }
        }
        if self.record_every == 0 {
            return Err(Error::InvalidParameter("record_every must be positive".into()));
        }
        self.variant.validate()
    }

    /// Resolves the per-step constants for one stage.
    pub fn step_params(&self, stage: &Stage, lambda0: f64) -> StepParams {
        StepParams {
            epsilon: stage.epsilon,
            dt: self.dt,
            c1: match self.c1 {
                Coefficient::Auto => auto_c1(stage.epsilon),
                Coefficient::Fixed(v) => v,
            },
            c2: match self.c2 {
                Coefficient::Auto => auto_c2(lambda0),
                Coefficient::Fixed(v) => v,
            },
            variant: self.variant,
        }
    }
}

/// Fully resolved constants for a single time step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepParams {
    pub epsilon: f64,
    pub dt: f64,
    pub c1: f64,
    pub c2: f64,
    pub variant: NonlinearVariant,
}

impl StepParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("epsilon", self.epsilon),
            ("dt", self.dt),
            ("C1", self.c1),
            ("C2", self.c2),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
            }
        }
        self.variant.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stage_syntax() {
        let s = parse_stages("100:4000, 2:26000").unwrap();
        assert_eq!(s, vec![Stage::new(100.0, 4000), Stage::new(2.0, 26000)]);
        let err = parse_stages("0:100").unwrap_err();
        assert!(err.to_string().contains("epsilon must be positive"));
        assert!(parse_stages("1:0").is_err());
        assert!(parse_stages("1-100").is_err());
        assert!(parse_stages("").is_err());
        assert!(parse_stages("-1:5").is_err());
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!("auto".parse::<Coefficient>().unwrap(), Coefficient::Auto);
        assert_eq!("3.5".parse::<Coefficient>().unwrap(), Coefficient::Fixed(3.5));
        assert!("x".parse::<Coefficient>().is_err());
    }

    #[test]
    fn auto_constants() {
        assert_eq!(auto_c1(100.0), 1.0);
        assert_eq!(auto_c1(1.0), 3.0);
        assert_eq!(auto_c2(1e4), 10001.0);
        let cfg = SolverConfig::default();
        let p = cfg.step_params(&Stage::new(2.0, 1), 10.0);
        assert_eq!((p.c1, p.c2), (1.5, 11.0));
    }

    #[test]
    fn c2_must_dominate_lambda0() {
        let cfg = SolverConfig {
            c2: Coefficient::Fixed(10.0),
            ..SolverConfig::default()
        };
        assert!(cfg.validate(10.0).is_err());
        assert!(cfg.validate(9.0).is_ok());
    }

    #[test]
    fn invalid_configs() {
        let base = SolverConfig::default();
        assert!(base.clone().with_dt(0.0).validate(1.0).is_err());
        assert!(base.clone().with_stages(vec![]).validate(1.0).is_err());
        let cfg = SolverConfig {
            record_every: 0,
            ..base.clone()
        };
        assert!(cfg.validate(1.0).is_err());
        let cfg = SolverConfig {
            c1: Coefficient::Fixed(-1.0),
            ..base
        };
        assert!(cfg.validate(1.0).is_err());
    }
}
