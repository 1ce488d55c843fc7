//! Command-line flags, the optional TOML config file and their merge.

use std::path::{Path, PathBuf};

use carlitz_core::verify::VerifyConfig;
use clap::{Parser, Subcommand};
use serde::Deserialize;

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "carlitz",
    version,
    about = "Carlitz-module multiple zeta values and their u-analogs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// TOML file with default settings; flags and CARLITZ_* variables take precedence.
    #[arg(long, global = true, env = "CARLITZ_CONFIG")]
    pub config: Option<PathBuf>,
    /// Order r of the constant field 𝔽_r.
    #[arg(long, global = true, env = "CARLITZ_R")]
    pub r: Option<u64>,
    /// Target precision in 1/θ-units (w-units for analytic limits).
    #[arg(long, global = true, env = "CARLITZ_PREC")]
    pub prec: Option<i64>,
    /// Degree bound d_max.
    #[arg(long = "d-max", global = true, env = "CARLITZ_D_MAX")]
    pub d_max: Option<usize>,
    /// Degree bound D_max for finite MZVs.
    #[arg(long = "dmax", global = true, env = "CARLITZ_DMAX")]
    pub big_d_max: Option<usize>,
    /// Largest u-order N_max.
    #[arg(long = "nmax", global = true, env = "CARLITZ_NMAX")]
    pub n_max: Option<usize>,
    /// Weight bound for verification suites.
    #[arg(long = "weight-max", global = true, env = "CARLITZ_WEIGHT_MAX")]
    pub weight_max: Option<i64>,
    /// Degree bound for u-Sinnott and finite Euler–Carlitz suites.
    #[arg(long = "deg-max", global = true, env = "CARLITZ_DEG_MAX")]
    pub deg_max: Option<usize>,
    /// Output format: json, csv or text.
    #[arg(long, global = true, env = "CARLITZ_FORMAT")]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true, env = "CARLITZ_OUTPUT")]
    pub output: Option<PathBuf>,
    /// Record per-case wall time in verification reports.
    #[arg(long, global = true, env = "CARLITZ_TIMINGS")]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// ζ_A(𝐬) in K_∞ to the requested precision.
    Zeta {
        #[arg(long)]
        index: String,
    },
    /// γ_0 … γ_{N_max} of ζ_u(𝐬).
    ZetaU {
        #[arg(long)]
        index: String,
    },
    /// Components of the finite MZV at monic irreducibles of degree ≤ D_max.
    FiniteZeta {
        #[arg(long)]
        index: String,
    },
    /// Coefficients of the t-expansion of ζ_u(𝐬).
    TExpansion {
        #[arg(long)]
        index: String,
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

/// Keys accepted in the config file.
#[derive(Deserialize, Debug, Default, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub r: Option<u64>,
    pub prec: Option<i64>,
    pub d_max: Option<usize>,
    #[serde(rename = "D_max")]
    pub big_d_max: Option<usize>,
    #[serde(rename = "N_max")]
    pub n_max: Option<usize>,
    pub weight_max: Option<i64>,
    pub deg_max: Option<usize>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub timings: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub r: u64,
    pub prec: i64,
    pub d_max: usize,
    pub big_d_max: usize,
    pub n_max: usize,
    pub weight_max: Option<i64>,
    pub deg_max: usize,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub timings: bool,
}

impl RunConfig {
    pub fn resolve(cli: &Cli) -> Result<Self, String> {
        let file = match &cli.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        Self::merge(cli, file)
    }

    /// Flags (including their environment variables) over the file over defaults.
    pub fn merge(cli: &Cli, file: FileConfig) -> Result<Self, String> {
        let d = VerifyConfig::default();
        let cfg = RunConfig {
            r: cli.r.or(file.r).unwrap_or(d.r),
            prec: cli.prec.or(file.prec).unwrap_or(d.prec),
            d_max: cli.d_max.or(file.d_max).unwrap_or(d.d_max),
            big_d_max: cli.big_d_max.or(file.big_d_max).unwrap_or(d.big_d_max),
            n_max: cli.n_max.or(file.n_max).unwrap_or(d.n_max),
            weight_max: cli.weight_max.or(file.weight_max),
            deg_max: cli.deg_max.or(file.deg_max).unwrap_or(d.deg_max),
            format: cli.format.or(file.format).unwrap_or(Format::Json),
            output: cli.output.clone().or(file.output),
            timings: cli.timings || file.timings.unwrap_or(false),
        };
        if cfg.prec < 1 {
            return Err(format!("prec must be at least 1, got {}", cfg.prec));
        }
        if cfg.weight_max.is_some_and(|w| w < 0) {
            return Err("weight-max must be nonnegative".into());
        }
        Ok(cfg)
    }

    pub fn verify(&self) -> VerifyConfig {
        VerifyConfig {
            r: self.r,
            prec: self.prec,
            d_max: self.d_max,
            big_d_max: self.big_d_max,
            n_max: self.n_max,
            weight_max: self.weight_max,
            deg_max: self.deg_max,
            timings: self.timings,
        }
    }
}
