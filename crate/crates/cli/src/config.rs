//! Run configuration: every knob the pipeline accepts, validated up front.
//!
//! All rational inputs cross the boundary as `p/q` strings — no floating-point
//! value is ever accepted. A bad flag is a configuration error (process exit
//! code 2), distinct from a certification failure (exit code 1).

use extremal_cert_core::exactnum::ExactRational;
use thiserror::Error;

/// Configuration problems: malformed or out-of-range flags.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("invalid rational for --{flag}: {value:?} (expected \"p\" or \"p/q\")")]
    InvalidRational { flag: String, value: String },
    #[error("--{flag} must be positive, got {value}")]
    NonPositive { flag: String, value: String },
    #[error("--x0-width must be below 1 (got {value}); wider intervals certify nothing")]
    WidthTooCoarse { value: String },
    #[error("--a-bound must exceed 7 (got {value}); below the lattice floor no budget exists")]
    ABoundTooSmall { value: String },
    #[error("--{flag} must be at least 1, got {value}")]
    BoundTooSmall { flag: String, value: i64 },
    #[error("unknown format {value:?} (expected \"json\" or \"md\")")]
    UnknownFormat { value: String },
    #[error("unknown rule {value:?} (see --help for the seven rule ids)")]
    UnknownRule { value: String },
    #[error("--x must be a nonnegative rational, got {value}")]
    NegativeEvaluationPoint { value: String },
}

/// Output flavor for the full report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Markdown,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, ConfigError> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "md" | "markdown" => Ok(OutputFormat::Markdown),
            other => Err(ConfigError::UnknownFormat {
                value: other.to_string(),
            }),
        }
    }
}

/// Validated pipeline configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Energy bound driving the budgets (must exceed the lattice floor 7).
    pub a_bound: ExactRational,
    /// Requested width of the critical-point enclosure (positive, below 1).
    pub x0_width: ExactRational,
    /// Requested width of the boundary-root enclosure (positive).
    pub l_width: ExactRational,
    /// Brute-force scan bound for the mod-3 oracle.
    pub dioph_bound: i64,
    /// Enumeration bound for Pell solutions.
    pub pell_bound: u64,
    pub format: OutputFormat,
}

pub const DEFAULT_A_BOUND: &str = "8";
pub const DEFAULT_X0_WIDTH: &str = "1/1000000";
pub const DEFAULT_L_WIDTH: &str = "1/1000";
pub const DEFAULT_DIOPH_BOUND: i64 = 10_000;
pub const DEFAULT_PELL_BOUND: u64 = 1_000_000;

pub fn parse_rational(flag: &str, value: &str) -> Result<ExactRational, ConfigError> {
    value
        .parse::<ExactRational>()
        .map_err(|_| ConfigError::InvalidRational {
            flag: flag.to_string(),
            value: value.to_string(),
        })
}

fn parse_positive(flag: &str, value: &str) -> Result<ExactRational, ConfigError> {
    let r = parse_rational(flag, value)?;
    if !r.is_positive() {
        return Err(ConfigError::NonPositive {
            flag: flag.to_string(),
            value: value.to_string(),
        });
    }
    Ok(r)
}

impl RunConfig {
    /// Builds and validates a configuration from raw flag strings.
    pub fn from_strings(
        a_bound: &str,
        x0_width: &str,
        l_width: &str,
        dioph_bound: i64,
        pell_bound: u64,
        format: &str,
    ) -> Result<Self, ConfigError> {
        let a_bound_r = parse_rational("a-bound", a_bound)?;
        if a_bound_r <= ExactRational::from_int(7) {
            return Err(ConfigError::ABoundTooSmall {
                value: a_bound.to_string(),
            });
        }
        let x0 = parse_positive("x0-width", x0_width)?;
        if x0 >= ExactRational::one() {
            return Err(ConfigError::WidthTooCoarse {
                value: x0_width.to_string(),
            });
        }
        let l = parse_positive("L-width", l_width)?;
        if dioph_bound < 1 {
            return Err(ConfigError::BoundTooSmall {
                flag: "dioph-bound".to_string(),
                value: dioph_bound,
            });
        }
        if pell_bound < 1 {
            return Err(ConfigError::BoundTooSmall {
                flag: "pell-bound".to_string(),
                value: pell_bound as i64,
            });
        }
        Ok(RunConfig {
            a_bound: a_bound_r,
            x0_width: x0,
            l_width: l,
            dioph_bound,
            pell_bound,
            format: OutputFormat::parse(format)?,
        })
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig::from_strings(
            DEFAULT_A_BOUND,
            DEFAULT_X0_WIDTH,
            DEFAULT_L_WIDTH,
            DEFAULT_DIOPH_BOUND,
            DEFAULT_PELL_BOUND,
            "json",
        )
        .expect("defaults are valid")
    }
}
