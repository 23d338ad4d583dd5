//! Binary entry point: the argument surface, printing, and exit codes.
//!
//! Exit codes: `0` — the command certified (for `verify-all`, a true verdict);
//! `1` — some section or stage failed to certify; `2` — configuration error
//! (malformed or out-of-range flag values).

use std::io::Write;

use clap::{Parser, Subcommand};

use extremal_cert::commands::{
    cmd_budgets, cmd_bubbles, cmd_dioph_pell, cmd_functional_boundary, cmd_functional_critical,
    cmd_functional_eval, cmd_verify_all, CmdOutcome,
};
use extremal_cert::config::{
    ConfigError, OutputFormat, RunConfig, DEFAULT_A_BOUND, DEFAULT_DIOPH_BOUND, DEFAULT_L_WIDTH,
    DEFAULT_PELL_BOUND, DEFAULT_X0_WIDTH,
};

#[derive(Parser)]
#[command(
    name = "extremal-cert",
    version,
    about = "Exact-arithmetic certificates for the conformally Kähler Einstein metric \
             on the two-point blow-up of the complex projective plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all nine certification sections and print the report
    VerifyAll {
        /// Energy bound driving the budget and bubble stages, as "p" or "p/q"
        #[arg(long, default_value = DEFAULT_A_BOUND)]
        a_bound: String,
        /// Requested width of the critical-point enclosure (positive, < 1)
        #[arg(long, default_value = DEFAULT_X0_WIDTH)]
        x0_width: String,
        /// Requested width of the boundary-root enclosure (positive)
        #[arg(long = "L-width", default_value = DEFAULT_L_WIDTH)]
        l_width: String,
        /// Brute-force scan bound for the mod-3 Diophantine check
        #[arg(long, default_value_t = DEFAULT_DIOPH_BOUND)]
        dioph_bound: i64,
        /// Enumeration bound for Pell solutions
        #[arg(long, default_value_t = DEFAULT_PELL_BOUND)]
        pell_bound: u64,
        /// Output format: "json" or "md"
        #[arg(long, default_value = "json")]
        format: String,
        /// Print only the canonical certified payload (timings stripped)
        #[arg(long)]
        payload_only: bool,
    },
    /// Evaluate or localize features of the energy function f
    Functional {
        #[command(subcommand)]
        action: FunctionalAction,
    },
    /// Run the bubble-exclusion chain, or a single stage via --only
    Bubbles {
        /// Energy bound, as "p" or "p/q" (must exceed 7)
        #[arg(long, default_value = DEFAULT_A_BOUND)]
        a_bound: String,
        /// Width of the boundary-root enclosure feeding the area stage
        #[arg(long = "L-width", default_value = DEFAULT_L_WIDTH)]
        l_width: String,
        /// Brute-force scan bound for the mod-3 stage
        #[arg(long, default_value_t = DEFAULT_DIOPH_BOUND)]
        dioph_bound: i64,
        /// Enumeration bound for the Pell stage
        #[arg(long, default_value_t = DEFAULT_PELL_BOUND)]
        pell_bound: u64,
        /// Run only the named rule (e.g. ForcedSymmetry, CaseI_Mod3)
        #[arg(long)]
        only: Option<String>,
    },
    /// Print the curvature energy budgets generated by an energy bound
    Budgets {
        /// Energy bound, as "p" or "p/q" (must exceed 7)
        #[arg(long)]
        a_bound: String,
    },
    /// Diophantine enumeration oracles
    Dioph {
        #[command(subcommand)]
        action: DiophAction,
    },
}

#[derive(Subcommand)]
enum FunctionalAction {
    /// Evaluate f exactly at a nonnegative rational
    Eval {
        /// Evaluation point, as "p" or "p/q"
        #[arg(long)]
        x: String,
    },
    /// Enclose the interior critical point to a requested width
    Critical {
        #[arg(long, default_value = DEFAULT_X0_WIDTH)]
        width: String,
    },
    /// Enclose the boundary solution of f = 8 to a requested width
    Boundary {
        #[arg(long, default_value = DEFAULT_L_WIDTH)]
        width: String,
    },
}

#[derive(Subcommand)]
enum DiophAction {
    /// List the positive solutions of j² − 2ℓ² = −1 up to a bound
    Pell {
        #[arg(long, default_value_t = DEFAULT_PELL_BOUND)]
        bound: u64,
    },
}

fn main() {
    std::process::exit(run());
}

/// Prints to stdout, tolerating a closed pipe (e.g. `extremal-cert ... | head`).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn run() -> i32 {
    // Accepted for interface stability; certification runs sequentially and
    // the thread count never influences any result.
    let _ = std::env::var("EXTREMAL_CERT_THREADS");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32, ConfigError> {
    match command {
        Command::VerifyAll {
            a_bound,
            x0_width,
            l_width,
            dioph_bound,
            pell_bound,
            format,
            payload_only,
        } => {
            let cfg = RunConfig::from_strings(
                &a_bound,
                &x0_width,
                &l_width,
                dioph_bound,
                pell_bound,
                &format,
            )?;
            let report = cmd_verify_all(&cfg);
            if payload_only {
                emit(&report.certified_payload());
            } else {
                match cfg.format {
                    OutputFormat::Json => emit(&report.to_json_string()),
                    OutputFormat::Markdown => emit(&report.to_markdown()),
                }
            }
            Ok(if report.verdict { 0 } else { 1 })
        }
        Command::Functional { action } => {
            let out = match action {
                FunctionalAction::Eval { x } => cmd_functional_eval(&x)?,
                FunctionalAction::Critical { width } => cmd_functional_critical(&width)?,
                FunctionalAction::Boundary { width } => cmd_functional_boundary(&width)?,
            };
            Ok(finish(out))
        }
        Command::Bubbles {
            a_bound,
            l_width,
            dioph_bound,
            pell_bound,
            only,
        } => {
            let cfg = RunConfig::from_strings(
                &a_bound,
                DEFAULT_X0_WIDTH,
                &l_width,
                dioph_bound,
                pell_bound,
                "json",
            )?;
            Ok(finish(cmd_bubbles(&cfg, only.as_deref())?))
        }
        Command::Budgets { a_bound } => Ok(finish(cmd_budgets(&a_bound)?)),
        Command::Dioph { action } => match action {
            DiophAction::Pell { bound } => Ok(finish(cmd_dioph_pell(bound)?)),
        },
    }
}

fn finish(out: CmdOutcome) -> i32 {
    emit(&out.text);
    if out.success {
        0
    } else {
        1
    }
}
