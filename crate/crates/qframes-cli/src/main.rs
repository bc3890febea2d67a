//! Command-line front end for the moving-frame check suite.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed,
//! 2 configuration could not be parsed.

mod config;
mod tabulate;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::RunConfig;

#[derive(Parser)]
#[command(name = "qframes", version, about = "verify and tabulate moving-frame quantum identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct ConfigArgs {
    /// flat key = value file mirroring the flags; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// free | harmonic
    #[arg(long)]
    system: Option<String>,
    /// particle mass
    #[arg(long)]
    m: Option<f64>,
    /// oscillator frequency (harmonic only)
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long)]
    hbar: Option<f64>,
    /// qmin,qmax,n
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// comma-separated times
    #[arg(long, allow_hyphen_values = true)]
    times: Option<String>,
    /// comma-separated check names, or "all"
    #[arg(long)]
    checks: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// json | csv
    #[arg(long)]
    format: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run named checks and write a machine-readable report
    Verify(ConfigArgs),
    /// Emit plot-ready CSV for kernels, moving states, or the action
    Tabulate {
        /// kernel | moving_number | moving_coherent | moving_momentum | action
        what: String,
        #[command(flatten)]
        args: ConfigArgs,
    },
    /// List every registered check with its identity
    ListChecks {
        /// only checks from this module (evolution, kernels, hamilton_jacobi)
        #[arg(long)]
        module: Option<String>,
    },
}

fn resolve(args: &ConfigArgs) -> Result<RunConfig, config::ConfigError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &args.config {
        cfg.apply_file(path)?;
    }
    if let Some(v) = &args.system {
        cfg.set("system", v)?;
    }
    if let Some(v) = args.m {
        cfg.set("m", &v.to_string())?;
    }
    if let Some(v) = args.omega {
        cfg.set("omega", &v.to_string())?;
    }
    if let Some(v) = args.hbar {
        cfg.set("hbar", &v.to_string())?;
    }
    if let Some(v) = &args.grid {
        cfg.set("grid", v)?;
    }
    if let Some(v) = &args.times {
        cfg.set("times", v)?;
    }
    if let Some(v) = &args.checks {
        cfg.set("checks", v)?;
    }
    if let Some(v) = args.seed {
        cfg.set("seed", &v.to_string())?;
    }
    if let Some(v) = &args.out {
        cfg.out = Some(v.clone());
    }
    if let Some(v) = &args.format {
        cfg.set("format", v)?;
    }
    Ok(cfg)
}

fn list_checks(module: Option<&str>) {
    let checks = qframes::registry::all_checks();
    let mut shown = 0;
    for c in &checks {
        if module.is_none_or(|m| m == c.module) {
            println!("{:<45} [{}] {}", c.name, c.module, c.anchor);
            shown += 1;
        }
    }
    if shown == 0 {
        if let Some(m) = module {
            eprintln!("warning: no checks in module '{m}'");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::ListChecks { module } => {
            list_checks(module.as_deref());
            ExitCode::SUCCESS
        }
        Cmd::Verify(args) => match resolve(&args).and_then(|cfg| verify::run(&cfg)) {
            Ok(outcome) if outcome.any_failed => ExitCode::from(1),
            Ok(_) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Cmd::Tabulate { what, args } => {
            match resolve(&args).and_then(|cfg| tabulate::run(&cfg, &what)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
