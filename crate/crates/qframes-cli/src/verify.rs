//! The `verify` subcommand: run named checks, emit a deterministic report.

use std::time::Instant;

use serde::Serialize;

use qframes::registry::{all_checks, CheckContext};
use qframes::report::{CheckOutcome, CheckReport, SkipNotice};

use crate::config::{ConfigError, RunConfig};

#[derive(Serialize)]
struct Summary {
    passed: usize,
    failed: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    config_echo: &'a RunConfig,
    reports: Vec<CheckReport>,
    summary: Summary,
}

pub struct VerifyOutcome {
    pub any_failed: bool,
}

pub fn run(config: &RunConfig) -> Result<VerifyOutcome, ConfigError> {
    let params = config.params()?;
    let grid = config.make_grid()?;

    let registry = all_checks();
    let selected: Vec<_> = if config.checks.iter().any(|c| c == "all") {
        registry.iter().collect()
    } else {
        let mut sel = Vec::new();
        for want in &config.checks {
            match registry.iter().find(|c| c.name == *want) {
                Some(c) => sel.push(c),
                None => return Err(ConfigError(format!("unknown check '{want}'"))),
            }
        }
        sel
    };

    let mut ctx = CheckContext::new(params, grid, config.times.clone(), config.seed);
    let mut reports: Vec<CheckReport> = Vec::new();
    let mut skips: Vec<SkipNotice> = Vec::new();
    let mut timings: Vec<(String, f64)> = Vec::new();
    for check in selected {
        let started = Instant::now();
        let outcomes = (check.runner)(&mut ctx)
            .map_err(|e| ConfigError(format!("check {} could not run: {e}", check.name)))?;
        timings.push((check.name.to_string(), started.elapsed().as_secs_f64() * 1e3));
        for outcome in outcomes {
            match outcome {
                CheckOutcome::Report(r) => reports.push(r),
                CheckOutcome::Skipped(s) => skips.push(s),
            }
        }
    }

    // order-stable output: by name, then by the metadata echo
    reports.sort_by(|a, b| {
        (&a.check_name, format!("{:?}", a.metadata))
            .cmp(&(&b.check_name, format!("{:?}", b.metadata)))
    });

    for s in &skips {
        eprintln!("notice: {} skipped: {}", s.check_name, s.reason);
    }

    let summary = Summary {
        passed: reports.iter().filter(|r| r.passed).count(),
        failed: reports.iter().filter(|r| !r.passed).count(),
        skipped: skips.len(),
    };
    let any_failed = summary.failed > 0;

    let body = match config.format.as_str() {
        "csv" => render_csv(config, &reports, &summary),
        _ => {
            let report = Report { config_echo: config, reports, summary };
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };

    match &config.out {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| ConfigError(format!("cannot write {}: {e}", path.display())))?;
            write_timing_sidecar(path, &timings)?;
        }
        None => print!("{body}"),
    }
    Ok(VerifyOutcome { any_failed })
}

fn render_csv(config: &RunConfig, reports: &[CheckReport], summary: &Summary) -> String {
    let mut s = String::new();
    for (k, v) in config.echo_pairs() {
        s.push_str(&format!("# {k} = {v}\n"));
    }
    s.push_str(&format!(
        "# summary: passed = {}, failed = {}, skipped = {}\n",
        summary.passed, summary.failed, summary.skipped
    ));
    s.push_str("check_name,system,residual,tolerance,passed,metadata\n");
    for r in reports {
        let meta = r
            .metadata
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        s.push_str(&format!(
            "{},{},{:.16e},{:.16e},{},{}\n",
            r.check_name, r.system, r.residual, r.tolerance, r.passed, meta
        ));
    }
    s
}

/// Wall-clock data lives next to the report, never inside it, so two runs
/// with the same config produce byte-identical reports.
fn write_timing_sidecar(
    report_path: &std::path::Path,
    timings: &[(String, f64)],
) -> Result<(), ConfigError> {
    let mut sidecar = report_path.as_os_str().to_owned();
    sidecar.push(".timing");
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let mut body = format!("# unix_time = {stamp}\ncheck_name,runtime_ms\n");
    for (name, ms) in timings {
        body.push_str(&format!("{name},{ms:.3}\n"));
    }
    std::fs::write(&sidecar, body).map_err(|e| ConfigError(format!("cannot write sidecar: {e}")))
}
