//! Run configuration: defaults, flat key=value config files, flag overrides.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;

use qframes::hilbert::Grid;
use qframes::SystemParams;

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub system: String,
    pub m: f64,
    pub omega: f64,
    pub hbar: f64,
    pub grid: (f64, f64, usize),
    pub times: Vec<f64>,
    pub checks: Vec<String>,
    pub seed: u64,
    pub format: String,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            system: "free".into(),
            m: 1.0,
            omega: 1.0,
            hbar: 1.0,
            grid: (-25.0, 25.0, 1024),
            times: vec![0.3, 0.7],
            checks: vec!["all".into()],
            seed: 42,
            format: "json".into(),
            out: None,
        }
    }
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config error: {}", self.0)
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64, ConfigError> {
    v.trim()
        .parse()
        .map_err(|_| ConfigError(format!("{key}: expected a number, got '{v}'")))
}

fn parse_list(v: &str) -> Vec<String> {
    v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn parse_times(v: &str) -> Result<Vec<f64>, ConfigError> {
    parse_list(v).iter().map(|s| parse_f64("times", s)).collect()
}

fn parse_grid(v: &str) -> Result<(f64, f64, usize), ConfigError> {
    let parts = parse_list(v);
    if parts.len() != 3 {
        return Err(ConfigError(format!("grid: expected qmin,qmax,n, got '{v}'")));
    }
    let q_min = parse_f64("grid", &parts[0])?;
    let q_max = parse_f64("grid", &parts[1])?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| ConfigError(format!("grid: point count '{}' is not an integer", parts[2])))?;
    Ok((q_min, q_max, n))
}

impl RunConfig {
    /// Apply one key=value assignment (from file or flag).
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key {
            "system" => {
                let v = value.trim().to_lowercase();
                if v != "free" && v != "harmonic" {
                    return Err(ConfigError(format!(
                        "system must be 'free' or 'harmonic', got '{value}'"
                    )));
                }
                self.system = v;
            }
            "m" => self.m = parse_f64(key, value)?,
            "omega" => self.omega = parse_f64(key, value)?,
            "hbar" => self.hbar = parse_f64(key, value)?,
            "grid" => self.grid = parse_grid(value)?,
            "times" => self.times = parse_times(value)?,
            "checks" => self.checks = parse_list(value),
            "seed" => {
                self.seed = value
                    .trim()
                    .parse()
                    .map_err(|_| ConfigError(format!("seed: '{value}' is not an integer")))?
            }
            "format" => {
                let v = value.trim().to_lowercase();
                if v != "json" && v != "csv" {
                    return Err(ConfigError(format!("format must be json or csv, got '{value}'")));
                }
                self.format = v;
            }
            "out" => self.out = Some(PathBuf::from(value.trim())),
            other => return Err(ConfigError(format!("unknown config key '{other}'"))),
        }
        Ok(())
    }

    /// Load `key = value` lines from a file; '#' starts a comment.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError(format!("line {}: expected key = value", lineno + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn params(&self) -> Result<SystemParams, ConfigError> {
        let p = if self.system == "harmonic" {
            SystemParams::harmonic(self.m, self.omega, self.hbar)
        } else {
            SystemParams::free(self.m, self.hbar)
        };
        p.map_err(|e| ConfigError(e.to_string()))
    }

    pub fn make_grid(&self) -> Result<Grid, ConfigError> {
        Grid::new(self.grid.0, self.grid.1, self.grid.2).map_err(|e| ConfigError(e.to_string()))
    }

    /// Stable key-value echo used in CSV comment headers.
    pub fn echo_pairs(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("system".into(), self.system.clone());
        m.insert("m".into(), format!("{:.16e}", self.m));
        m.insert("omega".into(), format!("{:.16e}", self.omega));
        m.insert("hbar".into(), format!("{:.16e}", self.hbar));
        m.insert(
            "grid".into(),
            format!("{},{},{}", self.grid.0, self.grid.1, self.grid.2),
        );
        m.insert(
            "times".into(),
            self.times.iter().map(|t| format!("{t}")).collect::<Vec<_>>().join(","),
        );
        m.insert("seed".into(), self.seed.to_string());
        m
    }
}
