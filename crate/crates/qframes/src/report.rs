//! Check results in a machine-readable form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::params::SystemParams;

/// One named residual with its tolerance and pass/fail verdict.
///
/// `runtime_ms` is measured wall time; it is excluded from serialization so
/// that reports are byte-identical across runs, and surfaced separately in
/// the CLI's timing sidecar.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub system: String,
    pub params: SystemParams,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip)]
    pub runtime_ms: f64,
    pub metadata: BTreeMap<String, String>,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, params: &SystemParams, residual: f64, tolerance: f64) -> Self {
        Self {
            check_name: check_name.into(),
            system: params.system_name().to_string(),
            params: *params,
            residual,
            tolerance,
            passed: residual <= tolerance,
            runtime_ms: 0.0,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }
}

/// A check skipped at a particular time (caustic proximity, inapplicable
/// system) rather than run and failed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SkipNotice {
    pub check_name: String,
    pub reason: String,
}

/// Outcome stream produced by a registered check.
#[derive(Debug, Clone)]
pub enum CheckOutcome {
    Report(CheckReport),
    Skipped(SkipNotice),
}

impl CheckOutcome {
    pub fn skipped(check_name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckOutcome::Skipped(SkipNotice {
            check_name: check_name.into(),
            reason: reason.into(),
        })
    }
}
