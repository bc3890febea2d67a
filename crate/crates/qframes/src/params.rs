//! Physical parameters and representation labels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The system under study. The oscillator carries its frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum System {
    Free,
    Harmonic { omega: f64 },
}

/// Which variable the second slot of a kernel or generating function refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Representation {
    /// Transformed position Q.
    PositionQ,
    /// Transformed momentum P.
    MomentumP,
}

/// Mass, ħ and the system tag. Natural units `m = ħ = ω = 1` are the defaults.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    pub mass: f64,
    pub hbar: f64,
    pub system: System,
}

impl SystemParams {
    pub fn free(mass: f64, hbar: f64) -> Result<Self> {
        Self::validate(mass, hbar, None)?;
        Ok(Self {
            mass,
            hbar,
            system: System::Free,
        })
    }

    pub fn harmonic(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        Self::validate(mass, hbar, Some(omega))?;
        Ok(Self {
            mass,
            hbar,
            system: System::Harmonic { omega },
        })
    }

    fn validate(mass: f64, hbar: f64, omega: Option<f64>) -> Result<()> {
        if !(mass > 0.0) {
            return Err(Error::InvalidParams(format!("mass must be positive, got {mass}")));
        }
        if !(hbar > 0.0) {
            return Err(Error::InvalidParams(format!("hbar must be positive, got {hbar}")));
        }
        if let Some(w) = omega {
            if !(w > 0.0) {
                return Err(Error::InvalidParams(format!("omega must be positive, got {w}")));
            }
        }
        Ok(())
    }

    pub fn omega(&self) -> Option<f64> {
        match self.system {
            System::Free => None,
            System::Harmonic { omega } => Some(omega),
        }
    }

    pub fn is_harmonic(&self) -> bool {
        matches!(self.system, System::Harmonic { .. })
    }

    /// Potential energy V(q).
    pub fn potential(&self, q: f64) -> f64 {
        match self.system {
            System::Free => 0.0,
            System::Harmonic { omega } => 0.5 * self.mass * omega * omega * q * q,
        }
    }

    /// Name used in reports and file headers.
    pub fn system_name(&self) -> &'static str {
        match self.system {
            System::Free => "free",
            System::Harmonic { .. } => "harmonic",
        }
    }
}
