//! Unit conversions.
//!
//! Lengths are nanometres internally and gain coefficients are cm⁻¹ at every
//! interface. Every conversion factor in the crate lives here.

use std::fmt;
use std::str::FromStr;

pub const NM_PER_MM: f64 = 1.0e6;
pub const NM_PER_UM: f64 = 1.0e3;
pub const NM_PER_CM: f64 = 1.0e7;

/// cm⁻¹ → nm⁻¹.
pub fn per_cm_to_per_nm(g: f64) -> f64 {
    g / NM_PER_CM
}

/// nm⁻¹ → cm⁻¹.
pub fn per_nm_to_per_cm(g: f64) -> f64 {
    g * NM_PER_CM
}

pub fn mm_to_nm(mm: f64) -> f64 {
    mm * NM_PER_MM
}

pub fn nm_to_mm(nm: f64) -> f64 {
    nm / NM_PER_MM
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LengthParseError {
    #[error("length `{0}` has no unit; use a suffix mm, um or nm")]
    MissingUnit(String),
    #[error("unknown length unit in `{0}` (expected mm, um or nm)")]
    UnknownUnit(String),
    #[error("invalid number in length `{0}`")]
    InvalidNumber(String),
    #[error("length `{0}` must be positive and finite")]
    NonPositive(String),
}

/// A positive length, stored in nanometres.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Length {
    nm: f64,
}

impl Length {
    pub fn from_nm(nm: f64) -> Self {
        Self { nm }
    }

    pub fn from_mm(mm: f64) -> Self {
        Self { nm: mm_to_nm(mm) }
    }

    pub fn from_um(um: f64) -> Self {
        Self { nm: um * NM_PER_UM }
    }

    pub fn nm(self) -> f64 {
        self.nm
    }

    pub fn mm(self) -> f64 {
        nm_to_mm(self.nm)
    }
}

impl FromStr for Length {
    type Err = LengthParseError;

    /// Accepts `3.300mm`, `150um`, `150µm`, `549nm`; bare numbers are rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        const UNITS: [(&str, f64); 5] = [
            ("mm", NM_PER_MM),
            ("um", NM_PER_UM),
            ("µm", NM_PER_UM),
            ("μm", NM_PER_UM),
            ("nm", 1.0),
        ];
        let Some((num, factor)) = UNITS
            .iter()
            .find_map(|(suffix, factor)| t.strip_suffix(suffix).map(|n| (n, *factor)))
        else {
            return Err(if t.parse::<f64>().is_ok() {
                LengthParseError::MissingUnit(s.to_string())
            } else {
                LengthParseError::UnknownUnit(s.to_string())
            });
        };
        let value: f64 = num
            .trim()
            .parse()
            .map_err(|_| LengthParseError::InvalidNumber(s.to_string()))?;
        let nm = value * factor;
        if !(nm.is_finite() && nm > 0.0) {
            return Err(LengthParseError::NonPositive(s.to_string()));
        }
        Ok(Self { nm })
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}nm", self.nm)
    }
}
