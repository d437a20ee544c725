//! JSON configuration files with two sections, `physical` and `sweep`.
//!
//! Every key is optional; omitted fields fall back to the unit system of the
//! worked examples (M = hbar = omega0 = 1, sigma = 1/sqrt(2), r = 1, k = 1,
//! eta = 1/2, packet two widths out) and to the default sweep over
//! u in [2 sqrt(2), 20].

use crate::sweep::SweepSpec;
use crate::{CliError, Result};
use dwell_core::dwelltime::{Convention, MIN_SCALED_WIDTH};
use dwell_core::langevin::PhysicalConfig;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::path::Path;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ConfigFile {
    pub physical: PhysicalSection,
    pub sweep: SweepSection,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PhysicalSection {
    #[serde(rename = "M")]
    pub mass: Option<f64>,
    pub hbar: Option<f64>,
    pub omega0: Option<f64>,
    pub eta: Option<f64>,
    pub k: Option<f64>,
    pub sigma: Option<f64>,
    pub z0: Option<f64>,
    pub r: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepSection {
    pub u_min: Option<f64>,
    pub u_max: Option<f64>,
    pub steps: Option<usize>,
    pub convention: Option<Convention>,
    pub include_numeric: Option<bool>,
    pub include_classical: Option<bool>,
    pub gamma: Option<f64>,
    pub v0: Option<f64>,
}

impl ConfigFile {
    /// Validated physical parameters and sweep specification, with defaults
    /// filled in for every omitted field.
    pub fn resolve(&self) -> Result<(PhysicalConfig, SweepSpec)> {
        let sigma = self.physical.sigma.unwrap_or(FRAC_1_SQRT_2);
        let physical = PhysicalConfig {
            mass: self.physical.mass.unwrap_or(1.0),
            hbar: self.physical.hbar.unwrap_or(1.0),
            omega0: self.physical.omega0.unwrap_or(1.0),
            eta: self.physical.eta.unwrap_or(0.5),
            k: self.physical.k.unwrap_or(1.0),
            sigma,
            // Two scaled widths out (zeta = 2), the reference barrier.
            z0: self.physical.z0.unwrap_or(2.0 * SQRT_2 * sigma),
            r: self.physical.r.unwrap_or(1.0),
        }
        .validated()?;
        let sweep = SweepSpec {
            u_min: self.sweep.u_min.unwrap_or(MIN_SCALED_WIDTH),
            u_max: self.sweep.u_max.unwrap_or(20.0),
            steps: self.sweep.steps.unwrap_or(64),
            convention: self.sweep.convention.unwrap_or_default(),
            include_numeric: self.sweep.include_numeric.unwrap_or(false),
            include_classical: self.sweep.include_classical.unwrap_or(false),
            gamma: self.sweep.gamma.unwrap_or(1.0),
            v0: self.sweep.v0.unwrap_or(10.0),
        }
        .validated()?;
        Ok((physical, sweep))
    }
}

/// Parses a configuration file, reporting line and column on failure.
pub fn load_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}
