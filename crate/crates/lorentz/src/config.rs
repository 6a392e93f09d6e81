use std::path::Path;

use lorentz_core::Tolerance;
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;
use crate::suite::Suite;

/// Parameters of one randomized suite run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub suite_name: String,
    pub trials: u64,
    pub seed: u64,
    /// First trial offset; a failure at offset `k` replays with `start_offset = k, trials = 1`.
    pub start_offset: u64,
    pub max_atoms: usize,
    pub value_range: (f64, f64),
    pub mass_range: (f64, f64),
    pub grid_size_range: (usize, usize),
    pub tolerance: Tolerance,
    pub oracle_subdivisions: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite_name: String::from("eq2-identity"),
            trials: 1000,
            seed: 0,
            start_offset: 0,
            max_atoms: 12,
            value_range: (1e-3, 1e3),
            mass_range: (1e-3, 1e3),
            grid_size_range: (2, 6),
            tolerance: Tolerance::INEQUALITY,
            oracle_subdivisions: 100_000,
        }
    }
}

impl SuiteConfig {
    pub fn new(suite: Suite, trials: u64, seed: u64) -> Self {
        SuiteConfig { suite_name: suite.name().to_string(), trials, seed, ..Default::default() }
    }

    /// Reads a TOML file; absent keys take their defaults.
    pub fn from_toml_file(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        let cfg: SuiteConfig =
            toml::from_str(&text).map_err(|e| HarnessError::Config(format!("{}: {e}", path.display())))?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<Suite, HarnessError> {
        let suite = self.suite_name.parse::<Suite>()?;
        let bad = |what: &str| Err(HarnessError::Config(what.to_string()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.max_atoms == 0 {
            return bad("max_atoms must be at least 1");
        }
        for (name, (lo, hi)) in [("value_range", self.value_range), ("mass_range", self.mass_range)] {
            if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
                return bad(&format!("{name} must satisfy 0 < low <= high < inf"));
            }
        }
        let (lo, hi) = self.grid_size_range;
        if !(1 <= lo && lo <= hi) {
            return bad("grid_size_range must satisfy 1 <= low <= high");
        }
        if self.oracle_subdivisions == 0 {
            return bad("oracle_subdivisions must be at least 1");
        }
        if self.start_offset.checked_add(self.trials).is_none() {
            return bad("start_offset + trials overflows");
        }
        Ok(suite)
    }
}
