use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use twin_core::oracle::Budget;

use crate::error::{config_error, Result};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "TWIN_OUT_DIR";
pub const DEFAULT_OUT_DIR: &str = "twin-out";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Guarantees,
    Tables,
    Twinbound,
    LcsTail,
    Blockclaims,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Guarantees, Suite::Tables, Suite::Twinbound, Suite::LcsTail, Suite::Blockclaims];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Guarantees => "guarantees",
            Suite::Tables => "tables",
            Suite::Twinbound => "twinbound",
            Suite::LcsTail => "lcs-tail",
            Suite::Blockclaims => "blockclaims",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budgets {
    /// Memo entries per maximum-twin search.
    pub max_states: usize,
    /// Objects per exhaustive minimum.
    pub max_enumerations: u64,
    /// Soft limit; cases not started by then are recorded as resource errors.
    pub wall_clock_secs: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        let b = Budget::default();
        Self { max_states: b.max_states, max_enumerations: b.max_enumerations as u64, wall_clock_secs: 600 }
    }
}

impl Budgets {
    pub fn oracle(&self) -> Budget {
        Budget { max_states: self.max_states, max_enumerations: self.max_enumerations as u128 }
    }
}

/// One suite run. `ns`, `rs` and `ms` form a cartesian grid; each suite
/// documents which lists it reads.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub suite: Suite,
    #[serde(default)]
    pub ns: Vec<usize>,
    #[serde(default)]
    pub rs: Vec<u32>,
    #[serde(default)]
    pub ms: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    #[serde(default)]
    pub budgets: Budgets,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
}

impl SuiteConfig {
    /// The grid each suite runs when no config file is given.
    pub fn defaults(suite: Suite) -> Self {
        let (ns, rs, ms, samples) = match suite {
            Suite::Guarantees => (vec![40, 50, 60], vec![2, 3], vec![], 100),
            Suite::Tables => ((2..=6).collect(), vec![1, 2], vec![], 1),
            Suite::Twinbound => (vec![], vec![4], vec![4], 50),
            Suite::LcsTail => (vec![], vec![1, 100], vec![], 200),
            Suite::Blockclaims => (vec![], vec![2], vec![1, 2, 3], 1),
        };
        Self { suite, ns, rs, ms, samples, seed: 0x7717_2024, budgets: Budgets::default(), out_dir: None }
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let config: SuiteConfig = serde_json::from_str(&text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return config_error("samples", "must be positive");
        }
        if self.budgets.max_states == 0 {
            return config_error("budgets.max_states", "must be positive");
        }
        if self.budgets.max_enumerations == 0 {
            return config_error("budgets.max_enumerations", "must be positive");
        }
        if self.budgets.wall_clock_secs == 0 {
            return config_error("budgets.wall_clock_secs", "must be positive");
        }
        let needs_ns = matches!(self.suite, Suite::Guarantees | Suite::Tables);
        let needs_ms = matches!(self.suite, Suite::Twinbound | Suite::Blockclaims);
        if needs_ns && self.ns.is_empty() {
            return config_error("ns", format!("the {} suite needs at least one n", self.suite.name()));
        }
        if needs_ms && self.ms.is_empty() {
            return config_error("ms", format!("the {} suite needs at least one m", self.suite.name()));
        }
        if self.rs.is_empty() {
            return config_error("rs", "needs at least one value");
        }
        if self.rs.contains(&0) {
            return config_error("rs", "values must be positive");
        }
        if self.ns.contains(&0) {
            return config_error("ns", "values must be positive");
        }
        if self.ms.contains(&0) {
            return config_error("ms", "values must be positive");
        }
        Ok(())
    }

    /// `--out`, then the config, then the environment, then `twin-out`.
    pub fn resolve_out_dir(&self, flag: Option<&Path>) -> PathBuf {
        if let Some(dir) = flag {
            return dir.to_path_buf();
        }
        if let Some(dir) = &self.out_dir {
            return dir.clone();
        }
        std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR))
    }
}
