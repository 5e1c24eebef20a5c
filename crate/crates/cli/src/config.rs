use std::collections::BTreeMap;
use std::path::Path;

use braid_core::conjugacy::DEFAULT_USS_CAP;
use braid_core::diagram::DEFAULT_SKEIN_BUDGET;
use clap::ValueEnum;
use serde::Deserialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub format: Format,
    pub uss_cap: usize,
    pub skein_budget: usize,
    /// Display names for polynomial variables, e.g. `{"l": "a", "m": "z"}`.
    pub variables: BTreeMap<String, String>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig { format: Format::Text, uss_cap: DEFAULT_USS_CAP, skein_budget: DEFAULT_SKEIN_BUDGET, variables: BTreeMap::new() }
    }
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.uss_cap == 0 || self.skein_budget == 0 {
            return Err("resource caps must be positive".into());
        }
        for name in self.variables.values() {
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(format!("bad variable name `{name}`"));
            }
        }
        Ok(())
    }
}
