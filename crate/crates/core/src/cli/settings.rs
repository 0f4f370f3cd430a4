use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CliError;

/// Default file name looked up in the working directory.
pub const SETTINGS_FILE: &str = "gmdeg.toml";

/// Pinned inputs of the `paper` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PaperSettings {
    pub prime: u32,
    pub seed: u64,
    pub trials: u64,
    pub exact: bool,
}

impl Default for PaperSettings {
    fn default() -> Self {
        PaperSettings {
            prime: 32003,
            seed: 1,
            trials: 200_000,
            exact: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Settings {
    pub paper: PaperSettings,
}

impl Settings {
    pub fn parse(text: &str) -> Result<Settings, CliError> {
        toml::from_str(text).map_err(|e| CliError::Settings(e.to_string()))
    }

    /// Reads `path`, or `gmdeg.toml` in the working directory when present,
    /// or falls back to the built-in defaults.
    pub fn load(path: Option<&Path>) -> Result<(Settings, Option<PathBuf>), CliError> {
        let path = match path {
            Some(p) => p.to_path_buf(),
            None => {
                let p = PathBuf::from(SETTINGS_FILE);
                if !p.exists() {
                    return Ok((Settings::default(), None));
                }
                p
            }
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Ok((Settings::parse(&text)?, Some(path)))
    }
}
