// SPDX-License-Identifier: Apache-2.0

//! Run configuration. Precedence, lowest first: built-in defaults, a TOML
//! file, the `PERMBIN_MAX_Q` / `PERMBIN_WORKERS` environment variables,
//! command-line flags.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::DEFAULT_MAX_Q;

pub const ENV_MAX_Q: &str = "PERMBIN_MAX_Q";
pub const ENV_WORKERS: &str = "PERMBIN_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub max_q: u64,
    pub workers: usize,
    /// `None` leaves the choice to each command.
    pub output_format: Option<OutputFormat>,
    pub assert_mode: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_q: DEFAULT_MAX_Q,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            output_format: None,
            assert_mode: false,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("config {}: {e}", path.display())))?;
        Config::from_toml(&text)
    }

    /// Applies environment overrides read through `lookup`.
    pub fn with_env<F>(mut self, lookup: F) -> Result<Self>
    where
        F: Fn(&str) -> Option<String>,
    {
        if let Some(v) = lookup(ENV_MAX_Q) {
            self.max_q = parse_number(ENV_MAX_Q, &v)?;
        }
        if let Some(v) = lookup(ENV_WORKERS) {
            self.workers = parse_number(ENV_WORKERS, &v)? as usize;
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_q < 4 {
            return Err(Error::ParameterMismatch(format!("max_q = {} is below 4", self.max_q)));
        }
        if self.workers == 0 {
            return Err(Error::ParameterMismatch("workers must be at least 1".into()));
        }
        Ok(())
    }
}

fn parse_number(name: &str, text: &str) -> Result<u64> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{name}={text:?} is not a non-negative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let cfg = Config::default();
        assert_eq!(cfg.max_q, 1 << 20);
        assert!(cfg.workers >= 1);
        cfg.validate().unwrap();
    }

    #[test]
    fn file_then_env() {
        let cfg = Config::from_toml("max_q = 1000\nworkers = 2\noutput_format = \"csv\"").unwrap();
        assert_eq!((cfg.max_q, cfg.workers, cfg.output_format), (1000, 2, Some(OutputFormat::Csv)));
        let env = |k: &str| (k == ENV_WORKERS).then(|| "5".to_string());
        let cfg = cfg.with_env(env).unwrap();
        assert_eq!((cfg.max_q, cfg.workers), (1000, 5));
    }

    #[test]
    fn rejects_bad_values() {
        assert!(Config::from_toml("max_q = 3").is_err());
        assert!(Config::from_toml("workers = 0").is_err());
        assert!(Config::from_toml("colour = 1").is_err());
        let env = |k: &str| (k == ENV_MAX_Q).then(|| "lots".to_string());
        assert!(Config::default().with_env(env).is_err());
    }
}
