//! Flat `key = value` config files. Keys are the long flag names of the
//! subcommand being run; command-line flags override file values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A parsed config file. Serializing and reparsing yields an equal
/// config (canonical form: sorted keys, one `key = value` per line).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses the flat text form. Blank lines and `#` comments are
    /// skipped; later duplicates of a key win.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (number, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("config line {}: expected `key = value`, got {line:?}", number + 1));
            };
            let key = key.trim();
            if key.is_empty() || key.contains(char::is_whitespace) {
                return Err(format!("config line {}: bad key {key:?}", number + 1));
            }
            entries.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    /// Canonical serialization that reparses to an equal config.
    #[allow(dead_code)]
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            let _ = writeln!(out, "{key} = {value}");
        }
        out
    }
}
