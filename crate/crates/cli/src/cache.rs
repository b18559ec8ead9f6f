//! On-disk memo of orbit counts: a JSON object mapping `"method:n"` to a
//! decimal string.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use quadrics_core::orbits::Method;

use crate::CliError;

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, String>,
    dirty: bool,
}

fn key(method: Method, n: usize) -> String {
    format!("{}:{n}", method.name())
}

impl Cache {
    /// A missing file is an empty cache; a malformed one is a usage error.
    pub fn open(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Cache::default());
        };
        let entries = match fs::read_to_string(path) {
            Ok(text) => serde_json::from_str::<BTreeMap<String, String>>(&text)
                .map_err(|e| CliError::Usage(format!("cache {}: {e}", path.display())))?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(CliError::Usage(format!("cache {}: {e}", path.display()))),
        };
        for (k, v) in &entries {
            if v.parse::<BigUint>().is_err() {
                return Err(CliError::Usage(format!("cache entry {k:?} is not a decimal integer")));
            }
        }
        Ok(Cache {
            path: Some(path.to_path_buf()),
            entries,
            dirty: false,
        })
    }

    pub fn get(&self, method: Method, n: usize) -> Option<BigUint> {
        self.entries.get(&key(method, n)).and_then(|v| v.parse().ok())
    }

    pub fn insert(&mut self, method: Method, n: usize, value: &BigUint) {
        if self.path.is_some() {
            let old = self.entries.insert(key(method, n), value.to_string());
            self.dirty |= old.as_deref() != Some(&value.to_string());
        }
    }

    pub fn save(&self) -> Result<(), CliError> {
        match &self.path {
            Some(path) if self.dirty => {
                let text = serde_json::to_string_pretty(&self.entries).expect("string map serializes");
                fs::write(path, text + "\n")
                    .map_err(|e| CliError::Failure(format!("writing cache {}: {e}", path.display())))
            }
            _ => Ok(()),
        }
    }
}
