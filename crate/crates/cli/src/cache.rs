//! On-disk JSON cache keyed by (library version, operation, parameters).

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    version: String,
    op: String,
    params: String,
    result: T,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self, CliError> {
        fs::create_dir_all(dir)?;
        Ok(Self { dir: dir.to_path_buf() })
    }

    fn path(&self, op: &str, params: &str) -> PathBuf {
        self.dir.join(format!("ghost5-{}-{op}-{params}.json", ghost5::VERSION))
    }

    /// Cached value for the key, or `compute()` stored under it. Entries that
    /// fail to parse or carry a different key are recomputed and overwritten.
    pub fn get_or_compute<T, F>(&self, op: &str, params: &str, compute: F) -> Result<T, CliError>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, CliError>,
    {
        let path = self.path(op, params);
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(env) = serde_json::from_slice::<Envelope<T>>(&bytes) {
                if env.version == ghost5::VERSION && env.op == op && env.params == params {
                    return Ok(env.result);
                }
            }
        }
        let result = compute()?;
        let env = Envelope { version: ghost5::VERSION.to_string(), op: op.to_string(), params: params.to_string(), result };
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&env)?)?;
        fs::rename(&tmp, &path)?;
        Ok(env.result)
    }
}
