//! Content-addressed result store.
//!
//! Each record lives at `<dir>/<sha256(key)>.json`. A record whose stored
//! digest does not match its payload, whose key differs from the request,
//! or whose engine version differs from this build is treated as a miss.

use super::CliError;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CacheRecord {
    pub key: String,
    pub engine_version: String,
    pub digest: String,
    pub value: String,
}

fn sha_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl CacheRecord {
    pub fn new(key: &str, value: String) -> CacheRecord {
        CacheRecord { key: key.to_string(), engine_version: ENGINE_VERSION.to_string(), digest: sha_hex(value.as_bytes()), value }
    }

    pub fn is_valid(&self) -> bool {
        self.engine_version == ENGINE_VERSION && self.digest == sha_hex(self.value.as_bytes())
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GcReport {
    pub kept: usize,
    pub removed: usize,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Cache, CliError> {
        fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("cannot create cache {}: {e}", dir.display())))?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", sha_hex(key.as_bytes())))
    }

    fn read(path: &Path) -> Option<CacheRecord> {
        let bytes = fs::read(path).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    pub fn get(&self, key: &str) -> Option<String> {
        let rec = Self::read(&self.path_for(key))?;
        (rec.key == key && rec.is_valid()).then_some(rec.value)
    }

    /// Write-then-rename, so readers never observe a partial record.
    pub fn put(&self, key: &str, value: &str) -> Result<(), CliError> {
        let rec = CacheRecord::new(key, value.to_string());
        let body = serde_json::to_vec(&rec).expect("record serializes");
        let io = |e: std::io::Error| CliError::Io(format!("cache write failed: {e}"));
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(&body).map_err(io)?;
        tmp.persist(self.path_for(key)).map_err(|e| io(e.error))?;
        Ok(())
    }

    /// Cached value for `key`, computing and storing it on a miss.
    pub fn get_or_put(&self, key: &str, compute: impl FnOnce() -> Result<String, CliError>) -> Result<String, CliError> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = compute()?;
        self.put(key, &v)?;
        Ok(v)
    }

    fn entries(&self) -> Vec<PathBuf> {
        let Ok(rd) = fs::read_dir(&self.dir) else { return Vec::new() };
        let mut out: Vec<PathBuf> = rd.filter_map(|e| e.ok()).map(|e| e.path()).filter(|p| p.extension().is_some_and(|x| x == "json")).collect();
        out.sort();
        out
    }

    /// Keys of all valid records, sorted.
    pub fn list(&self) -> Vec<String> {
        let mut keys: Vec<String> = self.entries().iter().filter_map(|p| Self::read(p)).filter(|r| r.is_valid()).map(|r| r.key).collect();
        keys.sort();
        keys
    }

    /// Remove invalid, stale or misplaced records; with `all`, remove
    /// everything.
    pub fn gc(&self, all: bool) -> Result<GcReport, CliError> {
        let mut report = GcReport::default();
        for path in self.entries() {
            let keep = !all && Self::read(&path).is_some_and(|r| r.is_valid() && self.path_for(&r.key) == path);
            if keep {
                report.kept += 1;
            } else {
                fs::remove_file(&path).map_err(|e| CliError::Io(format!("cannot remove {}: {e}", path.display())))?;
                report.removed += 1;
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        assert_eq!(cache.get("hurwitz g=0 mu=(2)"), None);
        cache.put("hurwitz g=0 mu=(2)", "1/2*t").unwrap();
        assert_eq!(cache.get("hurwitz g=0 mu=(2)").as_deref(), Some("1/2*t"));
        assert_eq!(cache.list(), vec!["hurwitz g=0 mu=(2)".to_string()]);

        let path = cache.path_for("hurwitz g=0 mu=(2)");
        let mut rec: CacheRecord = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
        rec.value = "t".into();
        fs::write(&path, serde_json::to_vec(&rec).unwrap()).unwrap();
        assert_eq!(cache.get("hurwitz g=0 mu=(2)"), None);
        fs::write(dir.path().join("junk.json"), b"{").unwrap();
        assert_eq!(cache.gc(false).unwrap(), GcReport { kept: 0, removed: 2 });
    }
}
