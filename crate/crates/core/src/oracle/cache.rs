//! JSON-lines store for census records, keyed by (n, pattern, quantity).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{CanonicalLabel, Pattern};

use super::census::{verify_record, CensusRecord, Quantity};

pub const CACHE_ENV: &str = "RSLAB_CACHE";
const FILE_NAME: &str = "census.jsonl";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o at {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cache line {line} is not a census record: {source}")]
    Parse {
        line: usize,
        source: serde_json::Error,
    },
    #[error("cached record for n={n} {pattern} {quantity} differs from the new one; pass --force to overwrite")]
    Mismatch {
        n: usize,
        pattern: String,
        quantity: Quantity,
    },
    #[error("cached witness {witness} for n={n} {pattern} {quantity} fails verification; pass --force to recompute")]
    BadWitness {
        n: usize,
        pattern: String,
        quantity: Quantity,
        witness: CanonicalLabel,
    },
}

#[derive(Debug, Clone)]
pub struct CensusCache {
    dir: PathBuf,
}

impl CensusCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CensusCache { dir: dir.into() }
    }

    /// The directory named by `RSLAB_CACHE`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).map(Self::new)
    }

    pub fn path(&self) -> PathBuf {
        self.dir.join(FILE_NAME)
    }

    fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CacheError + '_ {
        move |source| CacheError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn load_all(&self) -> Result<Vec<CensusRecord>, CacheError> {
        let path = self.path();
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Self::io_err(&path)(e)),
        };
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str(l).map_err(|source| CacheError::Parse {
                    line: i + 1,
                    source,
                })
            })
            .collect()
    }

    /// Cached record for the key, with its witnesses re-verified.
    pub fn lookup(
        &self,
        n: usize,
        h: &Pattern,
        quantity: Quantity,
    ) -> Result<Option<CensusRecord>, CacheError> {
        let key = h.to_string();
        let Some(rec) = self
            .load_all()?
            .into_iter()
            .find(|r| r.n == n && r.pattern == key && r.quantity == quantity)
        else {
            return Ok(None);
        };
        verify_record(&rec, h).map_err(|witness| CacheError::BadWitness {
            n,
            pattern: key.clone(),
            quantity,
            witness,
        })?;
        Ok(Some(rec))
    }

    /// Writes a record. An existing record under the same key is kept if it
    /// agrees on value and witnesses, and replaced only with `force`.
    pub fn store(&self, record: &CensusRecord, force: bool) -> Result<(), CacheError> {
        let mut all = self.load_all()?;
        let same_key = |r: &CensusRecord| {
            r.n == record.n && r.pattern == record.pattern && r.quantity == record.quantity
        };
        if let Some(old) = all.iter().find(|r| same_key(r)) {
            if old.value == record.value && old.witnesses == record.witnesses {
                return Ok(());
            }
            if !force {
                return Err(CacheError::Mismatch {
                    n: record.n,
                    pattern: record.pattern.clone(),
                    quantity: record.quantity,
                });
            }
        }
        all.retain(|r| !same_key(r));
        all.push(record.clone());
        let path = self.path();
        fs::create_dir_all(&self.dir).map_err(Self::io_err(&self.dir))?;
        let mut out = Vec::new();
        for r in &all {
            serde_json::to_writer(&mut out, r).expect("census records serialize");
            out.push(b'\n');
        }
        let tmp = path.with_extension("jsonl.tmp");
        fs::File::create(&tmp)
            .and_then(|mut f| f.write_all(&out))
            .map_err(Self::io_err(&tmp))?;
        fs::rename(&tmp, &path).map_err(Self::io_err(&path))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PatternSpec;
    use crate::oracle::census::{sat_number, CensusValue};

    #[test]
    fn roundtrip_and_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CensusCache::new(dir.path());
        let h = "P4".parse::<PatternSpec>().unwrap().compile().unwrap();
        assert!(cache.lookup(5, &h, Quantity::Sat).unwrap().is_none());
        let rec = sat_number(5, &h).unwrap();
        cache.store(&rec, false).unwrap();
        assert_eq!(
            cache.lookup(5, &h, Quantity::Sat).unwrap(),
            Some(rec.clone())
        );
        cache.store(&rec, false).unwrap();

        let mut other = rec.clone();
        other.value = CensusValue::Exact { edges: 99 };
        assert!(matches!(
            cache.store(&other, false),
            Err(CacheError::Mismatch { .. })
        ));
        cache.store(&other, true).unwrap();
        assert!(matches!(
            cache.lookup(5, &h, Quantity::Sat),
            Err(CacheError::BadWitness { .. })
        ));
        assert_eq!(cache.load_all().unwrap().len(), 1);
    }
}
