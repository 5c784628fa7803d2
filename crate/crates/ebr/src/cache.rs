//! File cache of computed documents, keyed by a digest of the group's
//! element list. Unreadable or mismatched entries are reported and
//! recomputed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use ebr_core::Group;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    SubgroupTable,
    Multiplier,
    ExtTable,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::SubgroupTable => "subgroup-table",
            Kind::Multiplier => "multiplier",
            Kind::ExtTable => "ext-table",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CacheEntry<T> {
    kind: String,
    group_hash: String,
    key: String,
    version: String,
    payload: T,
}

#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

pub fn group_hash(g: &Group) -> String {
    let mut h = Sha256::new();
    h.update((g.degree() as u64).to_le_bytes());
    for p in g.elements() {
        for &i in p.images() {
            h.update(i.to_le_bytes());
        }
    }
    format!("{:x}", h.finalize())
}

impl Cache {
    pub fn disabled() -> Cache {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: Some(dir.into()) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, kind: Kind, hash: &str, key: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let name = if key.is_empty() {
            format!("{}-{}.json", kind.name(), &hash[..32])
        } else {
            let mut h = Sha256::new();
            h.update(key.as_bytes());
            format!("{}-{}-{:.16x}.json", kind.name(), &hash[..32], h.finalize())
        };
        Some(dir.join(name))
    }

    /// Cached payload for `(kind, group, key)`, computing and storing it on a miss.
    pub fn get_or_compute<T, E>(
        &self,
        kind: Kind,
        group: &Group,
        key: &str,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        let hash = group_hash(group);
        let Some(path) = self.path(kind, &hash, key) else {
            return compute();
        };
        if path.exists() {
            match self.read::<T>(&path, kind, &hash, key) {
                Ok(payload) => return Ok(payload),
                Err(why) => eprintln!("warning: discarding cache entry {}: {why}; recomputing", path.display()),
            }
        }
        let payload = compute()?;
        let entry = CacheEntry {
            kind: kind.name().into(),
            group_hash: hash,
            key: key.into(),
            version: TOOLKIT_VERSION.into(),
            payload,
        };
        if let Err(e) = write_atomically(&path, &serde_json::to_vec(&entry).expect("serialisable")) {
            eprintln!("warning: could not write cache entry {}: {e}", path.display());
        }
        Ok(entry.payload)
    }

    fn read<T: DeserializeOwned>(&self, path: &Path, kind: Kind, hash: &str, key: &str) -> Result<T, String> {
        let bytes = fs::read(path).map_err(|e| e.to_string())?;
        let entry: CacheEntry<T> = serde_json::from_slice(&bytes).map_err(|e| format!("corrupt entry ({e})"))?;
        if entry.kind != kind.name() || entry.group_hash != hash || entry.key != key {
            return Err("entry belongs to a different computation".into());
        }
        if entry.version != TOOLKIT_VERSION {
            return Err(format!("written by version {}", entry.version));
        }
        Ok(entry.payload)
    }
}

fn write_atomically(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ebr_core::group_from_spec;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let g = group_from_spec("S3").unwrap();
        let mut calls = 0;
        let mut get = |cache: &Cache| {
            cache
                .get_or_compute(Kind::Multiplier, &g, "x", || {
                    calls += 1;
                    Ok::<_, ()>(vec![2u32])
                })
                .unwrap()
        };
        assert_eq!(get(&cache), [2]);
        assert_eq!(get(&cache), [2]);
        let entry = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
        fs::write(&entry, b"{ not json").unwrap();
        assert_eq!(get(&cache), [2]);
        assert_eq!(get(&Cache::disabled()), [2]);
        assert_eq!(calls, 3);
    }

    #[test]
    fn hashes_distinguish_groups() {
        let a = group_hash(&group_from_spec("S3").unwrap());
        let b = group_hash(&group_from_spec("C6").unwrap());
        assert_ne!(a, b);
        assert_eq!(a, group_hash(&group_from_spec("perm:3:(1 2),(1 2 3)").unwrap()));
    }
}
