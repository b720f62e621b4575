use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use super::framed::{colored_W, framed_composite, framed_full_H, normalized_P};
use super::knot::{FramedKnot, Knot};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::exactalg::QFraction;
use crate::ENGINE_VERSION;

/// Which quantity a cache entry holds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Framing-independent `W_λ`.
    Colored,
    /// Framed `ℋ_{[λ,μ]}`.
    Framed,
    /// Normalized framed `𝒫_{[λ,μ]}`.
    Normalized,
    /// Framed composite `𝒞_λ` (unknot only).
    Composite,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct InvariantKey {
    pub knot: Knot,
    pub color: Partition,
    #[serde(default)]
    pub reverse: Partition,
    #[serde(default)]
    pub framing: i64,
    pub flavor: Flavor,
}

impl InvariantKey {
    /// Evaluates the invariant this key names.
    pub fn compute(&self) -> Result<QFraction> {
        let fk = FramedKnot::new(self.knot, self.framing);
        match self.flavor {
            Flavor::Colored if self.reverse.is_empty() => colored_W(self.knot, &self.color),
            Flavor::Colored => Err(Error::UnsupportedFlavor("colored W takes no reverse color".into())),
            Flavor::Framed => framed_full_H(&fk, &self.color, &self.reverse),
            Flavor::Normalized => normalized_P(&fk, &self.color, &self.reverse).map(QFraction::from),
            Flavor::Composite if self.reverse.is_empty() => framed_composite(&fk, &self.color),
            Flavor::Composite => Err(Error::UnsupportedFlavor("composite takes no reverse color".into())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: InvariantKey,
    value: QFraction,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    engine_version: String,
    entries: Vec<Entry>,
}

/// Persistent map from invariant keys to exact values.
///
/// Reads may run concurrently; writes take an exclusive lock.
#[derive(Debug, Default)]
pub struct InvariantCache {
    entries: RwLock<BTreeMap<InvariantKey, QFraction>>,
}

impl InvariantCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &InvariantKey) -> Option<QFraction> {
        self.entries.read().expect("cache lock poisoned").get(key).cloned()
    }

    pub fn insert(&self, key: InvariantKey, value: QFraction) {
        self.entries.write().expect("cache lock poisoned").insert(key, value);
    }

    pub fn clear(&self) {
        self.entries.write().expect("cache lock poisoned").clear();
    }

    pub fn keys(&self) -> Vec<InvariantKey> {
        self.entries.read().expect("cache lock poisoned").keys().cloned().collect()
    }

    /// Cached value, computing and storing it on a miss.
    pub fn get_or_compute(&self, key: &InvariantKey) -> Result<QFraction> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = key.compute()?;
        self.insert(key.clone(), v.clone());
        Ok(v)
    }

    pub fn to_json(&self) -> Result<String> {
        let entries = self
            .entries
            .read()
            .expect("cache lock poisoned")
            .iter()
            .map(|(k, v)| Entry { key: k.clone(), value: v.clone() })
            .collect();
        let file = CacheFile { engine_version: ENGINE_VERSION.to_string(), entries };
        serde_json::to_string_pretty(&file).map_err(|e| Error::Cache(e.to_string()))
    }

    /// Parses a cache document, refusing other engine versions.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CacheFile = serde_json::from_str(text).map_err(|e| Error::Cache(e.to_string()))?;
        if file.engine_version != ENGINE_VERSION {
            return Err(Error::Cache(format!(
                "cache written by `{}`, this is `{ENGINE_VERSION}`",
                file.engine_version
            )));
        }
        let map = file.entries.into_iter().map(|e| (e.key, e.value)).collect();
        Ok(InvariantCache { entries: RwLock::new(map) })
    }

    /// Loads a cache file; a missing file gives an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        match fs::read_to_string(path) {
            Ok(text) => Self::from_json(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::new()),
            Err(e) => Err(Error::Cache(format!("{}: {e}", path.display()))),
        }
    }

    /// Writes the cache atomically (temporary file, then rename).
    pub fn save(&self, path: &Path) -> Result<()> {
        let text = self.to_json()?;
        let tmp = path.with_extension("tmp");
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(io)?;
        }
        fs::write(&tmp, text).map_err(io)?;
        fs::rename(&tmp, path).map_err(io)
    }
}
