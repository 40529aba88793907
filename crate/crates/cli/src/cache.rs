//! On-disk interval cache.
//!
//! Keyed by (engine version, system spec, canonical word); entries are JSON
//! files written atomically (temporary file, then rename), so concurrent
//! writers of the same key cannot tear each other's entries and concurrent
//! readers are always safe. Any corruption, version skew or validation
//! failure downgrades to a recomputation, never to an error.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use flagorbit_core::coxeter::{format_word, parse_word};
use flagorbit_core::{bruhat, BruhatInterval, CoxeterElement, WeylGroup, ENGINE_VERSION};

/// Environment variable that points the cache at a directory. Unset means
/// caching is disabled and every interval is computed fresh.
pub const CACHE_DIR_ENV: &str = "FLAGORBIT_CACHE_DIR";

pub struct IntervalCache {
    dir: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    engine_version: String,
    system: String,
    word: String,
    members: Vec<String>,
}

impl IntervalCache {
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from);
        IntervalCache { dir }
    }

    pub fn disabled() -> Self {
        IntervalCache { dir: None }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    /// Looks the interval up, computing and storing it on a miss.
    pub fn get_or_compute(
        &self,
        group: &WeylGroup,
        system_key: &str,
        w: &CoxeterElement,
    ) -> flagorbit_core::Result<BruhatInterval> {
        if let Some(interval) = self.load(group, system_key, w) {
            return Ok(interval);
        }
        let interval = bruhat::lower_interval(group, w)?;
        self.store(system_key, &interval);
        Ok(interval)
    }

    fn entry_path(&self, system_key: &str, word: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let mut hasher = Sha256::new();
        hasher.update(ENGINE_VERSION.as_bytes());
        hasher.update([0]);
        hasher.update(system_key.as_bytes());
        hasher.update([0]);
        hasher.update(word.as_bytes());
        let digest = hasher.finalize();
        let hex: String = digest.iter().take(16).map(|b| format!("{b:02x}")).collect();
        Some(dir.join(format!("interval-{hex}.json")))
    }

    fn load(
        &self,
        group: &WeylGroup,
        system_key: &str,
        w: &CoxeterElement,
    ) -> Option<BruhatInterval> {
        let word = format_word(w.word());
        let path = self.entry_path(system_key, &word)?;
        let raw = fs::read_to_string(&path).ok()?;
        let entry: CacheEntry = serde_json::from_str(&raw).ok()?;
        if entry.engine_version != ENGINE_VERSION
            || entry.system != system_key
            || entry.word != word
        {
            return None;
        }
        // Rebuild elements from their words; reject anything inconsistent.
        let mut members = Vec::with_capacity(entry.members.len());
        for member_word in &entry.members {
            let letters = parse_word(member_word).ok()?;
            let element = group.element_from_word(&letters).ok()?;
            if format_word(element.word()) != *member_word {
                return None;
            }
            members.push(element);
        }
        let interval = BruhatInterval::from_members(w.clone(), members)?;
        Some(interval)
    }

    fn store(&self, system_key: &str, interval: &BruhatInterval) {
        let word = format_word(interval.top().word());
        let Some(path) = self.entry_path(system_key, &word) else {
            return;
        };
        let entry = CacheEntry {
            engine_version: ENGINE_VERSION.to_string(),
            system: system_key.to_string(),
            word,
            members: interval
                .members()
                .iter()
                .map(|u| format_word(u.word()))
                .collect(),
        };
        if let Err(err) = self.write_atomically(&path, &entry) {
            eprintln!("warning: interval cache write failed ({err}); continuing without cache");
        }
    }

    fn write_atomically(&self, path: &PathBuf, entry: &CacheEntry) -> std::io::Result<()> {
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let payload = serde_json::to_string(entry)?;
        let tmp = dir.join(format!(
            ".{}.tmp-{}",
            path.file_name().unwrap().to_string_lossy(),
            std::process::id()
        ));
        fs::write(&tmp, payload)?;
        fs::rename(&tmp, path)
    }
}
