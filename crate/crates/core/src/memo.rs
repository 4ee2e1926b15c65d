//! Concurrent lookup-or-compute table with one writer per key.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

pub struct Memo<K, V> {
    cells: Mutex<HashMap<K, Arc<OnceLock<V>>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Memo<K, V> {
        Memo { cells: Mutex::new(HashMap::new()) }
    }

    /// Return the stored value for `key`, computing it with `f` on first use.
    /// Concurrent callers for the same key block until the single writer
    /// finishes; `f` may recurse into other keys.
    pub fn get_or_compute(&self, key: &K, f: impl FnOnce() -> V) -> V {
        let cell = {
            let mut map = self.cells.lock().expect("memo lock poisoned");
            map.entry(key.clone()).or_insert_with(|| Arc::new(OnceLock::new())).clone()
        };
        cell.get_or_init(f).clone()
    }

    pub fn get(&self, key: &K) -> Option<V> {
        let map = self.cells.lock().expect("memo lock poisoned");
        map.get(key).and_then(|c| c.get().cloned())
    }

    /// Store a value computed elsewhere (e.g. read back from disk).
    pub fn insert(&self, key: K, value: V) {
        let cell = {
            let mut map = self.cells.lock().expect("memo lock poisoned");
            map.entry(key).or_insert_with(|| Arc::new(OnceLock::new())).clone()
        };
        let _ = cell.set(value);
    }

    pub fn len(&self) -> usize {
        let map = self.cells.lock().expect("memo lock poisoned");
        map.values().filter(|c| c.get().is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}
