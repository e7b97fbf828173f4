//! Transparent memo tables shared between threads.

use std::hash::Hash;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::RwLock;

use rustc_hash::FxHashMap;

static CAP: AtomicUsize = AtomicUsize::new(1 << 22);

/// Sets the per-table entry cap; tables stop growing once full.
pub fn set_memo_cap(cap: usize) {
    CAP.store(cap, Ordering::Relaxed);
}

pub fn memo_cap() -> usize {
    CAP.load(Ordering::Relaxed)
}

pub(crate) struct Memo<K, V> {
    map: RwLock<FxHashMap<K, V>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: RwLock::new(FxHashMap::default()),
        }
    }

    pub fn get(&self, k: &K) -> Option<V> {
        self.map.read().unwrap().get(k).cloned()
    }

    pub fn put(&self, k: K, v: V) {
        let mut m = self.map.write().unwrap();
        if m.len() < memo_cap() {
            m.insert(k, v);
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }
}

impl<K: Eq + Hash, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}
