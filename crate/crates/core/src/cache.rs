use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::chains::OrbitGraph;
use crate::num::IVec;
use crate::tensor::WeightTable;

/// Thread-safe memo table.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn get_or_insert_with<E>(&self, key: &K, make: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.map.read().expect("memo lock").get(key) {
            return Ok(v.clone());
        }
        let v = Arc::new(make()?);
        let mut w = self.map.write().expect("memo lock");
        Ok(w.entry(key.clone()).or_insert(v).clone())
    }
}

#[derive(Default)]
pub(crate) struct Caches {
    pub orbit_graphs: Memo<IVec, OrbitGraph>,
    pub weights: Memo<IVec, WeightTable>,
    pub tables: Memo<(IVec, IVec), BTreeMap<IVec, BigInt>>,
}
