//! Set of canonical keys seen during one search.

use std::collections::HashSet;

use sha2::{Digest, Sha256};

use crate::canon::CanonicalKey;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StoreMode {
    /// Keep whole encodings; exact.
    #[default]
    Full,
    /// Keep 128-bit digests. For k keys a collision, which silently drops
    /// an isomorphism class, has probability at most k^2 / 2^129.
    Fingerprint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StoreStats {
    pub keys: u64,
    pub bytes: u64,
}

#[derive(Debug, Default)]
pub struct SeenStore {
    mode: StoreMode,
    full: HashSet<Box<[u8]>>,
    digests: HashSet<u128>,
    stats: StoreStats,
    cap: Option<u64>,
}

fn fingerprint(bytes: &[u8]) -> u128 {
    let d = Sha256::digest(bytes);
    u128::from_le_bytes(d[..16].try_into().expect("digest is 32 bytes"))
}

impl SeenStore {
    pub fn new(mode: StoreMode) -> SeenStore {
        SeenStore {
            mode,
            ..SeenStore::default()
        }
    }

    /// Limits the retained bytes; see [`SeenStore::over_cap`].
    pub fn with_cap(mut self, cap: Option<u64>) -> SeenStore {
        self.cap = cap;
        self
    }

    pub fn mode(&self) -> StoreMode {
        self.mode
    }

    /// True iff the key was not present before.
    pub fn insert_if_new(&mut self, key: &CanonicalKey) -> bool {
        self.insert_bytes(key.as_bytes())
    }

    pub fn insert_bytes(&mut self, key: &[u8]) -> bool {
        let (fresh, size) = match self.mode {
            StoreMode::Full => {
                if self.full.contains(key) {
                    (false, 0)
                } else {
                    self.full.insert(key.into());
                    (true, key.len())
                }
            }
            StoreMode::Fingerprint => (self.digests.insert(fingerprint(key)), 16),
        };
        if fresh {
            self.stats.keys += 1;
            self.stats.bytes += size as u64;
        }
        fresh
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        match self.mode {
            StoreMode::Full => self.full.contains(key.as_bytes()),
            StoreMode::Fingerprint => self.digests.contains(&fingerprint(key.as_bytes())),
        }
    }

    pub fn stats(&self) -> StoreStats {
        self.stats
    }

    pub fn over_cap(&self) -> bool {
        self.cap.is_some_and(|c| self.stats.bytes > c)
    }
}
