//! Process-wide counter of memo and cache hits, reported by the CLI.

use std::sync::atomic::{AtomicU64, Ordering};

static CACHE_HITS: AtomicU64 = AtomicU64::new(0);

pub fn record_cache_hit() {
    CACHE_HITS.fetch_add(1, Ordering::Relaxed);
}

pub fn cache_hits() -> u64 {
    CACHE_HITS.load(Ordering::Relaxed)
}

pub fn reset_cache_hits() {
    CACHE_HITS.store(0, Ordering::Relaxed);
}
