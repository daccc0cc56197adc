//! Block-parallel map with a sequential fallback.
//!
//! Every search in the crate is split into a fixed number of independent blocks whose
//! layout does not depend on the worker count. Results are returned in block order,
//! so reductions that pick "the first block with a hit" are deterministic for any `W`.

use std::sync::atomic::{AtomicUsize, Ordering};

/// Resolves a requested worker count; `0` means one worker per available core.
pub fn effective_workers(requested: usize) -> usize {
    if requested > 0 {
        return requested;
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Maps `f` over `0..blocks` and returns the results in block order.
pub fn map_blocks<T, F>(blocks: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    let workers = effective_workers(workers);
    #[cfg(feature = "parallel")]
    {
        if workers > 1 && blocks > 1 {
            use rayon::prelude::*;
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                return pool.install(|| (0..blocks).into_par_iter().map(&f).collect());
            }
        }
    }
    let _ = workers;
    (0..blocks).map(f).collect()
}

/// Cutoff shared between blocks that search for the first hit in block order.
///
/// A block that finds a hit lowers the cutoff to its own index; blocks with a larger
/// index may stop early because their result can no longer be the first one.
#[derive(Debug)]
pub struct FirstHit(AtomicUsize);

impl Default for FirstHit {
    fn default() -> Self {
        FirstHit(AtomicUsize::new(usize::MAX))
    }
}

impl FirstHit {
    pub fn record(&self, block: usize) {
        self.0.fetch_min(block, Ordering::Relaxed);
    }

    /// True if an earlier block already has a hit.
    pub fn superseded(&self, block: usize) -> bool {
        self.0.load(Ordering::Relaxed) < block
    }
}

/// First-hit search over blocks: returns the hit of the lowest-indexed block, if any.
pub fn first_in_blocks<T, F>(blocks: usize, workers: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize, &FirstHit) -> Option<T> + Sync + Send,
{
    let cutoff = FirstHit::default();
    if effective_workers(workers) <= 1 {
        for b in 0..blocks {
            if let Some(t) = f(b, &cutoff) {
                return Some((b, t));
            }
        }
        return None;
    }
    map_blocks(blocks, workers, |b| {
        if cutoff.superseded(b) {
            return None;
        }
        let hit = f(b, &cutoff);
        if hit.is_some() {
            cutoff.record(b);
        }
        hit
    })
    .into_iter()
    .enumerate()
    .find_map(|(b, t)| t.map(|t| (b, t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn results_in_block_order() {
        for w in [1, 2, 4] {
            let v = map_blocks(37, w, |b| b * b);
            assert_eq!(v, (0..37).map(|b| b * b).collect::<Vec<_>>());
        }
    }

    #[test]
    fn first_hit_is_lowest_block() {
        for w in [1, 3, 8] {
            let hit = first_in_blocks(100, w, |b, _| (b % 17 == 5 || b == 90).then_some(b * 10));
            assert_eq!(hit, Some((5, 50)));
        }
        assert_eq!(first_in_blocks(10, 2, |_, _| None::<u8>), None);
    }
}
