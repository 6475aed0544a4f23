//! Execution strategy for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool. Without it every strategy runs sequentially, so call
//! sites never need their own `cfg` guards.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Below this many work items the parallel path is not worth the overhead.
const MIN_PARALLEL_ITEMS: usize = 64;

impl Execution {
    fn use_pool(self, items: usize) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel && items >= MIN_PARALLEL_ITEMS
    }

    pub(crate) fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_pool(items.len()) {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub(crate) fn all<T, F>(self, items: &[T], f: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.use_pool(items.len()) {
            return items.par_iter().all(f);
        }
        items.iter().all(f)
    }

    /// Splits `0..len` into contiguous chunks and maps each chunk.
    pub(crate) fn map_ranges<R, F>(self, len: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(std::ops::Range<u64>) -> R + Sync + Send,
    {
        let pooled = self.use_pool(len.min(usize::MAX as u64) as usize);
        let chunks = if pooled { chunk_count() } else { 1 };
        let step = len.div_ceil(chunks.max(1) as u64).max(1);
        let ranges: Vec<std::ops::Range<u64>> =
            (0..len).step_by(step as usize).map(|start| start..(start + step).min(len)).collect();
        // The chunk count is small by construction, so bypass the size threshold in `map`.
        #[cfg(feature = "parallel")]
        if pooled {
            return ranges.into_par_iter().map(f).collect();
        }
        ranges.into_iter().map(f).collect()
    }
}

#[cfg(feature = "parallel")]
fn chunk_count() -> usize {
    rayon::current_num_threads() * 4
}

#[cfg(not(feature = "parallel"))]
fn chunk_count() -> usize {
    1
}
