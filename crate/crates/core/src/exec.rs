//! Execution shim for data-parallel sweeps.
//!
//! Randomized proposition sweeps, oracle comparisons and multi-start
//! optimization are embarrassingly parallel across instances; each instance
//! owns a seeded generator, so results are identical regardless of how the
//! work is scheduled. With the `parallel` feature (default) the work runs on
//! rayon; without it, sequentially. [`map_indexed_with`] lets benchmarks
//! compare both paths inside one build.

/// How to schedule an index-parallel map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    /// rayon work-stealing (requires the `parallel` feature; falls back to
    /// sequential when compiled without it).
    Parallel,
    Sequential,
}

impl ExecMode {
    /// The default mode for this build.
    pub fn auto() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Maps `f` over `0..n`, collecting results in index order.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_indexed_with(ExecMode::auto(), n, f)
}

/// Maps `f` over `0..n` with an explicit schedule. Results are in index
/// order either way.
pub fn map_indexed_with<T, F>(mode: ExecMode, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        ExecMode::Parallel => (0..n).map(f).collect(),
        ExecMode::Sequential => (0..n).map(f).collect(),
    }
}
