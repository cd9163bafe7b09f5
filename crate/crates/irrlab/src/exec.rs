//! Data-parallel fan-out with a sequential fallback.
//!
//! Built with the `parallel` feature (the default) this maps over rayon;
//! without it the same calls run on one thread. Results come back in input
//! order either way, so downstream output is identical across both modes
//! and any worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Maps `f` over a range of indices, preserving order.
#[cfg(feature = "parallel")]
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_range<U, F>(range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    range.map(f).collect()
}

/// Configures the worker pool from the `IRRLAB_WORKERS` environment
/// variable. A no-op without the `parallel` feature, when the variable is
/// unset, or when a pool was already installed.
pub fn configure_workers_from_env() {
    #[cfg(feature = "parallel")]
    {
        if let Ok(val) = std::env::var("IRRLAB_WORKERS") {
            if let Ok(threads) = val.trim().parse::<usize>() {
                if threads >= 1 {
                    let _ = rayon::ThreadPoolBuilder::new()
                        .num_threads(threads)
                        .build_global();
                }
            }
        }
    }
}
