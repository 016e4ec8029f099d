//! Data-parallel execution of independent case grids. Verification
//! suites and structure-constant sweeps map over their cases through
//! these helpers; the `parallel` feature (default) routes them through
//! rayon, without it everything runs sequentially on one thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map a function over items, collecting results in input order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// Sequential reference path, always available; the criterion bench
/// compares it against the rayon path.
pub fn map_collect_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}
