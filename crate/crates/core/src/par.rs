//! Data-parallel helpers. With the `parallel` feature they run on the
//! current rayon pool; without it they are plain sequential loops. Output
//! order never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order-preserving map.
#[cfg(feature = "parallel")]
pub(crate) fn map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Order-preserving flat map over owned outputs.
#[cfg(feature = "parallel")]
pub(crate) fn flat_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> Vec<U> + Sync + Send) -> Vec<U> {
    items.par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn flat_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> Vec<U> + Sync + Send) -> Vec<U> {
    items.iter().flat_map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn sort_dedup<T: Ord + Send>(v: &mut Vec<T>) {
    v.par_sort_unstable();
    v.dedup();
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sort_dedup<T: Ord + Send>(v: &mut Vec<T>) {
    v.sort_unstable();
    v.dedup();
}

/// Number of worker threads available to the helpers above.
#[cfg(feature = "parallel")]
pub fn workers() -> usize {
    rayon::current_num_threads()
}

#[cfg(not(feature = "parallel"))]
pub fn workers() -> usize {
    1
}

/// Runs `f` with at most `threads` workers (ignored without `parallel`).
#[cfg(feature = "parallel")]
pub fn with_workers<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R: Send>(_threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}
