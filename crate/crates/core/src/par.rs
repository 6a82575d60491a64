//! Index-range loops used by the exhaustive checkers.
//!
//! With the `parallel` feature (on by default) the loops run on the rayon
//! global pool. Without it, or inside [`sequential`], they run on the calling
//! thread. Results are identical in both modes: searches return the least
//! matching index and collections keep index order.

use std::cell::Cell;

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Runs `f` with every loop issued from this thread forced onto the
/// sequential path. Used by the benchmarks to compare both paths in one
/// binary.
pub fn sequential<R>(f: impl FnOnce() -> R) -> R {
    let previous = FORCE_SEQUENTIAL.with(|c| c.replace(true));
    let out = f();
    FORCE_SEQUENTIAL.with(|c| c.set(previous));
    out
}

#[cfg(feature = "parallel")]
fn use_parallel(len: usize) -> bool {
    // Tiny ranges are not worth the scheduling overhead.
    len >= 256 && !FORCE_SEQUENTIAL.with(|c| c.get())
}

/// Least index in `0..len` satisfying `pred`.
pub fn find_first<F>(len: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(len) {
        use rayon::prelude::*;
        return (0..len).into_par_iter().find_first(|&i| pred(i));
    }
    (0..len).find(|&i| pred(i))
}

/// Number of indices in `0..len` satisfying `pred`.
pub fn count<F>(len: usize, pred: F) -> usize
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(len) {
        use rayon::prelude::*;
        return (0..len).into_par_iter().filter(|&i| pred(i)).count();
    }
    (0..len).filter(|&i| pred(i)).count()
}

/// All indices in `0..len` satisfying `pred`, ascending.
pub fn filter<F>(len: usize, pred: F) -> Vec<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(len) {
        use rayon::prelude::*;
        return (0..len).into_par_iter().filter(|&i| pred(i)).collect();
    }
    (0..len).filter(|&i| pred(i)).collect()
}

/// `f(i)` for every `i` in `0..len`, in index order.
pub fn map<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(len) {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    (0..len).map(f).collect()
}

/// Like [`map`] but always eligible for parallel execution, for coarse
/// work items such as independent search subtrees.
pub fn map_coarse<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len > 1 && !FORCE_SEQUENTIAL.with(|c| c.get()) {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    (0..len).map(f).collect()
}

/// Decodes `index` into a tuple of `arity` coordinates in base `n`, most
/// significant coordinate first, so that index order is lexicographic
/// tuple order.
pub fn decode_tuple(mut index: usize, n: usize, arity: usize, out: &mut [usize]) {
    for slot in out[..arity].iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
}

/// `n.pow(arity)`, panicking on overflow.
pub fn tuple_count(n: usize, arity: usize) -> usize {
    n.checked_pow(arity as u32).expect("tuple space overflows usize")
}
