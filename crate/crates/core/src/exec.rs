//! Data-parallel driving of independent sub-problems.
//!
//! With the `parallel` feature (default) the loops below fan out over rayon;
//! without it they run sequentially. [`force_sequential`] switches the rayon
//! path off at runtime so the two modes can be compared in benchmarks.

use std::sync::atomic::{AtomicBool, Ordering};

static SEQUENTIAL_OVERRIDE: AtomicBool = AtomicBool::new(false);

/// Runtime override: when set, even a `parallel` build runs sequentially.
pub fn force_sequential(on: bool) {
    SEQUENTIAL_OVERRIDE.store(on, Ordering::SeqCst);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && !SEQUENTIAL_OVERRIDE.load(Ordering::SeqCst)
}

/// Maps `f` over 0..n, preserving order in the output.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Runs `f` over 0..n, stopping on the first error. Which error surfaces from
/// a parallel run is unspecified, but success/failure is deterministic.
pub fn try_for_each<E, F>(n: usize, f: F) -> Result<(), E>
where
    E: Send,
    F: Fn(usize) -> Result<(), E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().try_for_each(f);
    }
    (0..n).try_for_each(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let out = map_indexed(100, |i| i * i);
        assert_eq!(out[7], 49);
        assert_eq!(out.len(), 100);
    }

    #[test]
    fn sequential_override_round_trips() {
        force_sequential(true);
        assert!(!parallel_enabled());
        let out = map_indexed(10, |i| i + 1);
        assert_eq!(out[9], 10);
        force_sequential(false);
    }

    #[test]
    fn try_for_each_propagates_error() {
        let r = try_for_each(50, |i| if i == 33 { Err(i) } else { Ok(()) });
        assert_eq!(r, Err(33));
    }
}
