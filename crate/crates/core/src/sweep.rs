//! Deterministic execution of sweeps: map a function over a streamed
//! sequence of work items and deliver the results in input order.
//!
//! With the `parallel` feature (default) the items are processed in
//! bounded chunks on the rayon pool; without it everything runs inline.
//! Either way the visitor sees results in exactly the enumeration order,
//! so sweep output is identical across modes and worker counts.

use std::ops::ControlFlow;

/// How to execute a sweep. `Parallel` degrades to `Sequential` when the
/// crate is built without the `parallel` feature.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

/// Items pulled from the stream per parallel batch. Bounds memory while
/// leaving enough slack for load balancing across workers.
const CHUNK: usize = 256;

/// Applies `f` to every item and feeds `(item, result)` pairs to `visit`
/// in input order. `visit` may break to stop early; in parallel mode the
/// stop takes effect at chunk granularity.
pub fn for_each_ordered<T, U, I, F, V>(mode: ExecMode, items: I, f: F, mut visit: V)
where
    I: Iterator<Item = T>,
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
    V: FnMut(T, U) -> ControlFlow<()>,
{
    match mode {
        ExecMode::Sequential => {
            for item in items {
                let out = f(&item);
                if visit(item, out).is_break() {
                    return;
                }
            }
        }
        ExecMode::Parallel => parallel_impl(items, f, &mut visit),
    }
}

#[cfg(feature = "parallel")]
fn parallel_impl<T, U, I, F, V>(mut items: I, f: F, visit: &mut V)
where
    I: Iterator<Item = T>,
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
    V: FnMut(T, U) -> ControlFlow<()>,
{
    use rayon::prelude::*;
    loop {
        let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return;
        }
        let results: Vec<U> = chunk.par_iter().map(&f).collect();
        for (item, out) in chunk.into_iter().zip(results) {
            if visit(item, out).is_break() {
                return;
            }
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_impl<T, U, I, F, V>(items: I, f: F, visit: &mut V)
where
    I: Iterator<Item = T>,
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
    V: FnMut(T, U) -> ControlFlow<()>,
{
    for item in items {
        let out = f(&item);
        if visit(item, out).is_break() {
            return;
        }
    }
}
