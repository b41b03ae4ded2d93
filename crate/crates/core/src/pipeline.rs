//! Ordered parallel map over a stream.
//!
//! Items are pulled from the input in chunks on the calling thread, mapped
//! on a dedicated worker pool, and handed back in input order. At most one
//! chunk is in flight, so memory stays proportional to the chunk length no
//! matter how long the stream is.

use std::collections::VecDeque;

use rayon::prelude::*;
use rayon::ThreadPool;

use crate::error::{Error, Result};

/// Items per worker in each chunk.
const ITEMS_PER_WORKER: usize = 64;

pub struct OrderedMap<I: Iterator, F, R> {
    input: I,
    f: F,
    pool: Option<ThreadPool>,
    chunk: usize,
    ready: VecDeque<R>,
}

/// Maps `f` over `input` with `workers` threads, preserving input order.
///
/// With one worker everything runs on the calling thread.
pub fn ordered_map<I, T, R, F>(
    input: I,
    workers: usize,
    f: F,
) -> Result<OrderedMap<I::IntoIter, F, R>>
where
    I: IntoIterator<Item = T>,
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    if workers == 0 {
        return Err(Error::InvalidParams(
            "worker count must be at least 1".into(),
        ));
    }
    let pool = if workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidParams(format!("cannot start worker pool: {e}")))?;
        Some(pool)
    } else {
        None
    };
    Ok(OrderedMap {
        input: input.into_iter(),
        f,
        pool,
        chunk: workers * ITEMS_PER_WORKER,
        ready: VecDeque::new(),
    })
}

impl<I, T, R, F> Iterator for OrderedMap<I, F, R>
where
    I: Iterator<Item = T>,
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    type Item = R;

    fn next(&mut self) -> Option<R> {
        if self.ready.is_empty() {
            match &self.pool {
                None => return self.input.next().map(&self.f),
                Some(pool) => {
                    let batch: Vec<T> = self.input.by_ref().take(self.chunk).collect();
                    if batch.is_empty() {
                        return None;
                    }
                    let f = &self.f;
                    let mapped: Vec<R> = pool.install(|| batch.into_par_iter().map(f).collect());
                    self.ready.extend(mapped);
                }
            }
        }
        self.ready.pop_front()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_for_any_worker_count() {
        let expected: Vec<u64> = (0..1000u64).map(|x| x * x).collect();
        for workers in [1, 2, 3, 8] {
            let got: Vec<u64> = ordered_map(0..1000u64, workers, |x| x * x)
                .unwrap()
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn zero_workers_rejected() {
        assert!(ordered_map(0..3, 0, |x: i32| x).is_err());
    }

    #[test]
    fn input_is_consumed_lazily() {
        let mut m = ordered_map(0u64.., 2, |x| x + 1).unwrap();
        assert_eq!(m.next(), Some(1));
        assert_eq!(m.nth(200), Some(202));
    }
}
