use crate::element::{Keyed, SortKey, SortOrder};
use crate::error::{Error, Result};
use crate::instrumentation::OpCounters;

use super::insertion::insertion_sort;

/// Bucket sort over keys in `[0, 1)`.
///
/// Elements are distributed stably into `bucket_count` equal-width buckets
/// (default `n`) laid out in one scratch buffer, each bucket is insertion
/// sorted, and the buffer is copied back. Metered space is `n` element slots
/// plus one count per bucket.
pub fn bucket_sort<T: Keyed>(
    elements: &mut [T],
    order: SortOrder,
    counters: &mut OpCounters,
    bucket_count: Option<usize>,
) -> Result<()> {
    if let Some(bad) = elements.iter().find(|e| e.key().unit_interval().is_none()) {
        return Err(Error::domain(format!(
            "bucket sort needs keys in [0, 1), got {}",
            bad.key()
        )));
    }
    let n = elements.len();
    let buckets = bucket_count.unwrap_or(n);
    if bucket_count == Some(0) {
        return Err(Error::domain("bucket count must be positive"));
    }
    if n < 2 {
        return Ok(());
    }

    let bucket_of = |e: &T| {
        let u = e.key().unit_interval().expect("validated above");
        let b = ((u * buckets as f64) as usize).min(buckets - 1);
        match order {
            SortOrder::Ascending => b,
            SortOrder::Descending => buckets - 1 - b,
        }
    };

    counters.acquire_aux(buckets as u64);
    let mut starts = vec![0usize; buckets + 1];
    for e in elements.iter() {
        starts[bucket_of(e) + 1] += 1;
    }
    for b in 0..buckets {
        starts[b + 1] += starts[b];
    }

    let mut scratch = counters.scratch(elements);
    let mut next = starts.clone();
    for e in elements.iter() {
        let b = bucket_of(e);
        scratch[next[b]] = *e;
        next[b] += 1;
    }
    counters.moves(n as u64);

    for b in 0..buckets {
        insertion_sort(&mut scratch[starts[b]..starts[b + 1]], order, counters);
    }
    elements.copy_from_slice(&scratch);
    counters.moves(n as u64);

    counters.release_scratch(scratch);
    counters.release_aux(buckets as u64);
    Ok(())
}
