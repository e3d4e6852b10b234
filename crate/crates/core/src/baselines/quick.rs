use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{Keyed, SortOrder};
use crate::instrumentation::OpCounters;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PivotRule {
    /// Always the last element; sorted input degrades to `n(n-1)/2`.
    #[default]
    LastElement,
    MedianOfThree,
    /// Uniform random index from a generator seeded per call.
    RandomSeeded,
}

/// Lomuto-partition quicksort.
///
/// Recurses into the smaller partition and loops on the larger one, so the
/// metered recursion depth stays within `log2 n + 1` whatever the pivots do.
/// Comparison counts are unaffected by that choice.
pub fn quicksort<T: Keyed>(
    elements: &mut [T],
    order: SortOrder,
    counters: &mut OpCounters,
    pivot: PivotRule,
    seed: u64,
) {
    if elements.len() < 2 {
        return;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    quick_range(elements, order, counters, pivot, &mut rng);
}

fn quick_range<T: Keyed>(
    mut a: &mut [T],
    order: SortOrder,
    counters: &mut OpCounters,
    pivot: PivotRule,
    rng: &mut ChaCha8Rng,
) {
    counters.enter();
    while a.len() > 1 {
        let p = choose_pivot(a, order, counters, pivot, rng);
        let last = a.len() - 1;
        if p != last {
            a.swap(p, last);
            counters.swap();
        }
        let split = partition(a, order, counters);
        let (lo, rest) = a.split_at_mut(split);
        let hi = &mut rest[1..];
        if lo.len() <= hi.len() {
            if lo.len() > 1 {
                quick_range(lo, order, counters, pivot, rng);
            }
            a = hi;
        } else {
            if hi.len() > 1 {
                quick_range(hi, order, counters, pivot, rng);
            }
            a = lo;
        }
    }
    counters.exit();
}

fn choose_pivot<T: Keyed>(
    a: &[T],
    order: SortOrder,
    counters: &mut OpCounters,
    pivot: PivotRule,
    rng: &mut ChaCha8Rng,
) -> usize {
    let last = a.len() - 1;
    match pivot {
        PivotRule::LastElement => last,
        PivotRule::RandomSeeded => rng.gen_range(0..a.len()),
        PivotRule::MedianOfThree if a.len() < 3 => last,
        PivotRule::MedianOfThree => {
            let mid = a.len() / 2;
            let mut before = |x: usize, y: usize| {
                counters.compare();
                order.strictly_before(&a[x].key(), &a[y].key())
            };
            // Median of (0, mid, last) by at most three comparisons.
            if before(0, mid) {
                if before(mid, last) {
                    mid
                } else if before(0, last) {
                    last
                } else {
                    0
                }
            } else if before(0, last) {
                0
            } else if before(mid, last) {
                last
            } else {
                mid
            }
        }
    }
}

/// Partitions around `a[last]`; returns the pivot's final index.
fn partition<T: Keyed>(a: &mut [T], order: SortOrder, counters: &mut OpCounters) -> usize {
    let last = a.len() - 1;
    let pivot = a[last].key();
    let mut store = 0;
    for j in 0..last {
        counters.compare();
        if order.in_order(&a[j].key(), &pivot) {
            if store != j {
                a.swap(store, j);
                counters.swap();
            }
            store += 1;
        }
    }
    if store != last {
        a.swap(store, last);
        counters.swap();
    }
    store
}
