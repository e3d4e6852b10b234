//! In-place heapsort.
//!
//! Build a heap over the whole slice, then repeatedly exchange the root with
//! the last live element and shrink the heap by one. After `k` extractions
//! the tail `elements[n-k..]` holds the `k` most extreme keys in final order
//! and the prefix is still a heap.

use crate::element::{is_sorted_by_key, Keyed, SortOrder};
use crate::heap::{build_in_place, is_heap, sift_down, HeapOrder};
use crate::instrumentation::OpCounters;

/// Ascending sorts extract maxima to the tail; descending sorts extract
/// minima.
pub fn heap_order_for(order: SortOrder) -> HeapOrder {
    match order {
        SortOrder::Ascending => HeapOrder::MaxAtRoot,
        SortOrder::Descending => HeapOrder::MinAtRoot,
    }
}

pub fn uhs_sort<T: Keyed>(elements: &mut [T], order: SortOrder, counters: &mut OpCounters) {
    uhs_sort_observed(elements, order, counters, |_, _| {});
}

/// `uhs_sort` with a checkpoint hook, called once after the build and once
/// after every extraction with the slice and the current heap size.
pub fn uhs_sort_observed<T, F>(
    elements: &mut [T],
    order: SortOrder,
    counters: &mut OpCounters,
    mut observe: F,
) where
    T: Keyed,
    F: FnMut(&[T], usize),
{
    let n = elements.len();
    if n <= 1 {
        return;
    }
    let heap_order = heap_order_for(order);
    build_in_place(elements, heap_order, counters);
    observe(elements, n);
    for heap_size in (1..n).rev() {
        elements.swap(0, heap_size);
        counters.swap();
        sift_down(elements, heap_size, 0, heap_order, counters)
            .expect("root is inside a nonempty heap");
        observe(elements, heap_size);
    }
}

/// Checks the mid-sort shape: `elements[..heap_size]` is a heap, the tail is
/// sorted, and no tail key is out of order relative to any heap key.
pub fn sorted_region_invariant<T: Keyed>(elements: &[T], heap_size: usize, order: SortOrder) -> bool {
    if heap_size > elements.len() {
        return false;
    }
    let (prefix, suffix) = elements.split_at(heap_size);
    if !is_heap(prefix, heap_size, heap_order_for(order)) || !is_sorted_by_key(suffix, order) {
        return false;
    }
    // The root is the prefix extreme and the first tail element the tail
    // extreme on the other side.
    match (prefix.first(), suffix.first()) {
        (Some(root), Some(head)) => order.in_order(&root.key(), &head.key()),
        _ => true,
    }
}

/// Worst-case comparison budget: a `2(n-1)` build plus `n-1` root sifts of at
/// most `2·ceil(log2 n)` each.
pub fn comparison_bound(n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let n = n as u64;
    let ceil_log = u64::BITS - (n - 1).leading_zeros();
    2 * (n - 1) * ceil_log as u64 + 2 * (n - 1)
}
