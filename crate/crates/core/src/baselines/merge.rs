use crate::element::{Keyed, SortOrder};
use crate::instrumentation::OpCounters;

/// Top-down stable merge sort.
///
/// One scratch buffer of `n` slots is taken up front and shared by every
/// merge, so the metered auxiliary peak is exactly `n` for `n ≥ 2`.
pub fn merge_sort<T: Keyed>(elements: &mut [T], order: SortOrder, counters: &mut OpCounters) {
    if elements.len() < 2 {
        return;
    }
    let mut scratch = counters.scratch(elements);
    sort_range(elements, &mut scratch, order, counters);
    counters.release_scratch(scratch);
}

fn sort_range<T: Keyed>(a: &mut [T], buf: &mut [T], order: SortOrder, counters: &mut OpCounters) {
    let n = a.len();
    if n < 2 {
        return;
    }
    counters.enter();
    let mid = n / 2;
    sort_range(&mut a[..mid], &mut buf[..mid], order, counters);
    sort_range(&mut a[mid..], &mut buf[mid..], order, counters);
    merge(a, mid, buf, order, counters);
    counters.exit();
}

fn merge<T: Keyed>(a: &mut [T], mid: usize, buf: &mut [T], order: SortOrder, counters: &mut OpCounters) {
    let n = a.len();
    buf[..n].copy_from_slice(a);
    counters.moves(n as u64);
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        counters.compare();
        // Ties take from the left run.
        if order.strictly_before(&buf[j].key(), &buf[i].key()) {
            a[k] = buf[j];
            j += 1;
        } else {
            a[k] = buf[i];
            i += 1;
        }
        k += 1;
    }
    let rest = if i < mid { &buf[i..mid] } else { &buf[j..n] };
    a[k..].copy_from_slice(rest);
    counters.moves(n as u64);
}
