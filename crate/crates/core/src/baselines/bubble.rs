use crate::element::{Keyed, SortOrder};
use crate::instrumentation::OpCounters;

/// Bubble sort with a shrinking range and early exit on a swap-free pass.
pub fn bubble_sort<T: Keyed>(elements: &mut [T], order: SortOrder, counters: &mut OpCounters) {
    let n = elements.len();
    for pass in 0..n.saturating_sub(1) {
        let mut swapped = false;
        for j in 0..n - 1 - pass {
            counters.compare();
            if order.strictly_before(&elements[j + 1].key(), &elements[j].key()) {
                elements.swap(j, j + 1);
                counters.swap();
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}
