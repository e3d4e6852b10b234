use crate::element::{Keyed, SortOrder};
use crate::instrumentation::OpCounters;

/// Stable shifting insertion sort. Sorted input costs `n - 1` comparisons,
/// reversed input `n(n - 1)/2`.
pub fn insertion_sort<T: Keyed>(elements: &mut [T], order: SortOrder, counters: &mut OpCounters) {
    for i in 1..elements.len() {
        let x = elements[i];
        let mut j = i;
        while j > 0 {
            counters.compare();
            if !order.strictly_before(&x.key(), &elements[j - 1].key()) {
                break;
            }
            elements[j] = elements[j - 1];
            counters.moves(1);
            j -= 1;
        }
        if j != i {
            elements[j] = x;
            counters.moves(1);
        }
    }
}
