use proptest::prelude::*;

use uhs_core::baselines::sort_with;
use uhs_core::heap::is_heap;
use uhs_core::instrumentation::counted_sort;
use uhs_core::uhs::comparison_bound;
use uhs_core::{
    AlgorithmId, Decimal, Heap, HeapOrder, OpCounters, SortConfig, SortOrder, TaggedElement,
};

proptest! {
    #[test]
    fn heapsort_sorts_within_bound(v in prop::collection::vec(-1000i64..1000, 0..300)) {
        let mut expect = v.clone();
        expect.sort();
        let (got, c) = counted_sort(AlgorithmId::Uhs, v.clone(), SortOrder::Ascending, &SortConfig::default()).unwrap();
        prop_assert_eq!(got, expect);
        prop_assert!(c.comparisons <= comparison_bound(v.len()));
        prop_assert_eq!(c.aux_peak_slots, 0);
    }

    #[test]
    fn min_heap_is_max_heap_of_negations(v in prop::collection::vec(-1000i64..1000, 0..200)) {
        let mut c = OpCounters::new();
        let min = Heap::build(v.clone(), HeapOrder::MinAtRoot, &mut c);
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        let max = Heap::build(neg, HeapOrder::MaxAtRoot, &mut OpCounters::new());
        let back: Vec<i64> = max.as_slice().iter().map(|x| -x).collect();
        prop_assert_eq!(min.as_slice(), &back[..]);
        prop_assert!(is_heap(min.as_slice(), min.len(), HeapOrder::MinAtRoot));
    }

    #[test]
    fn push_pop_drains_in_order(v in prop::collection::vec(any::<i64>(), 0..200)) {
        let mut c = OpCounters::new();
        let mut heap = Heap::new(HeapOrder::MaxAtRoot);
        for &x in &v {
            heap.push(x, &mut c);
        }
        let mut drained = Vec::new();
        while let Ok(x) = heap.pop_root(&mut c) {
            drained.push(x);
        }
        let mut expect = v.clone();
        expect.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(drained, expect);
    }

    #[test]
    fn stable_sorts_keep_tie_order(
        keys in prop::collection::vec(0u64..4, 0..100),
        descending in any::<bool>(),
    ) {
        let order = if descending { SortOrder::Descending } else { SortOrder::Ascending };
        let tagged = TaggedElement::tag_all(&keys);
        let mut expect = tagged.clone();
        match order {
            SortOrder::Ascending => expect.sort_by_key(|e| e.key),
            SortOrder::Descending => expect.sort_by_key(|e| std::cmp::Reverse(e.key)),
        }
        for a in [AlgorithmId::Insertion, AlgorithmId::Merge, AlgorithmId::Bubble, AlgorithmId::Radix] {
            let mut got = tagged.clone();
            sort_with(a, &mut got, order, &SortConfig::default(), &mut OpCounters::new()).unwrap();
            prop_assert_eq!(&got, &expect, "{}", a);
        }
        let unit: Vec<Decimal> = keys.iter().map(|&k| Decimal::new(k as f64 / 4.0).unwrap()).collect();
        let tagged = TaggedElement::tag_all(&unit);
        let mut expect = tagged.clone();
        match order {
            SortOrder::Ascending => expect.sort_by_key(|e| e.key),
            SortOrder::Descending => expect.sort_by_key(|e| std::cmp::Reverse(e.key)),
        }
        let mut got = tagged;
        sort_with(AlgorithmId::Bucket, &mut got, order, &SortConfig::default(), &mut OpCounters::new()).unwrap();
        prop_assert_eq!(got, expect);
    }
}
