//! Randomised differential and invariant suites shared by the test harness
//! and the `verify` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::baselines::{AlgorithmId, SortConfig};
use crate::element::{SortKey, SortOrder, TaggedElement};
use crate::error::{Error, Result};
use crate::heap::{is_heap, Heap, HeapOrder};
use crate::instrumentation::counted_sort;

use super::workload::Dataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteSummary {
    pub inputs: usize,
    pub runs: usize,
}

/// Inputs for the differential suite: `random` seeded arrays of length up to
/// `max_len`, followed by sorted, reversed, all-equal, and few-unique arrays
/// at a spread of sizes.
pub fn differential_inputs(random: usize, max_len: usize, seed: u64) -> Vec<Dataset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inputs: Vec<Dataset> = (0..random)
        .map(|_| {
            let n = rng.gen_range(0..=max_len);
            let domain = rng.gen_range(1..=2 * n as u64 + 1);
            Dataset {
                levels: (0..n).map(|_| rng.gen_range(0..domain)).collect(),
                domain,
            }
        })
        .collect();
    for n in [0usize, 1, 2, 3, 17, 256, max_len] {
        let n64 = n as u64;
        let domain = n64.max(1);
        inputs.push(Dataset { levels: (0..n64).collect(), domain });
        inputs.push(Dataset { levels: (0..n64).rev().collect(), domain });
        inputs.push(Dataset { levels: vec![0; n], domain: 1 });
        inputs.push(Dataset {
            levels: (0..n64).map(|i| (i * 7) % 4).collect(),
            domain: 4,
        });
    }
    inputs
}

/// Sorts every input with every algorithm in both directions and compares
/// against a stable standard-library sort of the tagged input.
///
/// Stable algorithms must reproduce the reference exactly, origins included.
/// Unstable ones must match it key for key and return a permutation of the
/// input.
pub fn differential_suite(inputs: &[Dataset], config: &SortConfig) -> Result<SuiteSummary> {
    let mut runs = 0;
    for (i, input) in inputs.iter().enumerate() {
        for algorithm in AlgorithmId::ALL {
            for order in [SortOrder::Ascending, SortOrder::Descending] {
                let outcome = if algorithm.needs_unit_keys() {
                    check_against_reference(algorithm, &input.unit_keys(), order, config)
                } else {
                    check_against_reference(algorithm, &input.integer_keys(), order, config)
                };
                outcome.map_err(|detail| Error::DifferentialFailure {
                    step: i,
                    detail: format!("{algorithm} {order:?} on n = {}: {detail}", input.levels.len()),
                })?;
                runs += 1;
            }
        }
    }
    Ok(SuiteSummary {
        inputs: inputs.len(),
        runs,
    })
}

fn check_against_reference<K: SortKey>(
    algorithm: AlgorithmId,
    keys: &[K],
    order: SortOrder,
    config: &SortConfig,
) -> std::result::Result<(), String> {
    let tagged = TaggedElement::tag_all(keys);
    let mut reference = tagged.clone();
    match order {
        SortOrder::Ascending => reference.sort_by_key(|e| e.key),
        SortOrder::Descending => reference.sort_by_key(|e| std::cmp::Reverse(e.key)),
    }
    let (got, _) = counted_sort(algorithm, tagged, order, config).map_err(|e| e.to_string())?;
    if algorithm.expected_stable() {
        if got != reference {
            return Err("output differs from the stable reference".into());
        }
        return Ok(());
    }
    if !got.iter().map(|e| e.key).eq(reference.iter().map(|e| e.key)) {
        return Err("keys differ from the reference".into());
    }
    let mut origins: Vec<usize> = got.iter().map(|e| e.origin).collect();
    origins.sort_unstable();
    if !origins.iter().copied().eq(0..keys.len()) {
        return Err("output is not a permutation of the input".into());
    }
    Ok(())
}

/// Builds, pushes into, and drains seeded random heaps of both orders,
/// checking `is_heap` after every mutation.
pub fn heap_property_suite(heaps: usize, max_len: usize, seed: u64) -> Result<SuiteSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut runs = 0;
    for h in 0..heaps {
        let order = if h % 2 == 0 { HeapOrder::MaxAtRoot } else { HeapOrder::MinAtRoot };
        let n = rng.gen_range(0..=max_len);
        let range = rng.gen_range(1..=n as i64 + 1);
        let values: Vec<i64> = (0..n).map(|_| rng.gen_range(0..range)).collect();
        let fail = |what: &str| Error::DifferentialFailure {
            step: h,
            detail: format!("is_heap failed after {what} ({order:?}, n = {n})"),
        };

        let mut counters = crate::OpCounters::new();
        let mut heap = Heap::build(values.clone(), order, &mut counters);
        if !is_heap(heap.as_slice(), heap.len(), order) {
            return Err(fail("build"));
        }
        for _ in 0..rng.gen_range(0..=16) {
            heap.push(rng.gen_range(0..range), &mut counters);
            if !heap.is_valid() {
                return Err(fail("push"));
            }
        }
        if !heap.is_empty() {
            let i = rng.gen_range(0..heap.len());
            heap.remove_at(i, &mut counters)?;
            if !heap.is_valid() {
                return Err(fail("remove_at"));
            }
        }
        let mut last = None;
        while !heap.is_empty() {
            let x = heap.pop_root(&mut counters)?;
            if !heap.is_valid() {
                return Err(fail("pop_root"));
            }
            if let Some(prev) = last {
                if order.dominates(&x, &prev) {
                    return Err(fail("pop_root order"));
                }
            }
            last = Some(x);
        }
        runs += 1;
    }
    Ok(SuiteSummary { inputs: heaps, runs })
}
