//! Operation counting, auxiliary-space metering, the stability prover, and
//! the heap build-cost audit.

mod counters;
mod stability;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use counters::OpCounters;
pub use stability::{
    stability_check, StabilityVerdict, StabilityWitness, EXHAUSTIVE_KEY_LEVELS, EXHAUSTIVE_MAX_LEN,
};

use crate::baselines::{sort_with, AlgorithmId, SortConfig};
use crate::element::{Keyed, SortOrder};
use crate::error::{Error, Result};
use crate::heap::{build_in_place, is_heap, HeapOrder};

/// Runs `algorithm` on `elements` with fresh counters.
pub fn counted_sort<T: Keyed>(
    algorithm: AlgorithmId,
    mut elements: Vec<T>,
    order: SortOrder,
    config: &SortConfig,
) -> Result<(Vec<T>, OpCounters)> {
    let mut counters = OpCounters::new();
    sort_with(algorithm, &mut elements, order, config, &mut counters)?;
    Ok((elements, counters.snapshot()))
}

/// Upper bound on bottom-up build comparisons for `n ≥ 1` elements.
pub fn build_comparison_bound(n: usize) -> u64 {
    2 * (n as u64).saturating_sub(1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuildAuditRow {
    pub n: usize,
    pub comparisons: u64,
    /// `comparisons / n`.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BuildAudit {
    pub rows: Vec<BuildAuditRow>,
}

impl BuildAudit {
    pub fn max_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(0.0, f64::max)
    }
}

/// Builds a max-heap from a seeded random permutation of `0..n` for each
/// `n` and checks that it took at most `2(n - 1)` comparisons.
pub fn build_cost_audit(n_values: &[usize], seed: u64) -> Result<BuildAudit> {
    let mut audit = BuildAudit::default();
    for &n in n_values {
        if n == 0 {
            return Err(Error::domain("build cost audit needs n ≥ 1"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
        let mut keys: Vec<i64> = (0..n as i64).collect();
        keys.shuffle(&mut rng);
        let mut counters = OpCounters::new();
        build_in_place(&mut keys, HeapOrder::MaxAtRoot, &mut counters);
        if !is_heap(&keys, n, HeapOrder::MaxAtRoot) {
            return Err(Error::ReproductionFailure(format!(
                "is_heap failed after building n = {n}"
            )));
        }
        let bound = build_comparison_bound(n);
        if counters.comparisons > bound {
            return Err(Error::AuditFailure {
                n,
                comparisons: counters.comparisons,
                bound,
            });
        }
        audit.rows.push(BuildAuditRow {
            n,
            comparisons: counters.comparisons,
            ratio: counters.comparisons as f64 / n as f64,
        });
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counted_sort_examples() {
        let config = SortConfig::default();
        let (out, c) = counted_sort(AlgorithmId::Uhs, Vec::<i64>::new(), SortOrder::Ascending, &config).unwrap();
        assert!(out.is_empty());
        assert_eq!(c, OpCounters::new());

        let (out, c) = counted_sort(AlgorithmId::Uhs, vec![5i64, 3, 8, 1], SortOrder::Ascending, &config).unwrap();
        assert_eq!(out, [1, 3, 5, 8]);
        assert!(c.comparisons > 0);
        assert_eq!(c.aux_peak_slots, 0);

        let input: Vec<i64> = (0..1000).map(|i| (i * 7919) % 1000).collect();
        let (_, c) = counted_sort(AlgorithmId::Merge, input, SortOrder::Ascending, &config).unwrap();
        assert_eq!(c.aux_peak_slots, 1000);
    }

    #[test]
    fn counted_sort_propagates_domain_errors() {
        let err = counted_sort(AlgorithmId::Radix, vec![-1i64], SortOrder::Ascending, &SortConfig::default());
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn counters_are_deterministic() {
        let input: Vec<i64> = (0..500).map(|i| (i * 31) % 97).collect();
        let config = SortConfig::with_pivot(crate::PivotRule::RandomSeeded);
        for a in AlgorithmId::ALL.into_iter().filter(|a| !a.needs_unit_keys()) {
            let first = counted_sort(a, input.clone(), SortOrder::Ascending, &config).unwrap();
            let second = counted_sort(a, input.clone(), SortOrder::Ascending, &config).unwrap();
            assert_eq!(first, second, "{a}");
        }
    }

    #[test]
    fn audit_small_and_doubling() {
        let audit = build_cost_audit(&[1], 0).unwrap();
        assert_eq!(audit.rows[0].comparisons, 0);
        assert_eq!(audit.rows[0].ratio, 0.0);

        let sizes: Vec<usize> = (10..=16).map(|p| 1 << p).collect();
        let audit = build_cost_audit(&sizes, 0).unwrap();
        assert!(audit.max_ratio() < 2.0);
        // Ratios settle toward a constant instead of growing like log n.
        let first = audit.rows.first().unwrap().ratio;
        let last = audit.rows.last().unwrap().ratio;
        assert!((last - first).abs() < 0.1, "{first} → {last}");

        assert!(build_cost_audit(&[0], 0).is_err());
    }
}
