//! The six comparison baselines, plus a single dispatcher that also covers
//! heapsort.

mod bubble;
mod bucket;
mod insertion;
mod merge;
mod quick;
mod radix;

use std::fmt;
use std::str::FromStr;

pub use bubble::bubble_sort;
pub use bucket::bucket_sort;
pub use insertion::insertion_sort;
pub use merge::merge_sort;
pub use quick::{quicksort, PivotRule};
pub use radix::{radix_sort, RadixPlan};

use crate::element::{Keyed, SortOrder};
use crate::error::{Error, Result};
use crate::instrumentation::OpCounters;
use crate::uhs::uhs_sort;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmId {
    Insertion,
    Merge,
    Quick,
    Bucket,
    Radix,
    Bubble,
    Uhs,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 7] = [
        AlgorithmId::Insertion,
        AlgorithmId::Merge,
        AlgorithmId::Quick,
        AlgorithmId::Bucket,
        AlgorithmId::Radix,
        AlgorithmId::Bubble,
        AlgorithmId::Uhs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Insertion => "insertion",
            AlgorithmId::Merge => "merge",
            AlgorithmId::Quick => "quick",
            AlgorithmId::Bucket => "bucket",
            AlgorithmId::Radix => "radix",
            AlgorithmId::Bubble => "bubble",
            AlgorithmId::Uhs => "uhs",
        }
    }

    /// Row label used in the reproduced tables.
    pub fn display_name(self) -> &'static str {
        match self {
            AlgorithmId::Insertion => "Insertion sort",
            AlgorithmId::Merge => "Merge sort",
            AlgorithmId::Quick => "Quicksort",
            AlgorithmId::Bucket => "Bucket sort",
            AlgorithmId::Radix => "Radix sort",
            AlgorithmId::Bubble => "Bubble sort",
            AlgorithmId::Uhs => "Heapsort",
        }
    }

    /// Whether the algorithm is expected to keep equal keys in input order.
    pub fn expected_stable(self) -> bool {
        !matches!(self, AlgorithmId::Quick | AlgorithmId::Uhs)
    }

    /// Bucket sort is the only algorithm that needs decimal keys.
    pub fn needs_unit_keys(self) -> bool {
        self == AlgorithmId::Bucket
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "insertion" => Ok(AlgorithmId::Insertion),
            "merge" => Ok(AlgorithmId::Merge),
            "quick" | "quicksort" => Ok(AlgorithmId::Quick),
            "bucket" => Ok(AlgorithmId::Bucket),
            "radix" => Ok(AlgorithmId::Radix),
            "bubble" => Ok(AlgorithmId::Bubble),
            "uhs" | "heap" | "heapsort" => Ok(AlgorithmId::Uhs),
            _ => Err(Error::domain(format!("unknown algorithm {s:?}"))),
        }
    }
}

impl FromStr for PivotRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "last" => Ok(PivotRule::LastElement),
            "median3" | "median-of-three" => Ok(PivotRule::MedianOfThree),
            "random" => Ok(PivotRule::RandomSeeded),
            _ => Err(Error::domain(format!("unknown pivot rule {s:?}"))),
        }
    }
}

/// Per-algorithm knobs. Fields irrelevant to the chosen algorithm are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SortConfig {
    pub pivot: PivotRule,
    pub seed: u64,
    /// `None` picks a byte-wise plan sized to the largest key.
    pub radix: Option<RadixPlan>,
    /// `None` uses one bucket per element.
    pub bucket_count: Option<usize>,
}

impl SortConfig {
    pub fn with_pivot(pivot: PivotRule) -> Self {
        SortConfig {
            pivot,
            ..Self::default()
        }
    }
}

/// Sorts `elements` in place with `algorithm`, charging `counters`.
pub fn sort_with<T: Keyed>(
    algorithm: AlgorithmId,
    elements: &mut [T],
    order: SortOrder,
    config: &SortConfig,
    counters: &mut OpCounters,
) -> Result<()> {
    match algorithm {
        AlgorithmId::Insertion => insertion_sort(elements, order, counters),
        AlgorithmId::Merge => merge_sort(elements, order, counters),
        AlgorithmId::Quick => quicksort(elements, order, counters, config.pivot, config.seed),
        AlgorithmId::Bucket => bucket_sort(elements, order, counters, config.bucket_count)?,
        AlgorithmId::Radix => radix_sort(elements, order, counters, config.radix)?,
        AlgorithmId::Bubble => bubble_sort(elements, order, counters),
        AlgorithmId::Uhs => uhs_sort(elements, order, counters),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in AlgorithmId::ALL {
            assert_eq!(a.name().parse::<AlgorithmId>().unwrap(), a);
        }
        assert!("shell".parse::<AlgorithmId>().is_err());
        assert_eq!("Random".parse::<PivotRule>().unwrap(), PivotRule::RandomSeeded);
    }

    #[test]
    fn stability_expectations_follow_the_table() {
        let unstable: Vec<_> = AlgorithmId::ALL
            .into_iter()
            .filter(|a| !a.expected_stable())
            .collect();
        assert_eq!(unstable, [AlgorithmId::Quick, AlgorithmId::Uhs]);
    }
}
