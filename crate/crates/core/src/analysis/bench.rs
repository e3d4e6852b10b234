use std::io::{self, Write};
use std::time::Instant;

use crate::analysis::workload::{case_seed, Dataset, Distribution};
use crate::baselines::{AlgorithmId, SortConfig};
use crate::element::{is_sorted_by_key, Keyed, SortOrder};
use crate::error::{Error, Result};
use crate::instrumentation::{counted_sort, OpCounters};

pub const CSV_HEADER: &str =
    "algorithm,n,distribution,trial,comparisons,swaps,element_moves,aux_peak_slots,recursion_peak,wall_nanos";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BenchCase {
    pub algorithm: AlgorithmId,
    pub n: usize,
    pub distribution: Distribution,
    pub trial: usize,
}

/// One measured run. `wall_nanos` is informational only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRecord {
    pub algorithm: AlgorithmId,
    pub n: usize,
    pub distribution: Distribution,
    pub trial: usize,
    pub counters: OpCounters,
    pub wall_nanos: u128,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        let c = &self.counters;
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.algorithm,
            self.n,
            self.distribution,
            self.trial,
            c.comparisons,
            c.swaps,
            c.element_moves,
            c.aux_peak_slots,
            c.recursion_peak,
            self.wall_nanos
        )
    }
}

/// The cartesian product of a sweep, in `(algorithm, n, distribution,
/// trial)` order.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchPlan {
    pub algorithms: Vec<AlgorithmId>,
    pub sizes: Vec<usize>,
    pub distributions: Vec<Distribution>,
    pub trials: usize,
    pub seed: u64,
    pub config: SortConfig,
}

impl BenchPlan {
    pub fn cases(&self) -> Vec<BenchCase> {
        let mut cases = Vec::with_capacity(
            self.algorithms.len() * self.sizes.len() * self.distributions.len() * self.trials,
        );
        for &algorithm in &self.algorithms {
            for &n in &self.sizes {
                for &distribution in &self.distributions {
                    for trial in 0..self.trials {
                        cases.push(BenchCase {
                            algorithm,
                            n,
                            distribution,
                            trial,
                        });
                    }
                }
            }
        }
        cases
    }

    pub fn run(&self) -> Result<Vec<BenchRecord>> {
        self.cases()
            .into_iter()
            .map(|case| run_case(case, self.seed, &self.config))
            .collect()
    }
}

/// Generates the case's dataset, sorts it ascending with fresh counters, and
/// checks the output order.
///
/// The dataset depends on `(seed, n, distribution, trial)` only, so every
/// algorithm in a sweep sees the same input. Randomised pivots are seeded
/// from the same identity.
pub fn run_case(case: BenchCase, seed: u64, config: &SortConfig) -> Result<BenchRecord> {
    let data_seed = case_seed(
        seed,
        &[case.n as u64, case.distribution as u64, case.trial as u64],
    );
    let dataset = Dataset::generate(case.distribution, case.n, data_seed);
    let config = SortConfig {
        seed: data_seed,
        ..*config
    };
    let (counters, wall_nanos) = if case.algorithm.needs_unit_keys() {
        timed_sort(case, dataset.unit_keys(), &config)?
    } else {
        timed_sort(case, dataset.integer_keys(), &config)?
    };
    Ok(BenchRecord {
        algorithm: case.algorithm,
        n: case.n,
        distribution: case.distribution,
        trial: case.trial,
        counters,
        wall_nanos,
    })
}

fn timed_sort<T: Keyed>(case: BenchCase, keys: Vec<T>, config: &SortConfig) -> Result<(OpCounters, u128)> {
    let start = Instant::now();
    let (sorted, counters) = counted_sort(case.algorithm, keys, SortOrder::Ascending, config)?;
    let wall = start.elapsed().as_nanos();
    if !is_sorted_by_key(&sorted, SortOrder::Ascending) {
        return Err(Error::ReproductionFailure(format!(
            "{} produced unsorted output for n = {} ({})",
            case.algorithm, case.n, case.distribution
        )));
    }
    Ok((counters, wall))
}

pub fn write_csv<W: Write>(out: &mut W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartesian_order() {
        let plan = BenchPlan {
            algorithms: vec![AlgorithmId::Uhs, AlgorithmId::Merge],
            sizes: vec![8, 16],
            distributions: vec![Distribution::Random, Distribution::Sorted],
            trials: 3,
            seed: 0,
            config: SortConfig::default(),
        };
        let cases = plan.cases();
        assert_eq!(cases.len(), 2 * 2 * 2 * 3);
        assert_eq!(cases[0].algorithm, AlgorithmId::Uhs);
        assert_eq!(cases[1].trial, 1);
        assert_eq!(cases[3].distribution, Distribution::Sorted);
    }

    #[test]
    fn csv_shape() {
        let plan = BenchPlan {
            algorithms: vec![AlgorithmId::Bucket],
            sizes: vec![100],
            distributions: vec![Distribution::Uniform01],
            trials: 1,
            seed: 0,
            config: SortConfig::default(),
        };
        let records = plan.run().unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("bucket,100,uniform01,0,"));
        assert_eq!(lines[1].split(',').count(), 10);
    }

    #[test]
    fn heapsort_doubling_ratio() {
        let config = SortConfig::default();
        let case = |n| BenchCase {
            algorithm: AlgorithmId::Uhs,
            n,
            distribution: Distribution::Random,
            trial: 0,
        };
        for n in [1usize << 10, 1 << 12, 1 << 14] {
            let a = run_case(case(n), 0, &config).unwrap().counters.comparisons as f64;
            let b = run_case(case(2 * n), 0, &config).unwrap().counters.comparisons as f64;
            let ratio = b / a;
            assert!((1.9..=2.4).contains(&ratio), "n = {n}: {ratio}");
        }
    }
}
