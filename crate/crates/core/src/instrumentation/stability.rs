use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::baselines::{sort_with, AlgorithmId, SortConfig};
use crate::element::{Decimal, SortKey, SortOrder, TaggedElement};
use crate::error::Result;
use crate::instrumentation::OpCounters;

/// Largest input searched exhaustively, and the key alphabet used there.
pub const EXHAUSTIVE_MAX_LEN: usize = 6;
pub const EXHAUSTIVE_KEY_LEVELS: u64 = 3;

/// A concrete input whose sort puts two equal keys out of input order.
///
/// Keys are stored as integer levels in `0..domain`. Bucket sort sees them as
/// `level / domain`; every other algorithm sees the level itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityWitness {
    pub levels: Vec<u64>,
    pub domain: u64,
}

impl StabilityWitness {
    /// Re-sorts the witness and reports whether the inversion reproduces.
    pub fn replay(&self, algorithm: AlgorithmId, config: &SortConfig) -> Result<bool> {
        Ok(find_inversion(algorithm, &self.levels, self.domain, config)?.is_some())
    }

    /// The keys as the algorithm received them, comma separated.
    pub fn render(&self, algorithm: AlgorithmId) -> String {
        self.levels
            .iter()
            .map(|&l| {
                if algorithm.needs_unit_keys() {
                    unit_key(l, self.domain).to_string()
                } else {
                    l.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityVerdict {
    /// No inversion in the exhaustive search nor in this many random trials.
    StableOverTrials(usize),
    UnstableWitness(StabilityWitness),
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, StabilityVerdict::StableOverTrials(_))
    }
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityVerdict::StableOverTrials(t) => write!(f, "STABLE(trials={t})"),
            StabilityVerdict::UnstableWitness(w) => write!(f, "UNSTABLE witness={}", w.render(AlgorithmId::Uhs)),
        }
    }
}

fn unit_key(level: u64, domain: u64) -> Decimal {
    Decimal::new(level as f64 / domain as f64).expect("finite ratio")
}

/// Sorts tagged levels ascending and returns the first adjacent equal-key
/// pair whose origins came out reversed.
fn find_inversion(
    algorithm: AlgorithmId,
    levels: &[u64],
    domain: u64,
    config: &SortConfig,
) -> Result<Option<(usize, usize)>> {
    if algorithm.needs_unit_keys() {
        let keys: Vec<Decimal> = levels.iter().map(|&l| unit_key(l, domain)).collect();
        inversion_in(algorithm, &keys, config)
    } else {
        let keys: Vec<i64> = levels.iter().map(|&l| l as i64).collect();
        inversion_in(algorithm, &keys, config)
    }
}

fn inversion_in<K: SortKey>(
    algorithm: AlgorithmId,
    keys: &[K],
    config: &SortConfig,
) -> Result<Option<(usize, usize)>> {
    let mut tagged = TaggedElement::tag_all(keys);
    sort_with(algorithm, &mut tagged, SortOrder::Ascending, config, &mut OpCounters::new())?;
    Ok(tagged
        .windows(2)
        .find(|w| w[0].key == w[1].key && w[0].origin > w[1].origin)
        .map(|w| (w[0].origin, w[1].origin)))
}

/// Searches for an instability witness.
///
/// First every sequence of length up to [`EXHAUSTIVE_MAX_LEN`] over
/// [`EXHAUSTIVE_KEY_LEVELS`] keys, shortest first; then `trials` seeded
/// random inputs of length up to `max_n` with a narrow key range so
/// duplicates are common. A clean run is reported as stable over trials,
/// which is evidence, not proof.
pub fn stability_check(
    algorithm: AlgorithmId,
    trials: usize,
    max_n: usize,
    seed: u64,
    config: &SortConfig,
) -> Result<StabilityVerdict> {
    for len in 0..=EXHAUSTIVE_MAX_LEN {
        let total = EXHAUSTIVE_KEY_LEVELS.pow(len as u32);
        for code in 0..total {
            let mut rest = code;
            let levels: Vec<u64> = (0..len)
                .map(|_| {
                    let digit = rest % EXHAUSTIVE_KEY_LEVELS;
                    rest /= EXHAUSTIVE_KEY_LEVELS;
                    digit
                })
                .collect();
            if find_inversion(algorithm, &levels, EXHAUSTIVE_KEY_LEVELS, config)?.is_some() {
                return Ok(StabilityVerdict::UnstableWitness(StabilityWitness {
                    levels,
                    domain: EXHAUSTIVE_KEY_LEVELS,
                }));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let n = rng.gen_range(0..=max_n);
        let domain = rng.gen_range(1..=(n as u64 / 2).max(1) + 1);
        let levels: Vec<u64> = (0..n).map(|_| rng.gen_range(0..domain)).collect();
        if find_inversion(algorithm, &levels, domain, config)?.is_some() {
            return Ok(StabilityVerdict::UnstableWitness(StabilityWitness { levels, domain }));
        }
    }
    Ok(StabilityVerdict::StableOverTrials(trials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::PivotRule;

    #[test]
    fn heapsort_has_a_small_witness() {
        let config = SortConfig::default();
        let verdict = stability_check(AlgorithmId::Uhs, 10, 16, 0, &config).unwrap();
        let StabilityVerdict::UnstableWitness(w) = verdict else {
            panic!("heapsort reported stable");
        };
        assert!(w.levels.len() <= EXHAUSTIVE_MAX_LEN);
        assert!(w.replay(AlgorithmId::Uhs, &config).unwrap());
    }

    #[test]
    fn quicksort_unstable_under_deterministic_pivots() {
        for pivot in [PivotRule::LastElement, PivotRule::MedianOfThree] {
            let config = SortConfig::with_pivot(pivot);
            let verdict = stability_check(AlgorithmId::Quick, 10, 16, 0, &config).unwrap();
            assert!(!verdict.is_stable(), "{pivot:?}");
        }
    }

    #[test]
    fn stable_sorts_survive() {
        for a in [AlgorithmId::Insertion, AlgorithmId::Merge, AlgorithmId::Bubble, AlgorithmId::Bucket, AlgorithmId::Radix] {
            let verdict = stability_check(a, 500, 64, 0, &SortConfig::default()).unwrap();
            assert_eq!(verdict, StabilityVerdict::StableOverTrials(500), "{a}");
        }
    }

    #[test]
    fn witness_rendering() {
        let w = StabilityWitness {
            levels: vec![1, 0, 1],
            domain: 4,
        };
        assert_eq!(w.render(AlgorithmId::Uhs), "1,0,1");
        assert_eq!(w.render(AlgorithmId::Bucket), "0.25,0,0.25");
    }
}
