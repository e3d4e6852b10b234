use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Decimal;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distribution {
    /// A shuffled permutation of `0..n`.
    Random,
    Sorted,
    Reversed,
    /// Independent draws from eight distinct keys.
    FewUnique,
    /// Independent uniform draws over `0..2^32`, i.e. `[0, 1)` for bucket sort.
    Uniform01,
    /// Distinct keys in descending order, all inside `[0, 1/n)`: with one
    /// bucket per element every key lands in the same bucket.
    Clustered,
}

pub const FEW_UNIQUE_KEYS: u64 = 8;

impl Distribution {
    pub const ALL: [Distribution; 6] = [
        Distribution::Random,
        Distribution::Sorted,
        Distribution::Reversed,
        Distribution::FewUnique,
        Distribution::Uniform01,
        Distribution::Clustered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Distribution::Random => "random",
            Distribution::Sorted => "sorted",
            Distribution::Reversed => "reversed",
            Distribution::FewUnique => "few-unique",
            Distribution::Uniform01 => "uniform01",
            Distribution::Clustered => "clustered",
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "random" => Ok(Distribution::Random),
            "sorted" => Ok(Distribution::Sorted),
            "reversed" => Ok(Distribution::Reversed),
            "few-unique" | "fewunique" => Ok(Distribution::FewUnique),
            "uniform01" => Ok(Distribution::Uniform01),
            "clustered" => Ok(Distribution::Clustered),
            _ => Err(Error::domain(format!("unknown distribution {s:?}"))),
        }
    }
}

/// Non-negative integer keys drawn from `0..domain`.
///
/// Integer sorts use the levels directly; bucket sort receives
/// `level / domain`, which lies in `[0, 1)` and keeps the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub levels: Vec<u64>,
    pub domain: u64,
}

impl Dataset {
    pub fn generate(distribution: Distribution, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n64 = n as u64;
        match distribution {
            Distribution::Random => {
                let mut levels: Vec<u64> = (0..n64).collect();
                levels.shuffle(&mut rng);
                Dataset { levels, domain: n64.max(1) }
            }
            Distribution::Sorted => Dataset {
                levels: (0..n64).collect(),
                domain: n64.max(1),
            },
            Distribution::Reversed => Dataset {
                levels: (0..n64).rev().collect(),
                domain: n64.max(1),
            },
            Distribution::FewUnique => Dataset {
                levels: (0..n).map(|_| rng.gen_range(0..FEW_UNIQUE_KEYS)).collect(),
                domain: FEW_UNIQUE_KEYS,
            },
            Distribution::Uniform01 => Dataset {
                levels: (0..n).map(|_| rng.gen::<u32>() as u64).collect(),
                domain: 1 << 32,
            },
            Distribution::Clustered => Dataset {
                levels: (0..n64).rev().collect(),
                domain: (n64 * n64).max(1),
            },
        }
    }

    pub fn integer_keys(&self) -> Vec<i64> {
        self.levels.iter().map(|&l| l as i64).collect()
    }

    pub fn unit_keys(&self) -> Vec<Decimal> {
        self.levels
            .iter()
            .map(|&l| Decimal::new(l as f64 / self.domain as f64).expect("finite ratio"))
            .collect()
    }
}

/// Mixes the parts of a case identity into one generator seed.
pub fn case_seed(seed: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(splitmix64(seed), |acc, &p| splitmix64(acc ^ p))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let d = Dataset::generate(Distribution::Sorted, 4, 0);
        assert_eq!(d.levels, [0, 1, 2, 3]);
        let d = Dataset::generate(Distribution::Reversed, 4, 0);
        assert_eq!(d.levels, [3, 2, 1, 0]);
        let mut d = Dataset::generate(Distribution::Random, 100, 7);
        d.levels.sort();
        assert_eq!(d.levels, (0..100).collect::<Vec<_>>());
        let d = Dataset::generate(Distribution::FewUnique, 100, 7);
        assert!(d.levels.iter().all(|&l| l < FEW_UNIQUE_KEYS));
        let d = Dataset::generate(Distribution::Clustered, 100, 7);
        assert!(d.unit_keys().iter().all(|k| k.value() < 0.01));
        assert_eq!(d.levels[0], 99);
    }

    #[test]
    fn unit_keys_stay_in_range() {
        for dist in Distribution::ALL {
            let d = Dataset::generate(dist, 257, 3);
            assert!(d.unit_keys().iter().all(|k| (0.0..1.0).contains(&k.value())));
        }
        assert!(Dataset::generate(Distribution::Random, 0, 0).unit_keys().is_empty());
    }

    #[test]
    fn seeded() {
        let a = Dataset::generate(Distribution::Uniform01, 50, case_seed(0, &[1, 2]));
        let b = Dataset::generate(Distribution::Uniform01, 50, case_seed(0, &[1, 2]));
        let c = Dataset::generate(Distribution::Uniform01, 50, case_seed(0, &[2, 1]));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn names_round_trip() {
        for d in Distribution::ALL {
            assert_eq!(d.name().parse::<Distribution>().unwrap(), d);
        }
    }
}
