use rayon::prelude::*;

use uhs_core::instrumentation::{stability_check, StabilityVerdict};
use uhs_core::SortConfig;

use crate::args::{parse_algorithm_list, StabilityArgs};
use crate::CliError;

pub fn run(args: StabilityArgs) -> Result<(), CliError> {
    let algorithms = parse_algorithm_list(&args.algorithms).map_err(CliError::Input)?;
    let config = SortConfig::with_pivot(args.pivot);
    let verdicts = algorithms
        .par_iter()
        .map(|&a| stability_check(a, args.trials, args.max_n, args.seed, &config).map(|v| (a, v)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut unexpected = Vec::new();
    for (algorithm, verdict) in &verdicts {
        match verdict {
            StabilityVerdict::StableOverTrials(n) => println!("{algorithm}: STABLE(trials={n})"),
            StabilityVerdict::UnstableWitness(w) => {
                println!("{algorithm}: UNSTABLE witness={}", w.render(*algorithm))
            }
        }
        if verdict.is_stable() != algorithm.expected_stable() {
            unexpected.push(algorithm.name());
        }
    }
    if unexpected.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failure(format!(
            "stability differs from the expected table for: {}",
            unexpected.join(", ")
        )))
    }
}
