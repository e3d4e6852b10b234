use rayon::prelude::*;

use uhs_core::analysis::{run_case, write_csv, BenchPlan};
use uhs_core::SortConfig;

use crate::args::{parse_algorithm_list, parse_distribution_list, parse_sizes, BenchArgs};
use crate::sort::write_output;
use crate::CliError;

pub fn run(args: BenchArgs) -> Result<(), CliError> {
    let plan = BenchPlan {
        algorithms: parse_algorithm_list(&args.algorithms).map_err(CliError::Input)?,
        sizes: parse_sizes(&args.sizes).map_err(CliError::Input)?,
        distributions: parse_distribution_list(&args.distributions).map_err(CliError::Input)?,
        trials: args.trials,
        seed: args.seed,
        config: SortConfig::with_pivot(args.pivot),
    };
    if plan.trials == 0 {
        return Err(CliError::Input("--trials must be at least 1".into()));
    }
    // Cases run in parallel; `collect` keeps them in plan order.
    let records = plan
        .cases()
        .into_par_iter()
        .map(|case| run_case(case, plan.seed, &plan.config))
        .collect::<Result<Vec<_>, _>>()?;
    let mut csv = Vec::new();
    write_csv(&mut csv, &records).map_err(|e| CliError::Failure(e.to_string()))?;
    write_output(&args.csv, &csv)
}
