use uhs_core::analysis::{
    differential_inputs, differential_suite, dynamic_scenario, generate_workload,
    heap_property_suite, reproduce_tables, tables_report,
};
use uhs_core::heap::set_child_selection_fault;
use uhs_core::instrumentation::build_cost_audit;
use uhs_core::SortConfig;

use crate::args::VerifyArgs;
use crate::CliError;

const CHECKS: [&str; 5] = ["build-cost", "heap-invariants", "dynamic", "differential", "tables"];

pub fn run(args: VerifyArgs) -> Result<(), CliError> {
    let selected: Vec<&str> = match &args.only {
        None => CHECKS.to_vec(),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| {
                CHECKS
                    .iter()
                    .copied()
                    .find(|c| *c == name)
                    .ok_or_else(|| {
                        CliError::Input(format!(
                            "unknown check {name:?}; expected one of {}",
                            CHECKS.join(", ")
                        ))
                    })
            })
            .collect::<Result<_, _>>()?,
    };
    if args.inject_fault {
        set_child_selection_fault(true);
    }

    let mut failed = Vec::new();
    for name in selected {
        match run_check(name, args.seed, args.report) {
            Ok(summary) => println!("PASS {name}: {summary}"),
            Err(detail) => {
                println!("FAIL {name}: {detail}");
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failure(format!("failed checks: {}", failed.join(", "))))
    }
}

fn run_check(name: &str, seed: u64, report: bool) -> Result<String, String> {
    match name {
        "build-cost" => {
            let sizes: Vec<usize> = (10..=20).step_by(2).map(|p| 1 << p).collect();
            let audit = build_cost_audit(&sizes, seed).map_err(|e| e.to_string())?;
            Ok(format!(
                "{} sizes up to n = {}, max comparisons/n = {:.4}",
                audit.rows.len(),
                sizes[sizes.len() - 1],
                audit.max_ratio()
            ))
        }
        "heap-invariants" => {
            let s = heap_property_suite(2_000, 512, seed).map_err(|e| e.to_string())?;
            Ok(format!("{} heaps built, mutated and drained", s.runs))
        }
        "dynamic" => {
            let ops = generate_workload(10_000, 0.6, seed);
            let trace = dynamic_scenario(&ops).map_err(|e| e.to_string())?;
            if trace.heap_comparisons() >= trace.oracle_shifts() {
                return Err(format!(
                    "heap comparisons {} not below sorted-list shifts {}",
                    trace.heap_comparisons(),
                    trace.oracle_shifts()
                ));
            }
            Ok(format!(
                "{} ops agree with the sorted-list oracle; heap comparisons {} < list shifts {}",
                ops.len(),
                trace.heap_comparisons(),
                trace.oracle_shifts()
            ))
        }
        "differential" => {
            let inputs = differential_inputs(10_000, 512, seed);
            let s = differential_suite(&inputs, &SortConfig::default()).map_err(|e| e.to_string())?;
            Ok(format!("{} inputs, {} sorts agree with the reference", s.inputs, s.runs))
        }
        "tables" => {
            let result = if report { tables_report(seed) } else { reproduce_tables(seed) };
            let r = result.map_err(|e| e.to_string())?;
            if report {
                print!("{}", r.render_text());
            }
            let mismatches = r.mismatches();
            if !mismatches.is_empty() {
                let names: Vec<String> = mismatches
                    .iter()
                    .map(|c| format!("{} {} {}", c.table.title(), c.algorithm, c.column))
                    .collect();
                return Err(format!("mismatched cells: {}", names.join("; ")));
            }
            let discrepancies = r
                .cells
                .iter()
                .filter(|c| matches!(c.status, uhs_core::analysis::CellStatus::Discrepancy(_)))
                .count();
            Ok(format!(
                "{} cells reproduced, {discrepancies} declared discrepancy",
                r.cells.len()
            ))
        }
        other => unreachable!("unchecked name {other}"),
    }
}
