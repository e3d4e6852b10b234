//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line
//! to standard error; the test fails if any criterion fails.
//!
//! Run with `cargo test -p uhs-cli --test acceptance -- --nocapture`.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use uhs_core::analysis::{
    differential_inputs, differential_suite, dynamic_scenario, generate_workload, growth_fit,
    tables_report, CellStatus, Dataset, Distribution, GrowthClass, TableId,
};
use uhs_core::instrumentation::{build_cost_audit, counted_sort, stability_check, StabilityVerdict};
use uhs_core::uhs::comparison_bound;
use uhs_core::{AlgorithmId, OpCounters, PivotRule, RadixPlan, SortConfig, SortOrder};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(algorithm: AlgorithmId, data: &Dataset, config: &SortConfig) -> Result<OpCounters, String> {
    let result = if algorithm.needs_unit_keys() {
        counted_sort(algorithm, data.unit_keys(), SortOrder::Ascending, config).map(|(_, c)| c)
    } else {
        counted_sort(algorithm, data.integer_keys(), SortOrder::Ascending, config).map(|(_, c)| c)
    };
    result.map_err(|e| format!("{algorithm}: {e}"))
}

fn uhs_bin(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_uhs"))
        .args(args)
        .output()
        .map_err(|e| format!("spawning uhs: {e}"))
}

fn build_cost_within_bound() -> Outcome {
    let sizes: Vec<usize> = (10..=20).step_by(2).map(|p| 1 << p).collect();
    let start = Instant::now();
    let audit = build_cost_audit(&sizes, 0).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for row in &audit.rows {
        ensure(row.comparisons <= 2 * (row.n as u64 - 1), || {
            format!("n = {}: {} comparisons", row.n, row.comparisons)
        })?;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "n = 2^10..2^20, max comparisons/n = {:.4}, {:.2?}",
        audit.max_ratio(),
        elapsed
    ))
}

fn heapsort_bound_and_growth() -> Outcome {
    let sizes: Vec<usize> = (10..=18).map(|p| 1 << p).collect();
    let mut fits = Vec::new();
    for dist in [Distribution::Random, Distribution::Sorted, Distribution::Reversed] {
        let mut points = Vec::new();
        for &n in &sizes {
            let data = Dataset::generate(dist, n, n as u64);
            let c = run(AlgorithmId::Uhs, &data, &SortConfig::default())?;
            let bound = comparison_bound(n);
            ensure(c.comparisons <= bound, || {
                format!("{dist} n = {n}: {} comparisons > bound {bound}", c.comparisons)
            })?;
            points.push((n as u64, c.comparisons as f64));
        }
        let fit = growth_fit(&points).map_err(|e| e.to_string())?;
        ensure(fit.class == GrowthClass::Linearithmic, || {
            format!("{dist} sweep fits {}", fit.class)
        })?;
        fits.push(format!("{dist} {}", fit.class));
    }
    Ok(format!("bound holds to 2^18; {}", fits.join(", ")))
}

fn quicksort_sorted_is_quadratic() -> Outcome {
    let last = SortConfig::with_pivot(PivotRule::LastElement);
    let c = run(AlgorithmId::Quick, &Dataset::generate(Distribution::Sorted, 1000, 0), &last)?;
    ensure(c.comparisons == 499_500, || format!("n = 1000: {} comparisons", c.comparisons))?;
    let mut points = Vec::new();
    for n in (8..=12).map(|p| 1usize << p) {
        let c = run(AlgorithmId::Quick, &Dataset::generate(Distribution::Sorted, n, 0), &last)?;
        points.push((n as u64, c.comparisons as f64));
    }
    let fit = growth_fit(&points).map_err(|e| e.to_string())?;
    ensure(fit.class == GrowthClass::Quadratic, || format!("fit {}", fit.class))?;
    Ok(format!("499500 comparisons at n = 1000; sorted sweep fits {}", fit.class))
}

fn space_usage() -> Outcome {
    let n = 4096usize;
    let data = Dataset::generate(Distribution::Random, n, 0);
    let aux = |a| run(a, &data, &SortConfig::default()).map(|c| c.aux_peak_slots);
    let n64 = n as u64;
    ensure(aux(AlgorithmId::Uhs)? == 0, || "uhs uses auxiliary slots".into())?;
    ensure(aux(AlgorithmId::Insertion)? == 0, || "insertion uses auxiliary slots".into())?;
    ensure(aux(AlgorithmId::Bubble)? == 0, || "bubble uses auxiliary slots".into())?;
    let merge = aux(AlgorithmId::Merge)?;
    ensure(merge == n64, || format!("merge aux {merge}"))?;
    let radix = aux(AlgorithmId::Radix)?;
    ensure(radix <= n64 + RadixPlan::DEFAULT_BASE, || format!("radix aux {radix}"))?;
    let bucket = aux(AlgorithmId::Bucket)?;
    ensure(bucket <= 2 * n64, || format!("bucket aux {bucket}"))?;

    let limit = 2.0 * (n as f64).log2();
    let mut deepest = 0;
    for trial in 0..100u64 {
        let config = SortConfig {
            pivot: PivotRule::RandomSeeded,
            seed: trial,
            ..SortConfig::default()
        };
        let data = Dataset::generate(Distribution::Random, n, 1000 + trial);
        deepest = deepest.max(run(AlgorithmId::Quick, &data, &config)?.recursion_peak);
    }
    ensure(deepest as f64 <= limit, || format!("quicksort depth {deepest} > {limit}"))?;

    let report = tables_report(0).map_err(|e| e.to_string())?;
    let cell = report
        .cells
        .iter()
        .find(|c| c.table == TableId::Space && c.algorithm == AlgorithmId::Quick)
        .ok_or("no quicksort space cell")?;
    let CellStatus::Discrepancy(why) = &cell.status else {
        return Err(format!("quicksort space cell is {}, not a declared discrepancy", cell.status));
    };
    Ok(format!(
        "merge {merge}, radix {radix}, bucket {bucket}; quicksort depth ≤ {deepest}; discrepancy: {why}"
    ))
}

fn stability_verdicts() -> Outcome {
    let config = SortConfig::default();
    let mut witnesses = Vec::new();
    for a in [AlgorithmId::Uhs, AlgorithmId::Quick] {
        match stability_check(a, 0, 64, 0, &config).map_err(|e| e.to_string())? {
            StabilityVerdict::UnstableWitness(w) => {
                ensure(w.replay(a, &config).map_err(|e| e.to_string())?, || {
                    format!("{a} witness does not replay")
                })?;
                witnesses.push(format!("{a} [{}]", w.render(a)));
            }
            v => return Err(format!("{a}: no exhaustive witness ({v})")),
        }
    }
    for a in [
        AlgorithmId::Insertion,
        AlgorithmId::Merge,
        AlgorithmId::Bubble,
        AlgorithmId::Bucket,
        AlgorithmId::Radix,
    ] {
        let v = stability_check(a, 10_000, 64, 0, &config).map_err(|e| e.to_string())?;
        ensure(v == StabilityVerdict::StableOverTrials(10_000), || format!("{a}: {v}"))?;
    }
    let out = uhs_bin(&["stability"])?;
    ensure(out.status.code() == Some(0), || {
        format!("stability command exited {:?}", out.status.code())
    })?;
    Ok(format!("witnesses {}; five stable sorts clean over 10^4 trials", witnesses.join(", ")))
}

fn differential_against_oracle() -> Outcome {
    let inputs = differential_inputs(10_000, 512, 0);
    let s = differential_suite(&inputs, &SortConfig::default()).map_err(|e| e.to_string())?;
    Ok(format!("{} inputs, {} sorts agree", s.inputs, s.runs))
}

fn dynamic_workload() -> Outcome {
    let ops = generate_workload(10_000, 0.6, 0);
    let trace = dynamic_scenario(&ops).map_err(|e| e.to_string())?;
    let (h, s) = (trace.heap_comparisons(), trace.oracle_shifts());
    ensure(h < s, || format!("heap comparisons {h} ≥ list shifts {s}"))?;
    Ok(format!("10^4 ops agree; heap comparisons {h} < list shifts {s}"))
}

fn bench_is_deterministic() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut csvs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.csv"));
        let out = uhs_bin(&[
            "bench",
            "--algorithms", "all",
            "--sizes", "2^6..2^10",
            "--distributions", "random,sorted,few-unique",
            "--trials", "2",
            "--seed", "7",
            "--pivot", "random",
            "--csv", path.to_str().unwrap(),
        ])?;
        ensure(out.status.success(), || format!("bench exited {:?}", out.status.code()))?;
        csvs.push(std::fs::read_to_string(&path).map_err(|e| e.to_string())?);
    }
    let strip = |csv: &str| -> Vec<String> {
        csv.lines()
            .map(|l| l.rsplit_once(',').map_or(l, |(head, _)| head).to_string())
            .collect()
    };
    let (a, b) = (strip(&csvs[0]), strip(&csvs[1]));
    ensure(a == b, || "runs differ outside wall_nanos".into())?;
    ensure(a.len() == 1 + 7 * 5 * 3 * 2, || format!("{} lines", a.len()))?;
    Ok(format!("{} rows identical apart from wall_nanos", a.len() - 1))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("AC1 heap build comparisons ≤ 2(n-1)", build_cost_within_bound),
        ("AC2 heapsort comparison bound and Θ(nlogn) growth", heapsort_bound_and_growth),
        ("AC3 last-element quicksort quadratic on sorted input", quicksort_sorted_is_quadratic),
        ("AC4 auxiliary space and recursion depth", space_usage),
        ("AC5 stability verdicts", stability_verdicts),
        ("AC6 differential agreement with the reference sort", differential_against_oracle),
        ("AC7 dynamic push/extract workload", dynamic_workload),
        ("AC8 deterministic bench output", bench_is_deterministic),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => writeln!(err, "[PASS] {name} ({secs:.2}s): {detail}"),
            Err(detail) => writeln!(err, "[FAIL] {name} ({secs:.2}s): {detail}"),
        }
        .unwrap();
        if outcome.is_err() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
