use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use uhs_core::analysis::Distribution;
use uhs_core::{AlgorithmId, PivotRule, SortOrder};

#[derive(Debug, Parser)]
#[command(name = "uhs", version, about = "Instrumented heapsort and baseline sorting lab")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sort newline-delimited values.
    Sort(SortArgs),
    /// Run a counted sweep and write CSV.
    Bench(BenchArgs),
    /// Search for instability witnesses and compare with the expected table.
    Stability(StabilityArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Asc,
    Desc,
}

impl From<OrderArg> for SortOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Asc => SortOrder::Ascending,
            OrderArg::Desc => SortOrder::Descending,
        }
    }
}

fn parse_algorithm(s: &str) -> Result<AlgorithmId, String> {
    s.parse().map_err(|e: uhs_core::Error| e.to_string())
}

fn parse_pivot(s: &str) -> Result<PivotRule, String> {
    s.parse().map_err(|e: uhs_core::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct SortArgs {
    #[arg(short, long, default_value = "uhs", value_parser = parse_algorithm)]
    pub algorithm: AlgorithmId,
    #[arg(long, value_enum, default_value = "asc")]
    pub order: OrderArg,
    /// Input file, or `-` for standard input.
    #[arg(short, long, default_value = "-")]
    pub input: PathBuf,
    /// Output file, or `-` for standard output.
    #[arg(short, long, default_value = "-")]
    pub output: PathBuf,
    /// Parse values as decimals instead of 64-bit integers.
    #[arg(long)]
    pub float: bool,
    /// Print a counter summary to standard error.
    #[arg(long)]
    pub stats: bool,
    /// Quicksort pivot rule: last, median3, or random.
    #[arg(long, default_value = "last", value_parser = parse_pivot)]
    pub pivot: PivotRule,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated algorithms, or `all`.
    #[arg(long, default_value = "all")]
    pub algorithms: String,
    /// Comma-separated sizes, or a doubling range such as `2^10..2^14`.
    #[arg(long, default_value = "2^10..2^14")]
    pub sizes: String,
    /// Comma-separated distributions.
    #[arg(long, default_value = "random")]
    pub distributions: String,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "last", value_parser = parse_pivot)]
    pub pivot: PivotRule,
    /// CSV destination, or `-` for standard output.
    #[arg(long, default_value = "-")]
    pub csv: PathBuf,
}

#[derive(Debug, Args)]
pub struct StabilityArgs {
    /// Comma-separated algorithms, or `all`.
    #[arg(long, default_value = "all")]
    pub algorithms: String,
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    /// Largest random input length.
    #[arg(long, default_value_t = 64)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "last", value_parser = parse_pivot)]
    pub pivot: PivotRule,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated subset of checks: build-cost, heap-invariants,
    /// tables, dynamic, differential.
    #[arg(long)]
    pub only: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print the reproduced tables.
    #[arg(long)]
    pub report: bool,
    /// Corrupt sift-down child selection to check that the suite notices.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Parses `all` or a comma list of algorithm names.
pub fn parse_algorithm_list(s: &str) -> Result<Vec<AlgorithmId>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(AlgorithmId::ALL.to_vec());
    }
    split_list(s).map(parse_algorithm).collect()
}

pub fn parse_distribution_list(s: &str) -> Result<Vec<Distribution>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(Distribution::ALL.to_vec());
    }
    split_list(s)
        .map(|d| d.parse().map_err(|e: uhs_core::Error| e.to_string()))
        .collect()
}

/// Parses `2^a..2^b` (doubling, inclusive) or a comma list whose items are
/// plain counts or `2^k`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = parse_power(lo)?;
        let hi = parse_power(hi)?;
        if lo > hi {
            return Err(format!("empty size range {s:?}"));
        }
        return Ok((lo..=hi).map(|p| 1usize << p).collect());
    }
    split_list(s)
        .map(|item| match item.strip_prefix("2^") {
            Some(_) => parse_power(item).map(|p| 1usize << p),
            None => item.parse().map_err(|_| format!("bad size {item:?}")),
        })
        .collect()
}

fn parse_power(s: &str) -> Result<u32, String> {
    let p: u32 = s
        .trim()
        .strip_prefix("2^")
        .ok_or_else(|| format!("expected 2^k, got {s:?}"))?
        .parse()
        .map_err(|_| format!("bad exponent in {s:?}"))?;
    if p >= usize::BITS - 1 {
        return Err(format!("exponent too large in {s:?}"));
    }
    Ok(p)
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}
