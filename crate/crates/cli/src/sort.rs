use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use uhs_core::instrumentation::counted_sort;
use uhs_core::{AlgorithmId, Decimal, SortConfig, SortKey, SortOrder};

use crate::args::SortArgs;
use crate::CliError;

pub fn run(args: SortArgs) -> Result<(), CliError> {
    if args.algorithm.needs_unit_keys() && !args.float {
        return Err(CliError::Input(format!(
            "{} sort needs decimal keys in [0, 1); pass --float",
            args.algorithm
        )));
    }
    let text = read_input(&args.input)?;
    let config = SortConfig {
        pivot: args.pivot,
        seed: args.seed,
        ..SortConfig::default()
    };
    let order = args.order.into();
    if args.float {
        sort_values::<Decimal>(&text, args.algorithm, order, &config, &args.output, args.stats)
    } else {
        sort_values::<i64>(&text, args.algorithm, order, &config, &args.output, args.stats)
    }
}

fn sort_values<K: SortKey + FromStr>(
    text: &str,
    algorithm: AlgorithmId,
    order: SortOrder,
    config: &SortConfig,
    output: &Path,
    stats: bool,
) -> Result<(), CliError> {
    let keys = parse_lines::<K>(text)?;
    let (sorted, counters) = counted_sort(algorithm, keys, order, config)?;
    let mut body = String::new();
    for k in &sorted {
        body.push_str(&k.to_string());
        body.push('\n');
    }
    write_output(output, body.as_bytes())?;
    if stats {
        eprintln!("{algorithm}: {counters}");
    }
    Ok(())
}

/// One value per line; surrounding whitespace and blank lines are ignored.
fn parse_lines<K: FromStr>(text: &str) -> Result<Vec<K>, CliError> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty())
        .map(|(number, line)| {
            line.parse()
                .map_err(|_| CliError::Input(format!("line {number}: cannot parse {line:?}")))
        })
        .collect()
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))
    }
}

/// Writes `bytes` to a file, or to standard output for `-`.
pub fn write_output(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let result = if path == Path::new("-") {
        let mut out = BufWriter::new(io::stdout().lock());
        out.write_all(bytes).and_then(|()| out.flush())
    } else {
        fs::write(path, bytes)
    };
    result.map_err(|e| CliError::Failure(format!("writing {}: {e}", path.display())))
}
