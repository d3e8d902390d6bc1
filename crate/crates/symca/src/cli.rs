//! Command-line driver.
//!
//! Four subcommands cover the pipeline: `build-table` turns a survey into
//! an interval table, `analyze` runs the full analysis, `plot` renders the
//! principal plane, and `verify` replays the randomized cross-check suites.
//! Identical arguments and inputs always produce identical output bytes.
//! Exit codes: 0 success, 1 validation error, 2 verification failure.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::error::Result;
use crate::io::{
    read_interval_table, read_result_json, read_survey_csv, write_interval_table_json,
    write_result_json, TableFormat,
};
use crate::plot::{render_result_svg, PlotSpec};
use crate::projection::symca;
use crate::table::interval_contingency;
use crate::verify::run_all;

/// Parsed invocation.
#[derive(Debug, Parser)]
#[command(
    name = "symca",
    about = "Correspondence analysis for multiple-selection categorical data",
    version
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the interval contingency table of a two-column survey
    BuildTable {
        /// Survey CSV: two header columns, multiple selections joined by `|`
        #[arg(long)]
        survey: PathBuf,
        /// Output table (JSON)
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Analyze an interval table and write the result document
    Analyze {
        /// Interval table, `.csv` or `.json` (detected by extension)
        #[arg(long)]
        table: PathBuf,
        /// Number of axes to retain (default: all non-trivial axes)
        #[arg(long)]
        axes: Option<usize>,
        /// Drop zero-margin rows and columns instead of rejecting them
        #[arg(long)]
        drop_empty: bool,
        /// Output result document (JSON)
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Render the principal plane of a result document as SVG
    Plot {
        /// Result document produced by `analyze`
        #[arg(long)]
        result: PathBuf,
        /// Axis pair to draw, e.g. `0,1`
        #[arg(long, default_value = "0,1")]
        axes: String,
        /// Output SVG
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Re-run the randomized cross-check suites
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Instances per suite
        #[arg(long, default_value_t = 200)]
        instances: usize,
        /// Largest individual count for generated surveys
        #[arg(long, default_value_t = 6)]
        max_individuals: usize,
        /// Completion-enumeration guard
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
}

/// Runs the CLI on the given arguments and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 1;
        }
    };
    match execute(config.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn table_format(path: &Path) -> TableFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("csv") => TableFormat::Csv,
        _ => TableFormat::Json,
    }
}

fn parse_axis_pair(raw: &str) -> Result<(usize, usize)> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| crate::Error::InvalidPlot(format!("invalid axis pair `{raw}`")))
    };
    match raw.split_once(',') {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => Err(crate::Error::InvalidPlot(format!(
            "expected two comma-separated axes, got `{raw}`"
        ))),
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::BuildTable { survey, output } => {
            let bytes = std::fs::read(&survey)?;
            let (x, y) = read_survey_csv(&bytes)?;
            let table = interval_contingency(&x, &y)?;
            std::fs::write(&output, write_interval_table_json(&table))?;
            eprintln!(
                "wrote {} ({}x{} table from {} individuals)",
                output.display(),
                table.n_rows(),
                table.n_cols(),
                x.individuals()
            );
            Ok(0)
        }
        Command::Analyze {
            table,
            axes,
            drop_empty,
            output,
        } => {
            let bytes = std::fs::read(&table)?;
            let mut t = read_interval_table(&bytes, table_format(&table))?;
            if drop_empty {
                let (reduced, dropped_rows, dropped_cols) = t.drop_empty()?;
                for label in &dropped_rows {
                    eprintln!("warning: dropped zero-margin row `{label}`");
                }
                for label in &dropped_cols {
                    eprintln!("warning: dropped zero-margin column `{label}`");
                }
                t = reduced;
            }
            let res = symca(&t, axes.unwrap_or(usize::MAX))?;
            std::fs::write(&output, write_result_json(&res))?;
            eprintln!(
                "wrote {} ({} axes, inertia {:.6})",
                output.display(),
                res.ca.n_axes,
                res.ca.eigenvalues.iter().sum::<f64>()
            );
            Ok(0)
        }
        Command::Plot {
            result,
            axes,
            output,
        } => {
            let bytes = std::fs::read(&result)?;
            let doc = read_result_json(&bytes)?;
            let (axis_a, axis_b) = parse_axis_pair(&axes)?;
            let spec = PlotSpec {
                axis_a,
                axis_b,
                ..PlotSpec::default()
            };
            let svg = render_result_svg(&doc, &spec)?;
            std::fs::write(&output, svg)?;
            eprintln!("wrote {}", output.display());
            Ok(0)
        }
        Command::Verify {
            seed,
            instances,
            max_individuals,
            limit,
        } => {
            let reports = run_all(seed, instances, max_individuals, limit);
            let mut ok = true;
            for report in &reports {
                println!("{}", report.summary_line());
                for failure in report.failures.iter().take(10) {
                    println!("  {failure}");
                }
                ok &= report.passed();
            }
            if ok {
                println!("verification passed");
                Ok(0)
            } else {
                println!("verification FAILED");
                Ok(2)
            }
        }
    }
}
