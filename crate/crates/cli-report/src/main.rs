use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cli_report::{render_json, render_markdown, run, Options, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "geocheck", about = "Exact-arithmetic check suites for the moduli toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite and print one line per check.
    Run {
        /// dm-tables, hassett-strata, cubic-pairs, hilbert-flatness,
        /// lattice, or all.
        suite: String,
        /// Marked points for the census checks (even, at least 6).
        #[arg(long, default_value_t = 8, value_name = "INT")]
        n: usize,
        /// Write the JSON report to this path.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write the markdown report to this path.
        #[arg(long, value_name = "PATH")]
        markdown: Option<PathBuf>,
        /// Tabulation bound for the Hilbert stabilization.
        #[arg(long, value_name = "INT")]
        degree_bound: Option<u32>,
        /// Include every per-point coefficient sum in stability details.
        #[arg(long)]
        epsilon_report: bool,
        /// Seed for the randomized property samples.
        #[arg(long, default_value_t = DEFAULT_SEED, value_name = "INT")]
        seed: u64,
        /// Worker threads for the check pool.
        #[arg(long, value_name = "INT")]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Run { suite, n, json, markdown, degree_bound, epsilon_report, seed, jobs } =
        cli.command;
    let options = Options { n_marks: n, degree_bound, epsilon_report, seed, jobs };
    let report = match run(&suite, &options) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("geocheck: {e}");
            return ExitCode::from(2);
        }
    };
    for check in &report.checks {
        println!("{} {}  {}", check.status, check.id, check.detail);
    }
    println!("{}", report.summary_line());
    if let Some(path) = json {
        if let Err(e) = fs::write(&path, render_json(&report)) {
            eprintln!("geocheck: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(path) = markdown {
        if let Err(e) = fs::write(&path, render_markdown(&report)) {
            eprintln!("geocheck: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
