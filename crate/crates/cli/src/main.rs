//! Command line front end. Exit codes: 0 on success, 1 on bad input or
//! invalid data, 2 when an experiment ran but some trials failed.

use anyhow::Context;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use wet_radsim_core::harness::{emit_metrics, run_experiment, ExperimentConfig};
use wet_radsim_core::{fixtures, simulate, RadiusAssignment, Scenario};

#[derive(Parser)]
#[command(
    name = "wet-radsim",
    version,
    about = "Wireless charging simulation and planning under an exposure ceiling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a batch experiment from a JSON config and write CSV metrics.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config's deployment seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the config's output directory (default "out").
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Simulate one scenario with fixed radii and print the result as JSON.
    Simulate {
        #[arg(long)]
        scenario: PathBuf,
        /// JSON array with one radius per charger.
        #[arg(long)]
        radii: PathBuf,
    },
    /// Print a built-in scenario as JSON.
    Fixture { name: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Run { config, seed, out_dir } => run(&config, seed, out_dir),
        Command::Simulate { scenario, radii } => simulate_once(&scenario, &radii),
        Command::Fixture { name } => Ok(fixture(&name)),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(config_path: &PathBuf, seed: Option<u64>, out_dir: Option<PathBuf>) -> anyhow::Result<u8> {
    let text = fs::read_to_string(config_path)
        .with_context(|| format!("reading config {}", config_path.display()))?;
    let mut config: ExperimentConfig = serde_json::from_str(&text)
        .with_context(|| format!("parsing config {}", config_path.display()))?;
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(dir) = out_dir {
        config.out_dir = Some(dir);
    }
    let out = config.out_dir.clone().unwrap_or_else(|| PathBuf::from("out"));

    let report = run_experiment(&config).context("running experiment")?;
    emit_metrics(&report, &out)
        .with_context(|| format!("writing metrics to {}", out.display()))?;
    println!(
        "{} planner, {}/{} trials completed, metrics in {}",
        config.planner.name(),
        report.records.len(),
        config.trials,
        out.display()
    );
    for failure in &report.failures {
        eprintln!("trial {} failed: {}", failure.trial, failure.message);
    }
    Ok(if report.failures.is_empty() { 0 } else { 2 })
}

fn simulate_once(scenario_path: &PathBuf, radii_path: &PathBuf) -> anyhow::Result<u8> {
    let scenario_text = fs::read_to_string(scenario_path)
        .with_context(|| format!("reading scenario {}", scenario_path.display()))?;
    let scenario = Scenario::from_json(&scenario_text)
        .with_context(|| format!("parsing scenario {}", scenario_path.display()))?;
    let report = scenario.validate();
    if !report.is_valid() {
        eprint!("invalid scenario:\n{report}");
        return Ok(1);
    }

    let radii_text = fs::read_to_string(radii_path)
        .with_context(|| format!("reading radii {}", radii_path.display()))?;
    let radii: Vec<f64> = serde_json::from_str(&radii_text)
        .with_context(|| format!("parsing radii {}", radii_path.display()))?;
    let assignment = RadiusAssignment::new(radii);
    if let Err(reason) = assignment.validate_for(&scenario) {
        eprintln!("invalid radii: {reason}");
        return Ok(1);
    }

    let result = simulate(&scenario, &assignment);
    println!("{}", result.to_json_pretty());
    Ok(0)
}

fn fixture(name: &str) -> u8 {
    match fixtures::by_name(name) {
        Some(scenario) => {
            println!("{}", scenario.to_json_pretty());
            0
        }
        None => {
            eprintln!("unknown fixture {name:?}, available: fig1");
            1
        }
    }
}
