//! Batch experiment harness: generates random deployments, runs a planner
//! per trial, simulates the outcome, and writes CSV metrics plus a JSON
//! summary. All randomness is seeded, and the emitted files carry no
//! timestamps or paths, so a config and seed pin the output bytes exactly.

use crate::engine::{simulate, SimulationResult};
use crate::lrdc::{round_lrdc, solve_lrdc_lp, LrdcError};
use crate::model::{Area, Charger, Node, PhysicsParams, RadiusAssignment, Scenario};
use crate::planners::{
    charging_oriented, exhaustive_search, iterative_lrec, PlannerConfig,
};
use crate::radiation::{self, RadiationKernel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Planner {
    IterativeLrec,
    ChargingOriented,
    IpLrdc,
    Exhaustive,
}

impl Planner {
    pub fn name(self) -> &'static str {
        match self {
            Planner::IterativeLrec => "iterative-lrec",
            Planner::ChargingOriented => "charging-oriented",
            Planner::IpLrdc => "ip-lrdc",
            Planner::Exhaustive => "exhaustive",
        }
    }
}

/// Experiment description, loadable from JSON. Every field has a default,
/// so `{}` is a valid config.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    #[serde(rename = "n")]
    pub node_count: usize,
    #[serde(rename = "m")]
    pub charger_count: usize,
    pub area: Area,
    pub params: PhysicsParams,
    pub trials: usize,
    pub planner: Planner,
    pub planner_config: PlannerConfig,
    pub charger_energy: f64,
    pub node_capacity: f64,
    pub kernel: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
    pub seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            node_count: 100,
            charger_count: 10,
            area: Area::new(0.0, 0.0, 10.0, 10.0),
            params: PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 0.1, rho: 0.2 },
            trials: 100,
            planner: Planner::IterativeLrec,
            planner_config: PlannerConfig::default(),
            charger_energy: 1.0,
            node_capacity: 1.0,
            kernel: "default-eq3".to_string(),
            out_dir: None,
            seed: 0,
        }
    }
}

/// Uniform random deployment: charger positions are drawn first, then node
/// positions, all from one stream keyed by `seed`.
pub fn generate_scenario(
    node_count: usize,
    charger_count: usize,
    area: Area,
    params: PhysicsParams,
    charger_energy: f64,
    node_capacity: f64,
    seed: u64,
) -> Scenario {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chargers = (0..charger_count)
        .map(|id| Charger {
            id,
            position: area.sample(&mut rng),
            initial_energy: charger_energy,
        })
        .collect();
    let nodes = (0..node_count)
        .map(|id| Node {
            id,
            position: area.sample(&mut rng),
            initial_capacity: node_capacity,
        })
        .collect();
    Scenario { params, area, chargers, nodes }
}

/// One planned and simulated deployment.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub radii: RadiusAssignment,
    pub simulation: SimulationResult,
    /// Sampled peak exposure of the planned radii with every charger on.
    pub max_radiation: f64,
    /// Objective after each round, for the iterative planner.
    pub trace: Option<Vec<f64>>,
    /// Credited energy under the disjoint-assignment model, for ip-lrdc.
    pub model_objective: Option<f64>,
}

pub fn run_single_trial(
    scenario: &Scenario,
    planner: Planner,
    config: &PlannerConfig,
    kernel: &dyn RadiationKernel,
) -> Result<TrialOutcome, LrdcError> {
    let (radii, trace, model_objective) = match planner {
        Planner::IterativeLrec => {
            let outcome = iterative_lrec(scenario, config, kernel);
            (outcome.radii, Some(outcome.trace), None)
        }
        Planner::ChargingOriented => (charging_oriented(scenario), None, None),
        Planner::IpLrdc => {
            let lp = solve_lrdc_lp(scenario)?;
            let assignment = round_lrdc(scenario, &lp.x);
            (assignment.radii, None, Some(assignment.objective))
        }
        Planner::Exhaustive => {
            let (radii, _) = exhaustive_search(scenario, config, kernel);
            (radii, None, None)
        }
    };
    let simulation = simulate(scenario, &radii);
    let estimate = radiation::max_radiation(
        scenario,
        &radii,
        &radiation::all_active(scenario.charger_count()),
        config.radiation_samples,
        config.seed,
        kernel,
    );
    Ok(TrialOutcome {
        radii,
        simulation,
        max_radiation: estimate.max_value,
        trace,
        model_objective,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub trial: usize,
    pub scenario_seed: u64,
    pub outcome: TrialOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub records: Vec<TrialRecord>,
    pub failures: Vec<TrialFailure>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown radiation kernel {0:?}")]
    UnknownKernel(String),
}

/// Runs every trial. Trial `t` generates its deployment from
/// `seed + t` and plans with `planner_config.seed + t`, so trials are
/// independent of each other and of the trial count.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let kernel = radiation::kernel_by_name(&config.kernel)
        .ok_or_else(|| HarnessError::UnknownKernel(config.kernel.clone()))?;
    let mut records = Vec::with_capacity(config.trials);
    let mut failures = Vec::new();
    for trial in 0..config.trials {
        let scenario_seed = config.seed.wrapping_add(trial as u64);
        let scenario = generate_scenario(
            config.node_count,
            config.charger_count,
            config.area,
            config.params,
            config.charger_energy,
            config.node_capacity,
            scenario_seed,
        );
        let mut planner_config = config.planner_config;
        planner_config.seed = config.planner_config.seed.wrapping_add(trial as u64);
        match run_single_trial(&scenario, config.planner, &planner_config, kernel.as_ref()) {
            Ok(outcome) => records.push(TrialRecord { trial, scenario_seed, outcome }),
            Err(e) => failures.push(TrialFailure { trial, message: e.to_string() }),
        }
    }
    Ok(ExperimentReport { config: config.clone(), records, failures })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryStats {
    pub mean: f64,
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
    pub min: f64,
    pub max: f64,
}

impl SummaryStats {
    fn from_values(values: &[f64]) -> Option<SummaryStats> {
        if values.is_empty() {
            return None;
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("metrics are finite"));
        Some(SummaryStats {
            mean: sorted.iter().sum::<f64>() / sorted.len() as f64,
            median: quantile(&sorted, 0.5),
            q1: quantile(&sorted, 0.25),
            q3: quantile(&sorted, 0.75),
            min: sorted[0],
            max: sorted[sorted.len() - 1],
        })
    }
}

fn quantile(sorted: &[f64], p: f64) -> f64 {
    let pos = p * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

#[derive(Serialize)]
struct TrialSummary {
    trial: usize,
    objective: f64,
    completion_time: f64,
    max_radiation: f64,
    radii: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    model_objective: Option<f64>,
}

#[derive(Serialize)]
struct ExperimentSummary {
    planner: &'static str,
    trials: usize,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    objective: Option<SummaryStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    completion_time: Option<SummaryStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_radiation: Option<SummaryStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    model_objective: Option<SummaryStats>,
    failures: Vec<TrialFailure>,
    per_trial: Vec<TrialSummary>,
}

/// Writes `efficiency.csv`, `radiation.csv`, `balance.csv`, and
/// `summary.json` under `out_dir`, creating it if needed.
pub fn emit_metrics(report: &ExperimentReport, out_dir: &Path) -> std::io::Result<()> {
    fs::create_dir_all(out_dir)?;

    let mut efficiency = BufWriter::new(fs::File::create(out_dir.join("efficiency.csv"))?);
    writeln!(efficiency, "trial,time,cumulative_energy")?;
    for record in &report.records {
        let sim = &record.outcome.simulation;
        for (k, snapshot) in sim.state_snapshots.iter().enumerate() {
            writeln!(efficiency, "{},{},{}", record.trial, snapshot.time, sim.spent_at(k))?;
        }
    }
    efficiency.flush()?;

    let mut radiation_csv = BufWriter::new(fs::File::create(out_dir.join("radiation.csv"))?);
    writeln!(radiation_csv, "trial,max_radiation,rho")?;
    for record in &report.records {
        writeln!(
            radiation_csv,
            "{},{},{}",
            record.trial, record.outcome.max_radiation, report.config.params.rho
        )?;
    }
    radiation_csv.flush()?;

    let mut balance = BufWriter::new(fs::File::create(out_dir.join("balance.csv"))?);
    writeln!(balance, "trial,node_rank,final_energy")?;
    for record in &report.records {
        let sim = &record.outcome.simulation;
        let mut received: Vec<f64> = sim
            .final_state
            .node_residual_capacity
            .iter()
            .map(|&residual| report.config.node_capacity - residual)
            .collect();
        received.sort_by(|a, b| a.partial_cmp(b).expect("energies are finite"));
        for (rank, energy) in received.iter().enumerate() {
            writeln!(balance, "{},{},{}", record.trial, rank + 1, energy)?;
        }
    }
    balance.flush()?;

    let metric = |f: fn(&TrialRecord) -> f64| -> Vec<f64> {
        report.records.iter().map(f).collect()
    };
    let model_values: Vec<f64> = report
        .records
        .iter()
        .filter_map(|r| r.outcome.model_objective)
        .collect();
    let summary = ExperimentSummary {
        planner: report.config.planner.name(),
        trials: report.config.trials,
        seed: report.config.seed,
        objective: SummaryStats::from_values(&metric(|r| r.outcome.simulation.objective)),
        completion_time: SummaryStats::from_values(
            &metric(|r| r.outcome.simulation.completion_time),
        ),
        max_radiation: SummaryStats::from_values(&metric(|r| r.outcome.max_radiation)),
        model_objective: SummaryStats::from_values(&model_values),
        failures: report.failures.clone(),
        per_trial: report
            .records
            .iter()
            .map(|r| TrialSummary {
                trial: r.trial,
                objective: r.outcome.simulation.objective,
                completion_time: r.outcome.simulation.completion_time,
                max_radiation: r.outcome.max_radiation,
                radii: r.outcome.radii.radii.clone(),
                trace: r.outcome.trace.clone(),
                model_objective: r.outcome.model_objective,
            })
            .collect(),
    };
    let json = serde_json::to_string_pretty(&summary).expect("summary serialization cannot fail");
    fs::write(out_dir.join("summary.json"), json + "\n")?;
    Ok(())
}
