//! Radius planners. All of them produce one radius per charger and defer
//! exposure checking to sampled estimates over the deployment area.

use crate::engine::simulate;
use crate::lrdc::compute_frontiers;
use crate::model::{RadiusAssignment, Scenario};
use crate::radiation::{self, RadiationKernel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Knobs shared by the search planners.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PlannerConfig {
    /// Number of grid steps per charger radius.
    pub resolution: usize,
    /// Sample points per exposure estimate.
    pub radiation_samples: usize,
    /// Improvement rounds for the iterative planner.
    pub iterations: usize,
    pub seed: u64,
}

impl Default for PlannerConfig {
    fn default() -> Self {
        PlannerConfig { resolution: 250, radiation_samples: 1000, iterations: 160, seed: 0 }
    }
}

/// Outcome of a single-charger radius search.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusChoice {
    pub radius: f64,
    pub objective: f64,
    /// The other chargers' radii already breach the ceiling, so no radius
    /// for this charger is admissible; `radius` is the unchanged incumbent.
    pub context_infeasible: bool,
}

/// Best radius for one charger with the others held fixed. Candidates are
/// an even grid up to the farthest area corner plus the incumbent; ties
/// keep the smallest radius.
pub fn best_radius_for(
    scenario: &Scenario,
    radii: &RadiusAssignment,
    charger: usize,
    config: &PlannerConfig,
    kernel: &dyn RadiationKernel,
) -> RadiusChoice {
    let incumbent = radii.radii[charger];
    let r_max = scenario.area.max_dist_from(scenario.chargers[charger].position);
    let mut candidates: Vec<f64> = (0..=config.resolution)
        .map(|i| i as f64 * r_max / config.resolution as f64)
        .chain(std::iter::once(incumbent))
        .collect();
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("candidate radii are finite"));
    candidates.dedup();

    let mut trial = radii.clone();
    let mut best: Option<(f64, f64)> = None;
    for candidate in candidates {
        trial.radii[charger] = candidate;
        let check = radiation::feasible(
            scenario,
            &trial,
            config.radiation_samples,
            config.seed,
            kernel,
        );
        if !check.feasible {
            // Exposure only grows with the radius and the sample set is
            // fixed, so every later candidate fails the same check.
            break;
        }
        let objective = simulate(scenario, &trial).objective;
        if best.map_or(true, |(_, b)| objective > b) {
            best = Some((candidate, objective));
        }
    }
    match best {
        Some((radius, objective)) => {
            RadiusChoice { radius, objective, context_infeasible: false }
        }
        None => {
            trial.radii[charger] = incumbent;
            RadiusChoice {
                radius: incumbent,
                objective: simulate(scenario, &trial).objective,
                context_infeasible: true,
            }
        }
    }
}

/// Iterative planner trace and result.
#[derive(Debug, Clone, PartialEq)]
pub struct IterativeOutcome {
    pub radii: RadiusAssignment,
    pub objective: f64,
    /// Objective after each improvement round; non-decreasing because the
    /// incumbent radius is always among the candidates.
    pub trace: Vec<f64>,
}

/// Random-order coordinate ascent over charger radii, starting from zero.
pub fn iterative_lrec(
    scenario: &Scenario,
    config: &PlannerConfig,
    kernel: &dyn RadiationKernel,
) -> IterativeOutcome {
    let m = scenario.charger_count();
    let mut radii = RadiusAssignment::zeros(m);
    if m == 0 {
        let objective = simulate(scenario, &radii).objective;
        return IterativeOutcome { radii, objective, trace: Vec::new() };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut trace = Vec::with_capacity(config.iterations);
    for _ in 0..config.iterations {
        let charger = rng.random_range(0..m);
        let choice = best_radius_for(scenario, &radii, charger, config, kernel);
        radii.radii[charger] = choice.radius;
        trace.push(choice.objective);
    }
    let objective = trace
        .last()
        .copied()
        .unwrap_or_else(|| simulate(scenario, &radii).objective);
    IterativeOutcome { radii, objective, trace }
}

/// Coverage-first heuristic: each charger reaches its farthest node within
/// the solo exposure cap, ignoring overlap between chargers.
pub fn charging_oriented(scenario: &Scenario) -> RadiusAssignment {
    let frontiers = compute_frontiers(scenario);
    let radii = scenario
        .chargers
        .iter()
        .zip(&frontiers)
        .map(|(c, f)| match f.radiation_frontier {
            Some(v) => c.position.dist(scenario.nodes[v].position),
            None => 0.0,
        })
        .collect();
    RadiusAssignment::new(radii)
}

/// Full grid search over joint radius assignments. Only for tiny networks;
/// panics past four chargers.
pub fn exhaustive_search(
    scenario: &Scenario,
    config: &PlannerConfig,
    kernel: &dyn RadiationKernel,
) -> (RadiusAssignment, f64) {
    let m = scenario.charger_count();
    assert!(m <= 4, "joint grid search is exponential in chargers, got {m}");
    let mut radii = RadiusAssignment::zeros(m);
    if m == 0 {
        let objective = simulate(scenario, &radii).objective;
        return (radii, objective);
    }
    let grids: Vec<Vec<f64>> = scenario
        .chargers
        .iter()
        .map(|c| {
            let r_max = scenario.area.max_dist_from(c.position);
            (0..=config.resolution)
                .map(|i| i as f64 * r_max / config.resolution as f64)
                .collect()
        })
        .collect();

    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut index = vec![0usize; m];
    loop {
        for (u, &i) in index.iter().enumerate() {
            radii.radii[u] = grids[u][i];
        }
        let check = radiation::feasible(
            scenario,
            &radii,
            config.radiation_samples,
            config.seed,
            kernel,
        );
        if check.feasible {
            let objective = simulate(scenario, &radii).objective;
            if best.as_ref().map_or(true, |(_, b)| objective > *b) {
                best = Some((radii.radii.clone(), objective));
            }
        }
        let mut u = m;
        while u > 0 {
            u -= 1;
            index[u] += 1;
            if index[u] <= config.resolution {
                break;
            }
            index[u] = 0;
            if u == 0 {
                let (radii, objective) =
                    best.expect("the all-zero assignment is always admissible");
                return (RadiusAssignment::new(radii), objective);
            }
        }
    }
}
