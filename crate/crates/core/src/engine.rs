//! Event-driven simulation of the charging process.
//!
//! Between events every transfer rate is constant, so the simulator advances
//! directly to the next moment a charger empties or a node fills instead of
//! integrating small time steps. Each loop iteration retires at least one
//! charger or node, which bounds the event count by chargers + nodes.

use crate::model::{charging_rate, RadiusAssignment, Scenario};
use serde::{Deserialize, Serialize};

/// Events closer together than this are processed as one simultaneous batch.
pub const EVENT_EPS: f64 = 1e-12;

/// Residuals this far below zero are treated as rounding noise and clamped;
/// anything lower aborts the run.
pub const NEGATIVE_RESIDUAL_EPS: f64 = 1e-12;

/// Relative tolerance on the outflow/inflow balance checked at every event.
pub const CONSERVATION_TOL: f64 = 1e-9;

/// Energy levels at one instant of the simulation.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkState {
    pub time: f64,
    pub charger_energy: Vec<f64>,
    pub node_residual_capacity: Vec<f64>,
}

impl NetworkState {
    pub fn depleted_chargers(&self) -> Vec<usize> {
        self.charger_energy
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 0.0)
            .map(|(u, _)| u)
            .collect()
    }

    pub fn full_nodes(&self) -> Vec<usize> {
        self.node_residual_capacity
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0.0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Chargers still transmitting: energy left and at least one unfilled
    /// node inside the radius.
    pub fn active_chargers(&self, scenario: &Scenario, radii: &RadiusAssignment) -> Vec<bool> {
        scenario
            .chargers
            .iter()
            .map(|c| {
                self.charger_energy[c.id] > 0.0
                    && scenario.nodes.iter().any(|n| {
                        self.node_residual_capacity[n.id] > 0.0
                            && c.position.dist(n.position) <= radii.radii[c.id]
                    })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EventKind {
    #[serde(rename = "charger-depleted")]
    ChargerDepleted,
    #[serde(rename = "node-full")]
    NodeFull,
}

/// A charger emptying or a node filling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Event {
    #[serde(rename = "t")]
    pub time: f64,
    pub kind: EventKind,
    pub id: usize,
}

/// Full record of one simulation run. `state_snapshots` holds the initial
/// state followed by the state after each event batch, so every quantity is
/// piecewise linear between consecutive snapshots.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub objective: f64,
    pub completion_time: f64,
    pub events: Vec<Event>,
    pub final_state: NetworkState,
    pub state_snapshots: Vec<NetworkState>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EngineError {
    #[error("sample time at index {index} must be finite and non-negative, got {value}")]
    BadSampleTime { index: usize, value: f64 },
    #[error("sample times must be non-decreasing (index {index})")]
    UnsortedSampleTimes { index: usize },
    #[error("horizon bound needs at least one charger and one node")]
    HorizonUndefined,
    #[error("charger {charger} and node {node} are co-located")]
    CoLocatedPair { charger: usize, node: usize },
}

#[derive(Serialize)]
struct FinalEnergies {
    charger_energy: Vec<f64>,
    node_energy: Vec<f64>,
}

#[derive(Serialize)]
struct ResultFile {
    objective: f64,
    completion_time: f64,
    events: Vec<Event>,
    #[serde(rename = "final")]
    final_energies: FinalEnergies,
}

impl SimulationResult {
    /// Cumulative energy drawn from the chargers up to snapshot `k`.
    pub fn spent_at(&self, k: usize) -> f64 {
        let initial = &self.state_snapshots[0].charger_energy;
        self.state_snapshots[k]
            .charger_energy
            .iter()
            .zip(initial)
            .map(|(e, e0)| e0 - e)
            .sum()
    }

    /// JSON form with final node energy reported as energy received.
    pub fn to_json_pretty(&self) -> String {
        let initial = &self.state_snapshots[0].node_residual_capacity;
        let node_energy = self
            .final_state
            .node_residual_capacity
            .iter()
            .zip(initial)
            .map(|(c, c0)| c0 - c)
            .collect();
        let file = ResultFile {
            objective: self.objective,
            completion_time: self.completion_time,
            events: self.events.clone(),
            final_energies: FinalEnergies {
                charger_energy: self.final_state.charger_energy.clone(),
                node_energy,
            },
        };
        serde_json::to_string_pretty(&file).expect("result serialization cannot fail")
    }
}

/// Runs the charging process to completion and reports the total transferred
/// energy together with the full event history.
///
/// The scenario is assumed valid; the radius vector is checked. A charger
/// whose covered nodes are all full simply stops transmitting and keeps its
/// remaining energy.
pub fn simulate(scenario: &Scenario, radii: &RadiusAssignment) -> SimulationResult {
    radii
        .validate_for(scenario)
        .expect("invalid radius assignment");
    let m = scenario.charger_count();
    let n = scenario.node_count();

    // Positive-rate links only; zero-rate coverage cannot move energy.
    let mut links: Vec<Vec<(usize, f64)>> = vec![Vec::new(); m];
    for c in &scenario.chargers {
        let r = radii.radii[c.id];
        for node in &scenario.nodes {
            let rate = charging_rate(&scenario.params, c.position, r, node.position, true);
            if rate > 0.0 {
                links[c.id].push((node.id, rate));
            }
        }
    }

    let mut energy: Vec<f64> = scenario.chargers.iter().map(|c| c.initial_energy).collect();
    let mut residual: Vec<f64> = scenario.nodes.iter().map(|v| v.initial_capacity).collect();
    let initial_spend_total: f64 = energy.iter().sum();
    let initial_capacity_total: f64 = residual.iter().sum();

    let mut time = 0.0;
    let mut events: Vec<Event> = Vec::new();
    let mut snapshots = vec![NetworkState {
        time,
        charger_energy: energy.clone(),
        node_residual_capacity: residual.clone(),
    }];

    let mut outflow = vec![0.0; m];
    let mut inflow = vec![0.0; n];
    let mut iterations = 0usize;
    loop {
        for f in outflow.iter_mut() {
            *f = 0.0;
        }
        for f in inflow.iter_mut() {
            *f = 0.0;
        }
        for (u, charger_links) in links.iter().enumerate() {
            if energy[u] <= 0.0 {
                continue;
            }
            for &(v, rate) in charger_links {
                if residual[v] > 0.0 {
                    outflow[u] += rate;
                    inflow[v] += rate;
                }
            }
        }

        let mut step = f64::INFINITY;
        for u in 0..m {
            if energy[u] > 0.0 && outflow[u] > 0.0 {
                step = step.min(energy[u] / outflow[u]);
            }
        }
        for v in 0..n {
            if residual[v] > 0.0 && inflow[v] > 0.0 {
                step = step.min(residual[v] / inflow[v]);
            }
        }
        if !step.is_finite() {
            break;
        }
        iterations += 1;
        assert!(
            iterations <= n + m,
            "event loop exceeded the {} iteration bound",
            n + m
        );

        time += step;
        let cutoff = step + EVENT_EPS;
        let mut batch_nodes: Vec<usize> = Vec::new();
        let mut batch_chargers: Vec<usize> = Vec::new();
        for v in 0..n {
            if residual[v] > 0.0 && inflow[v] > 0.0 {
                if residual[v] / inflow[v] <= cutoff {
                    residual[v] = 0.0;
                    batch_nodes.push(v);
                } else {
                    residual[v] -= step * inflow[v];
                    if residual[v] < 0.0 {
                        assert!(
                            residual[v] >= -NEGATIVE_RESIDUAL_EPS,
                            "node {v} residual fell to {}",
                            residual[v]
                        );
                        residual[v] = 0.0;
                        batch_nodes.push(v);
                    }
                }
            }
        }
        for u in 0..m {
            if energy[u] > 0.0 && outflow[u] > 0.0 {
                if energy[u] / outflow[u] <= cutoff {
                    energy[u] = 0.0;
                    batch_chargers.push(u);
                } else {
                    energy[u] -= step * outflow[u];
                    if energy[u] < 0.0 {
                        assert!(
                            energy[u] >= -NEGATIVE_RESIDUAL_EPS,
                            "charger {u} energy fell to {}",
                            energy[u]
                        );
                        energy[u] = 0.0;
                        batch_chargers.push(u);
                    }
                }
            }
        }
        for &v in &batch_nodes {
            events.push(Event { time, kind: EventKind::NodeFull, id: v });
        }
        for &u in &batch_chargers {
            events.push(Event { time, kind: EventKind::ChargerDepleted, id: u });
        }

        let spent: f64 = initial_spend_total - energy.iter().sum::<f64>();
        let delivered: f64 = initial_capacity_total - residual.iter().sum::<f64>();
        assert!(
            (spent - delivered).abs() <= CONSERVATION_TOL * spent.abs().max(1.0),
            "energy balance broken at t={time}: spent {spent}, delivered {delivered}"
        );

        snapshots.push(NetworkState {
            time,
            charger_energy: energy.clone(),
            node_residual_capacity: residual.clone(),
        });
    }

    assert!(events.len() <= n + m);
    let objective = initial_spend_total - energy.iter().sum::<f64>();
    let final_state = snapshots.last().expect("initial snapshot always present").clone();
    SimulationResult {
        objective,
        completion_time: time,
        events,
        final_state,
        state_snapshots: snapshots,
    }
}

/// Cumulative transferred energy at each requested time, interpolated along
/// the piecewise-linear trajectory. Times past the last event report the
/// final objective.
pub fn objective_curve(
    result: &SimulationResult,
    sample_times: &[f64],
) -> Result<Vec<(f64, f64)>, EngineError> {
    for (index, &t) in sample_times.iter().enumerate() {
        if !t.is_finite() || t < 0.0 {
            return Err(EngineError::BadSampleTime { index, value: t });
        }
        if index > 0 && t < sample_times[index - 1] {
            return Err(EngineError::UnsortedSampleTimes { index });
        }
    }
    let snaps = &result.state_snapshots;
    let mut out = Vec::with_capacity(sample_times.len());
    for &t in sample_times {
        let value = if t >= result.completion_time {
            result.objective
        } else {
            // Snapshot times are non-decreasing; find the segment containing t.
            let mut k = 0;
            while k + 1 < snaps.len() && snaps[k + 1].time <= t {
                k += 1;
            }
            let lo = result.spent_at(k);
            if k + 1 == snaps.len() {
                lo
            } else {
                let hi = result.spent_at(k + 1);
                let t0 = snaps[k].time;
                let t1 = snaps[k + 1].time;
                if t1 > t0 {
                    lo + (hi - lo) * (t - t0) / (t1 - t0)
                } else {
                    hi
                }
            }
        };
        out.push((t, value));
    }
    Ok(out)
}

/// Upper bound on the completion time of any radius assignment: the slowest
/// possible link moving the largest initial budget. Undefined without at
/// least one charger/node pair or with a co-located pair.
pub fn horizon_bound(scenario: &Scenario) -> Result<f64, EngineError> {
    if scenario.chargers.is_empty() || scenario.nodes.is_empty() {
        return Err(EngineError::HorizonUndefined);
    }
    let mut min_d = f64::INFINITY;
    let mut max_d: f64 = 0.0;
    let mut closest = (0usize, 0usize);
    for c in &scenario.chargers {
        for v in &scenario.nodes {
            let d = c.position.dist(v.position);
            if d < min_d {
                min_d = d;
                closest = (c.id, v.id);
            }
            max_d = max_d.max(d);
        }
    }
    if min_d == 0.0 {
        return Err(EngineError::CoLocatedPair { charger: closest.0, node: closest.1 });
    }
    let budget = scenario
        .chargers
        .iter()
        .map(|c| c.initial_energy)
        .chain(scenario.nodes.iter().map(|v| v.initial_capacity))
        .fold(0.0, f64::max);
    let beta = scenario.params.beta;
    let alpha = scenario.params.alpha;
    Ok((beta + max_d) * (beta + max_d) / (alpha * min_d * min_d) * budget)
}
