//! Shared helpers for the acceptance suite: a fixed-step integrator that
//! rederives the transfer dynamics from scratch, and instance generators
//! with bounded geometry so integration error stays analyzable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wet_radsim_core::{Area, Charger, Node, PhysicsParams, Point, Scenario};

/// Final charger energies and node residual capacities from forward-Euler
/// integration. Rates are recomputed here from the raw formula, not taken
/// from the library. Per step, each live link moves `rate * dt` scaled
/// down by its endpoints' remaining budgets, so nothing overdraws; the
/// loop stops when no link is live.
pub fn euler_final_state(
    scenario: &Scenario,
    radii: &[f64],
    dt: f64,
    max_steps: usize,
) -> (Vec<f64>, Vec<f64>) {
    let p = &scenario.params;
    let mut energy: Vec<f64> = scenario.chargers.iter().map(|c| c.initial_energy).collect();
    let mut residual: Vec<f64> = scenario.nodes.iter().map(|n| n.initial_capacity).collect();

    let mut links: Vec<(usize, usize, f64)> = Vec::new();
    for (u, c) in scenario.chargers.iter().enumerate() {
        for (v, node) in scenario.nodes.iter().enumerate() {
            let dx = c.position.x - node.position.x;
            let dy = c.position.y - node.position.y;
            let d = (dx * dx + dy * dy).sqrt();
            if d <= radii[u] {
                let denom = p.beta + d;
                links.push((u, v, p.alpha * radii[u] * radii[u] / (denom * denom)));
            }
        }
    }

    let m = energy.len();
    let n = residual.len();
    for _ in 0..max_steps {
        let mut out = vec![0.0; m];
        let mut inflow = vec![0.0; n];
        let mut any_live = false;
        for &(u, v, rate) in &links {
            if energy[u] > 0.0 && residual[v] > 0.0 {
                out[u] += rate;
                inflow[v] += rate;
                any_live = true;
            }
        }
        if !any_live {
            return (energy, residual);
        }
        let charger_scale: Vec<f64> = (0..m)
            .map(|u| if out[u] > 0.0 { (energy[u] / (out[u] * dt)).min(1.0) } else { 1.0 })
            .collect();
        let node_scale: Vec<f64> = (0..n)
            .map(|v| if inflow[v] > 0.0 { (residual[v] / (inflow[v] * dt)).min(1.0) } else { 1.0 })
            .collect();
        let mut spent = vec![0.0; m];
        let mut gained = vec![0.0; n];
        for &(u, v, rate) in &links {
            if energy[u] > 0.0 && residual[v] > 0.0 {
                let moved = rate * dt * charger_scale[u].min(node_scale[v]);
                spent[u] += moved;
                gained[v] += moved;
            }
        }
        for u in 0..m {
            energy[u] = (energy[u] - spent[u]).max(0.0);
        }
        for v in 0..n {
            residual[v] = (residual[v] - gained[v]).max(0.0);
        }
    }
    panic!("integrator hit the step cap before the network went quiet");
}

/// Random instance with geometry bounded away from the degenerate cases:
/// every charger-node distance is at least 0.3 and radii are at least 0.6,
/// so every possible link rate is bounded below and integration finishes
/// in a predictable number of steps.
pub fn bounded_instance(seed: u64) -> (Scenario, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let area = Area::new(0.0, 0.0, 2.5, 2.5);
    let m = rng.random_range(1..=6);
    let n = rng.random_range(1..=6);
    let chargers: Vec<Charger> = (0..m)
        .map(|id| Charger {
            id,
            position: area.sample(&mut rng),
            initial_energy: rng.random_range(0.5..1.5),
        })
        .collect();
    let nodes: Vec<Node> = (0..n)
        .map(|id| {
            let position = loop {
                let candidate = area.sample(&mut rng);
                if chargers.iter().all(|c| c.position.dist(candidate) >= 0.3) {
                    break candidate;
                }
            };
            Node { id, position, initial_capacity: rng.random_range(0.5..1.5) }
        })
        .collect();
    let radii = (0..m).map(|_| rng.random_range(0.6..1.8)).collect();
    let scenario = Scenario {
        params: PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 0.4, rho: 10.0 },
        area,
        chargers,
        nodes,
    };
    (scenario, radii)
}

/// Random instance small enough for the exact assignment search.
pub fn assignment_instance(seed: u64) -> Scenario {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let area = Area::new(0.0, 0.0, 4.0, 4.0);
    let m = rng.random_range(1..=3);
    let n = rng.random_range(2..=8);
    let chargers = (0..m)
        .map(|id| Charger {
            id,
            position: area.sample(&mut rng),
            initial_energy: rng.random_range(0.3..2.0),
        })
        .collect();
    let nodes = (0..n)
        .map(|id| Node {
            id,
            position: area.sample(&mut rng),
            initial_capacity: rng.random_range(0.2..1.5),
        })
        .collect();
    Scenario {
        params: PhysicsParams {
            alpha: 1.0,
            beta: 1.0,
            gamma: rng.random_range(0.3..1.0),
            rho: rng.random_range(0.2..3.0),
        },
        area,
        chargers,
        nodes,
    }
}

/// Tiny instance for planner trace checks.
pub fn planning_instance(seed: u64) -> Scenario {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let area = Area::new(0.0, 0.0, 5.0, 5.0);
    let m = rng.random_range(1..=3);
    let n = rng.random_range(2..=10);
    let chargers = (0..m)
        .map(|id| Charger {
            id,
            position: area.sample(&mut rng),
            initial_energy: 1.0,
        })
        .collect();
    let nodes = (0..n)
        .map(|id| Node {
            id,
            position: area.sample(&mut rng),
            initial_capacity: 1.0,
        })
        .collect();
    Scenario {
        params: PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 0.2, rho: 0.4 },
        area,
        chargers,
        nodes,
    }
}

/// Point equality helper for exact argmax checks.
pub fn same_point(a: Point, b: Point) -> bool {
    a.x == b.x && a.y == b.y
}
