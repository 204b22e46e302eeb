//! Disjoint charging: every node is served by at most one charger, and every
//! charger serves a prefix of the nodes ordered by distance. Radii then
//! follow from the farthest served node, which keeps per-charger exposure
//! below the ceiling by construction.
//!
//! The exact optimum comes from a guarded brute force over prefix choices;
//! the scalable path solves a linear relaxation with the in-crate simplex
//! and rounds it greedily.

use crate::model::{RadiusAssignment, Scenario};
use crate::simplex::{self, LinearProgram};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Threshold below which a relaxation value counts as zero support.
const SUPPORT_TOL: f64 = 1e-9;

/// Cap on brute-force prefix combinations.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

/// Largest radius a lone charger may use without breaching the exposure
/// ceiling at its own center.
pub fn solo_radius_cap(scenario: &Scenario) -> f64 {
    let p = &scenario.params;
    p.beta * (p.rho / (p.gamma * p.alpha)).sqrt()
}

/// Per-charger service structure: all nodes in distance order plus the two
/// frontiers limiting how deep a prefix is worth serving.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargerFrontiers {
    /// Node ids ordered by distance from the charger, ties by id.
    pub nodes_by_distance: Vec<usize>,
    /// Farthest node reachable under the solo exposure cap.
    pub radiation_frontier: Option<usize>,
    /// First node in order at which cumulative capacity absorbs the full
    /// energy budget; the last node when the total capacity falls short.
    pub energy_frontier: Option<usize>,
}

impl ChargerFrontiers {
    fn position_of(&self, node: usize) -> usize {
        self.nodes_by_distance
            .iter()
            .position(|&v| v == node)
            .expect("frontier node comes from the same ordering")
    }

    /// Length of the longest prefix worth assigning: past either frontier a
    /// node only adds exposure or serves energy the charger does not have.
    pub fn allowed_prefix_len(&self) -> usize {
        match (self.radiation_frontier, self.energy_frontier) {
            (Some(rad), Some(nrg)) => self.position_of(rad).min(self.position_of(nrg)) + 1,
            _ => 0,
        }
    }
}

pub fn compute_frontiers(scenario: &Scenario) -> Vec<ChargerFrontiers> {
    let cap = solo_radius_cap(scenario);
    scenario
        .chargers
        .iter()
        .map(|c| {
            let mut order: Vec<usize> = scenario.nodes.iter().map(|n| n.id).collect();
            order.sort_by(|&a, &b| {
                let da = c.position.dist(scenario.nodes[a].position);
                let db = c.position.dist(scenario.nodes[b].position);
                da.partial_cmp(&db).expect("distances are finite").then(a.cmp(&b))
            });
            let radiation_frontier = order
                .iter()
                .rev()
                .find(|&&v| c.position.dist(scenario.nodes[v].position) <= cap)
                .copied();
            let mut energy_frontier = None;
            let mut cumulative = 0.0;
            for &v in &order {
                cumulative += scenario.nodes[v].initial_capacity;
                if cumulative >= c.initial_energy {
                    energy_frontier = Some(v);
                    break;
                }
            }
            if energy_frontier.is_none() {
                energy_frontier = order.last().copied();
            }
            ChargerFrontiers { nodes_by_distance: order, radiation_frontier, energy_frontier }
        })
        .collect()
}

fn charger_contribution(
    scenario: &Scenario,
    frontiers: &ChargerFrontiers,
    charger: usize,
    assigned_len: usize,
) -> f64 {
    let prefix = &frontiers.nodes_by_distance[..assigned_len];
    let budget = scenario.chargers[charger].initial_energy;
    match frontiers.energy_frontier {
        Some(nrg) if prefix.contains(&nrg) => budget,
        _ => prefix
            .iter()
            .map(|&v| scenario.nodes[v].initial_capacity)
            .sum(),
    }
}

/// Energy credited to an assignment: a charger reaching its energy frontier
/// counts its whole budget, otherwise the capacity of its assigned nodes.
///
/// Assignments must pass [`validate_assignment`]; each charger's nodes are
/// assumed to form a distance-order prefix.
pub fn lrdc_objective(scenario: &Scenario, pairs: &BTreeMap<usize, usize>) -> f64 {
    let frontiers = compute_frontiers(scenario);
    let mut counts = vec![0usize; scenario.charger_count()];
    for &charger in pairs.values() {
        counts[charger] += 1;
    }
    counts
        .iter()
        .enumerate()
        .map(|(u, &len)| charger_contribution(scenario, &frontiers[u], u, len))
        .sum()
}

/// Structural check: at most one charger per node, every charger's nodes
/// form an exact distance-order prefix, and nothing beyond a frontier.
pub fn validate_assignment(
    scenario: &Scenario,
    pairs: &BTreeMap<usize, usize>,
) -> Result<(), String> {
    for (&node, &charger) in pairs {
        if node >= scenario.node_count() {
            return Err(format!("unknown node {node}"));
        }
        if charger >= scenario.charger_count() {
            return Err(format!("unknown charger {charger}"));
        }
    }
    let frontiers = compute_frontiers(scenario);
    for (u, f) in frontiers.iter().enumerate() {
        let allowed = f.allowed_prefix_len();
        let assigned_len = pairs.values().filter(|&&c| c == u).count();
        if assigned_len > allowed {
            return Err(format!(
                "charger {u} serves {assigned_len} nodes, allowed prefix is {allowed}"
            ));
        }
        for (k, &v) in f.nodes_by_distance.iter().take(assigned_len).enumerate() {
            if pairs.get(&v) != Some(&u) {
                return Err(format!("charger {u} skips node {v} at prefix position {k}"));
            }
        }
    }
    Ok(())
}

/// Radii realizing an assignment: each charger reaches exactly its farthest
/// assigned node.
pub fn induced_radii(scenario: &Scenario, pairs: &BTreeMap<usize, usize>) -> RadiusAssignment {
    let mut radii = vec![0.0_f64; scenario.charger_count()];
    for (&node, &charger) in pairs {
        let d = scenario.chargers[charger]
            .position
            .dist(scenario.nodes[node].position);
        radii[charger] = radii[charger].max(d);
    }
    RadiusAssignment::new(radii)
}

/// Assignment plus the radii and objective value it induces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "AssignmentFile", into = "AssignmentFile")]
pub struct LrdcAssignment {
    pub pairs: BTreeMap<usize, usize>,
    pub radii: RadiusAssignment,
    pub objective: f64,
}

impl LrdcAssignment {
    fn from_pairs(scenario: &Scenario, pairs: BTreeMap<usize, usize>) -> Self {
        let radii = induced_radii(scenario, &pairs);
        let objective = lrdc_objective(scenario, &pairs);
        LrdcAssignment { pairs, radii, objective }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("assignment serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct PairRecord {
    node: usize,
    charger: usize,
}

#[derive(Serialize, Deserialize)]
struct AssignmentFile {
    pairs: Vec<PairRecord>,
    radii: Vec<f64>,
    objective: f64,
}

impl From<LrdcAssignment> for AssignmentFile {
    fn from(a: LrdcAssignment) -> Self {
        AssignmentFile {
            pairs: a
                .pairs
                .iter()
                .map(|(&node, &charger)| PairRecord { node, charger })
                .collect(),
            radii: a.radii.radii,
            objective: a.objective,
        }
    }
}

impl From<AssignmentFile> for LrdcAssignment {
    fn from(f: AssignmentFile) -> Self {
        LrdcAssignment {
            pairs: f.pairs.into_iter().map(|p| (p.node, p.charger)).collect(),
            radii: RadiusAssignment::new(f.radii),
            objective: f.objective,
        }
    }
}

/// Fractional relaxation solution; `x[node][charger]` is assignment mass.
#[derive(Debug, Clone, PartialEq)]
pub struct LrdcLpSolution {
    pub x: Vec<Vec<f64>>,
    pub objective: f64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LrdcError {
    #[error("brute force would enumerate {combinations} prefix combinations (limit {limit})")]
    BruteForceTooLarge { combinations: u128, limit: u128 },
    #[error("relaxation solve failed: {0}")]
    Lp(#[from] simplex::SimplexError),
}

/// Solves the fractional relaxation: maximize credited energy subject to
/// per-node uniqueness and per-charger prefix monotonicity, with variables
/// only for nodes up to each charger's nearer frontier.
pub fn solve_lrdc_lp(scenario: &Scenario) -> Result<LrdcLpSolution, LrdcError> {
    let m = scenario.charger_count();
    let n = scenario.node_count();
    let frontiers = compute_frontiers(scenario);

    let mut columns: Vec<(usize, usize)> = Vec::new();
    let mut col_of: Vec<Vec<Option<usize>>> = vec![vec![None; m]; n];
    for (u, f) in frontiers.iter().enumerate() {
        for &v in f.nodes_by_distance.iter().take(f.allowed_prefix_len()) {
            col_of[v][u] = Some(columns.len());
            columns.push((v, u));
        }
    }
    if columns.is_empty() {
        return Ok(LrdcLpSolution { x: vec![vec![0.0; m]; n], objective: 0.0 });
    }

    let mut objective = vec![0.0; columns.len()];
    for (u, f) in frontiers.iter().enumerate() {
        let len = f.allowed_prefix_len();
        if len == 0 {
            continue;
        }
        let prefix = &f.nodes_by_distance[..len];
        let mut prefix_capacity = 0.0;
        for &v in prefix {
            let c = scenario.nodes[v].initial_capacity;
            prefix_capacity += c;
            objective[col_of[v][u].unwrap()] = c;
        }
        let nrg = f.energy_frontier.expect("non-empty prefix implies a frontier");
        if prefix.last() == Some(&nrg) {
            // Serving through the energy frontier credits the budget rather
            // than the raw prefix capacity.
            objective[col_of[nrg][u].unwrap()] +=
                scenario.chargers[u].initial_energy - prefix_capacity;
        }
    }

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut rhs: Vec<f64> = Vec::new();
    for v in 0..n {
        let active: Vec<usize> = (0..m).filter_map(|u| col_of[v][u]).collect();
        if active.is_empty() {
            continue;
        }
        let mut row = vec![0.0; columns.len()];
        for c in active {
            row[c] = 1.0;
        }
        rows.push(row);
        rhs.push(1.0);
    }
    for (u, f) in frontiers.iter().enumerate() {
        let len = f.allowed_prefix_len();
        for pair in f.nodes_by_distance[..len].windows(2) {
            let mut row = vec![0.0; columns.len()];
            row[col_of[pair[1]][u].unwrap()] = 1.0;
            row[col_of[pair[0]][u].unwrap()] = -1.0;
            rows.push(row);
            rhs.push(0.0);
        }
    }

    let solution = simplex::maximize(&LinearProgram { objective, rows, rhs })?;
    let mut x = vec![vec![0.0; m]; n];
    for (col, &(v, u)) in columns.iter().enumerate() {
        x[v][u] = solution.x[col];
    }
    Ok(LrdcLpSolution { x, objective: solution.objective })
}

/// Rounds a relaxation greedily: chargers ordered by total assignment mass
/// claim their prefix of supported, still-unclaimed nodes, truncated at the
/// nearer frontier and at the first conflict so prefixes stay exact.
pub fn round_lrdc(scenario: &Scenario, x: &[Vec<f64>]) -> LrdcAssignment {
    let m = scenario.charger_count();
    let frontiers = compute_frontiers(scenario);
    let mut order: Vec<usize> = (0..m).collect();
    let mass = |u: usize| -> f64 { x.iter().map(|row| row[u]).sum() };
    order.sort_by(|&a, &b| {
        mass(b)
            .partial_cmp(&mass(a))
            .expect("masses are finite")
            .then(a.cmp(&b))
    });

    let mut pairs: BTreeMap<usize, usize> = BTreeMap::new();
    for &u in &order {
        let f = &frontiers[u];
        for &v in f.nodes_by_distance.iter().take(f.allowed_prefix_len()) {
            if pairs.contains_key(&v) || x[v][u] <= SUPPORT_TOL {
                break;
            }
            pairs.insert(v, u);
        }
    }
    LrdcAssignment::from_pairs(scenario, pairs)
}

/// Exhaustive optimum over per-charger prefix lengths with disjointness
/// enforced, refusing instances past [`BRUTE_FORCE_LIMIT`] combinations.
pub fn lrdc_brute_force(scenario: &Scenario) -> Result<LrdcAssignment, LrdcError> {
    let m = scenario.charger_count();
    let frontiers = compute_frontiers(scenario);
    let limits: Vec<usize> = frontiers.iter().map(|f| f.allowed_prefix_len()).collect();
    let mut combinations: u128 = 1;
    for &l in &limits {
        combinations = combinations.saturating_mul(l as u128 + 1);
        if combinations > BRUTE_FORCE_LIMIT {
            return Err(LrdcError::BruteForceTooLarge {
                combinations,
                limit: BRUTE_FORCE_LIMIT,
            });
        }
    }

    // contribution[u][len] for a prefix of the given length.
    let contribution: Vec<Vec<f64>> = (0..m)
        .map(|u| {
            (0..=limits[u])
                .map(|len| charger_contribution(scenario, &frontiers[u], u, len))
                .collect()
        })
        .collect();

    struct Search<'a> {
        frontiers: &'a [ChargerFrontiers],
        limits: &'a [usize],
        contribution: &'a [Vec<f64>],
        claimed: Vec<bool>,
        lengths: Vec<usize>,
        best: Option<(f64, Vec<usize>)>,
    }

    impl Search<'_> {
        fn run(&mut self, u: usize, score: f64) {
            if u == self.limits.len() {
                let better = match &self.best {
                    None => true,
                    Some((best_score, _)) => score > *best_score,
                };
                if better {
                    self.best = Some((score, self.lengths.clone()));
                }
                return;
            }
            let order = &self.frontiers[u].nodes_by_distance;
            // Prefix lengths in increasing order so ties keep the shortest.
            self.lengths[u] = 0;
            self.run(u + 1, score + self.contribution[u][0]);
            for len in 1..=self.limits[u] {
                let v = order[len - 1];
                if self.claimed[v] {
                    break;
                }
                self.claimed[v] = true;
                self.lengths[u] = len;
                self.run(u + 1, score + self.contribution[u][len]);
            }
            for len in (1..=self.lengths[u]).rev() {
                self.claimed[order[len - 1]] = false;
            }
            self.lengths[u] = 0;
        }
    }

    let mut search = Search {
        frontiers: &frontiers,
        limits: &limits,
        contribution: &contribution,
        claimed: vec![false; scenario.node_count()],
        lengths: vec![0; m],
        best: None,
    };
    search.run(0, 0.0);
    let (_, lengths) = search.best.expect("empty prefix profile always exists");
    let mut pairs = BTreeMap::new();
    for (u, &len) in lengths.iter().enumerate() {
        for &v in frontiers[u].nodes_by_distance.iter().take(len) {
            pairs.insert(v, u);
        }
    }
    Ok(LrdcAssignment::from_pairs(scenario, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::{Area, Charger, Node, PhysicsParams, Point};
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn solo_cap_from_center_exposure() {
        let s = fixtures::fig1();
        assert_relative_eq!(solo_radius_cap(&s), 2.0_f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn fixture_frontiers() {
        let s = fixtures::fig1();
        let f = compute_frontiers(&s);
        assert_eq!(f[0].nodes_by_distance, vec![0, 1]);
        assert_eq!(f[0].radiation_frontier, Some(1));
        assert_eq!(f[0].energy_frontier, Some(0));
        assert_eq!(f[0].allowed_prefix_len(), 1);
        assert_eq!(f[1].nodes_by_distance, vec![1, 0]);
        assert_eq!(f[1].radiation_frontier, Some(1));
        assert_eq!(f[1].energy_frontier, Some(1));
        assert_eq!(f[1].allowed_prefix_len(), 1);
    }

    #[test]
    fn zero_ceiling_empties_the_radiation_frontier() {
        let mut s = fixtures::fig1();
        s.params.rho = 0.0;
        for f in compute_frontiers(&s) {
            assert_eq!(f.radiation_frontier, None);
            assert_eq!(f.allowed_prefix_len(), 0);
        }
    }

    #[test]
    fn zero_budget_stops_at_the_first_node() {
        let mut s = fixtures::fig1();
        s.chargers[0].initial_energy = 0.0;
        let f = compute_frontiers(&s);
        assert_eq!(f[0].energy_frontier, Some(0));
    }

    #[test]
    fn oversized_budget_falls_back_to_the_last_node() {
        let mut s = fixtures::fig1();
        s.chargers[0].initial_energy = 10.0;
        let f = compute_frontiers(&s);
        assert_eq!(f[0].energy_frontier, Some(1));
        assert_eq!(f[0].allowed_prefix_len(), 2);
    }

    #[test]
    fn objective_counts_budget_at_the_frontier() {
        let s = fixtures::fig1();
        let pairs: BTreeMap<usize, usize> = [(0, 0), (1, 1)].into();
        assert_relative_eq!(lrdc_objective(&s, &pairs), 2.0, max_relative = 1e-15);
        assert_eq!(lrdc_objective(&s, &BTreeMap::new()), 0.0);
    }

    #[test]
    fn objective_counts_capacity_short_of_the_frontier() {
        let s = Scenario {
            params: PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 1.0, rho: 9.0 },
            area: Area::new(0.0, 0.0, 3.0, 0.0),
            chargers: vec![Charger {
                id: 0,
                position: Point::new(0.0, 0.0),
                initial_energy: 1.0,
            }],
            nodes: vec![
                Node { id: 0, position: Point::new(1.0, 0.0), initial_capacity: 0.4 },
                Node { id: 1, position: Point::new(2.0, 0.0), initial_capacity: 1.0 },
            ],
        };
        let f = compute_frontiers(&s);
        assert_eq!(f[0].energy_frontier, Some(1));
        let pairs: BTreeMap<usize, usize> = [(0, 0)].into();
        assert_relative_eq!(lrdc_objective(&s, &pairs), 0.4, max_relative = 1e-15);
    }

    #[test]
    fn relaxation_matches_fixture_optimum() {
        let s = fixtures::fig1();
        let lp = solve_lrdc_lp(&s).unwrap();
        assert!(lp.objective >= 2.0 - 1e-9);
        assert_relative_eq!(lp.x[0][0], 1.0, epsilon = 1e-9);
        assert_relative_eq!(lp.x[1][1], 1.0, epsilon = 1e-9);
    }

    #[test]
    fn relaxation_with_zero_ceiling_is_trivial() {
        let mut s = fixtures::fig1();
        s.params.rho = 0.0;
        let lp = solve_lrdc_lp(&s).unwrap();
        assert_eq!(lp.objective, 0.0);
    }

    #[test]
    fn rounding_the_fixture_recovers_the_assignment() {
        let s = fixtures::fig1();
        let lp = solve_lrdc_lp(&s).unwrap();
        let rounded = round_lrdc(&s, &lp.x);
        assert_eq!(rounded.pairs, [(0, 0), (1, 1)].into());
        assert_relative_eq!(rounded.objective, 2.0, max_relative = 1e-12);
        assert_relative_eq!(rounded.radii.radii[0], 1.0, max_relative = 1e-12);
        assert_relative_eq!(rounded.radii.radii[1], 1.0, max_relative = 1e-12);
        validate_assignment(&s, &rounded.pairs).unwrap();
    }

    #[test]
    fn rounding_an_integral_solution_is_identity() {
        let s = random_instance(99);
        let exact = lrdc_brute_force(&s).unwrap();
        let mut x = vec![vec![0.0; s.charger_count()]; s.node_count()];
        for (&v, &u) in &exact.pairs {
            x[v][u] = 1.0;
        }
        let rounded = round_lrdc(&s, &x);
        assert_eq!(rounded.pairs, exact.pairs);
        assert_eq!(rounded.objective, exact.objective);
    }

    #[test]
    fn co_located_chargers_share_nothing() {
        let s = Scenario {
            params: PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 1.0, rho: 9.0 },
            area: Area::new(0.0, 0.0, 1.0, 0.0),
            chargers: vec![
                Charger { id: 0, position: Point::new(0.0, 0.0), initial_energy: 1.0 },
                Charger { id: 1, position: Point::new(0.0, 0.0), initial_energy: 1.0 },
            ],
            nodes: vec![Node { id: 0, position: Point::new(1.0, 0.0), initial_capacity: 2.0 }],
        };
        let lp = solve_lrdc_lp(&s).unwrap();
        let rounded = round_lrdc(&s, &lp.x);
        assert_eq!(rounded.pairs.len(), 1);
        assert_eq!(rounded.pairs.get(&0), Some(&0));
        validate_assignment(&s, &rounded.pairs).unwrap();
    }

    #[test]
    fn brute_force_fixture() {
        let s = fixtures::fig1();
        let exact = lrdc_brute_force(&s).unwrap();
        assert_relative_eq!(exact.objective, 2.0, max_relative = 1e-15);
        assert_eq!(exact.pairs, [(0, 0), (1, 1)].into());

        let mut blocked = s.clone();
        blocked.params.rho = 0.0;
        let empty = lrdc_brute_force(&blocked).unwrap();
        assert!(empty.pairs.is_empty());
        assert_eq!(empty.objective, 0.0);
    }

    #[test]
    fn brute_force_refuses_huge_instances() {
        let chargers: Vec<Charger> = (0..9)
            .map(|u| Charger {
                id: u,
                position: Point::new(u as f64 * 0.01, 0.0),
                initial_energy: 100.0,
            })
            .collect();
        let nodes: Vec<Node> = (0..9)
            .map(|v| Node {
                id: v,
                position: Point::new(v as f64 * 0.01, 0.1),
                initial_capacity: 1.0,
            })
            .collect();
        let s = Scenario {
            params: PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 1.0, rho: 100.0 },
            area: Area::new(0.0, 0.0, 1.0, 1.0),
            chargers,
            nodes,
        };
        match lrdc_brute_force(&s) {
            Err(LrdcError::BruteForceTooLarge { combinations, .. }) => {
                assert!(combinations > BRUTE_FORCE_LIMIT);
            }
            other => panic!("expected size refusal, got {other:?}"),
        }
    }

    fn random_instance(seed: u64) -> Scenario {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.random_range(1..=3);
        let n = rng.random_range(2..=8);
        let area = Area::new(0.0, 0.0, 4.0, 4.0);
        let chargers = (0..m)
            .map(|id| Charger {
                id,
                position: Point::new(rng.random_range(0.0..4.0), rng.random_range(0.0..4.0)),
                initial_energy: rng.random_range(0.3..2.0),
            })
            .collect();
        let nodes = (0..n)
            .map(|id| Node {
                id,
                position: Point::new(rng.random_range(0.0..4.0), rng.random_range(0.0..4.0)),
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

    #[test]
    fn relaxation_dominates_exact_dominates_rounded() {
        for seed in 0..10 {
            let s = random_instance(seed);
            let lp = solve_lrdc_lp(&s).unwrap();
            let exact = lrdc_brute_force(&s).unwrap();
            let rounded = round_lrdc(&s, &lp.x);
            assert!(
                lp.objective >= exact.objective - 1e-9,
                "seed {seed}: relaxation {} below exact {}",
                lp.objective,
                exact.objective
            );
            assert!(
                exact.objective >= rounded.objective - 1e-9,
                "seed {seed}: exact {} below rounded {}",
                exact.objective,
                rounded.objective
            );
            validate_assignment(&s, &rounded.pairs).unwrap();
            validate_assignment(&s, &exact.pairs).unwrap();
        }
    }

    #[test]
    fn assignment_json_shape() {
        let s = fixtures::fig1();
        let exact = lrdc_brute_force(&s).unwrap();
        let value: serde_json::Value = serde_json::from_str(&exact.to_json_pretty()).unwrap();
        assert_eq!(value["pairs"][0]["node"], 0);
        assert_eq!(value["pairs"][0]["charger"], 0);
        assert_eq!(value["radii"][0], 1.0);
        assert_eq!(value["objective"], 2.0);
        let back: LrdcAssignment = serde_json::from_str(&exact.to_json_pretty()).unwrap();
        assert_eq!(back, exact);
    }
}
