//! Electromagnetic exposure: the point field produced by active chargers and
//! a seeded Monte Carlo estimate of its peak over the deployment area.
//!
//! Exposure is additive across chargers and each charger's contribution is
//! largest at its own location, so the sampler always evaluates the charger
//! centers in addition to the uniform points.

use crate::model::{charging_rate, PhysicsParams, Point, RadiusAssignment, Scenario};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Slack added to the exposure ceiling when deciding feasibility. Purely a
/// rounding guard: squaring an exactly-at-the-cap radius such as sqrt(2)
/// overshoots the algebraic value by one ulp.
pub const FEASIBILITY_EPS: f64 = 1e-12;

/// Per-charger exposure contribution at a point.
pub trait RadiationKernel {
    fn contribution(
        &self,
        params: &PhysicsParams,
        charger: Point,
        radius: f64,
        point: Point,
        active: bool,
    ) -> f64;

    /// Identifier used in experiment configs.
    fn name(&self) -> &'static str;
}

/// Exposure proportional to received power: `gamma * charging_rate`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ProportionalKernel;

impl RadiationKernel for ProportionalKernel {
    fn contribution(
        &self,
        params: &PhysicsParams,
        charger: Point,
        radius: f64,
        point: Point,
        active: bool,
    ) -> f64 {
        params.gamma * charging_rate(params, charger, radius, point, active)
    }

    fn name(&self) -> &'static str {
        "default-eq3"
    }
}

/// Looks up a kernel by its config identifier.
pub fn kernel_by_name(name: &str) -> Option<Box<dyn RadiationKernel>> {
    match name {
        "default-eq3" => Some(Box::new(ProportionalKernel)),
        _ => None,
    }
}

/// Convenience active-set with every charger transmitting.
pub fn all_active(charger_count: usize) -> Vec<bool> {
    vec![true; charger_count]
}

/// Total exposure at `point` from the given active chargers.
pub fn radiation_at(
    scenario: &Scenario,
    radii: &RadiusAssignment,
    active: &[bool],
    point: Point,
    kernel: &dyn RadiationKernel,
) -> f64 {
    assert_eq!(active.len(), scenario.charger_count(), "one active flag per charger");
    scenario
        .chargers
        .iter()
        .map(|c| {
            kernel.contribution(
                &scenario.params,
                c.position,
                radii.radii[c.id],
                point,
                active[c.id],
            )
        })
        .sum()
}

/// Result of a peak-exposure estimate. `argmax_point` is one of the points
/// that were actually evaluated; ties keep the earliest point.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiationEstimate {
    pub max_value: f64,
    pub argmax_point: Option<Point>,
    pub samples: usize,
    pub seed: u64,
}

/// Estimates peak exposure by evaluating the field at every charger center
/// plus `samples` uniform points of the area. Deterministic for a given
/// seed, and drawing more samples with the same seed extends the same point
/// sequence, so the estimate is monotone in `samples`.
pub fn max_radiation(
    scenario: &Scenario,
    radii: &RadiusAssignment,
    active: &[bool],
    samples: usize,
    seed: u64,
    kernel: &dyn RadiationKernel,
) -> RadiationEstimate {
    let mut best: Option<(f64, Point)> = None;
    let mut consider = |point: Point, value: f64| match best {
        Some((max, _)) if value <= max => {}
        _ => best = Some((value, point)),
    };
    for c in &scenario.chargers {
        consider(
            c.position,
            radiation_at(scenario, radii, active, c.position, kernel),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let point = scenario.area.sample(&mut rng);
        consider(point, radiation_at(scenario, radii, active, point, kernel));
    }
    RadiationEstimate {
        max_value: best.map(|(v, _)| v).unwrap_or(0.0),
        argmax_point: best.map(|(_, p)| p),
        samples,
        seed,
    }
}

/// Outcome of an exposure-ceiling check.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityCheck {
    pub feasible: bool,
    pub estimate: RadiationEstimate,
}

impl FeasibilityCheck {
    /// Sample point exceeding the ceiling, present exactly when infeasible.
    pub fn witness(&self) -> Option<Point> {
        if self.feasible {
            None
        } else {
            self.estimate.argmax_point
        }
    }
}

/// Checks the exposure ceiling with every charger transmitting, the worst
/// case over the whole process since the active set only shrinks.
pub fn feasible(
    scenario: &Scenario,
    radii: &RadiusAssignment,
    samples: usize,
    seed: u64,
    kernel: &dyn RadiationKernel,
) -> FeasibilityCheck {
    let active = all_active(scenario.charger_count());
    let estimate = max_radiation(scenario, radii, &active, samples, seed, kernel);
    FeasibilityCheck {
        feasible: estimate.max_value <= scenario.params.rho + FEASIBILITY_EPS,
        estimate,
    }
}
