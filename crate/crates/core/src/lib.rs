//! Wireless charging simulation and planning under an electromagnetic
//! exposure ceiling.
//!
//! The crate splits into the network description ([`model`]), an exact
//! event-driven simulator ([`engine`]), exposure estimation ([`radiation`]),
//! radius planners ([`planners`]), a disjoint-assignment model with an exact
//! solver and an LP rounding pipeline ([`lrdc`]), and a batch experiment
//! harness ([`harness`]).

pub mod engine;
pub mod fixtures;
pub mod harness;
pub mod lrdc;
pub mod model;
pub mod planners;
pub mod radiation;
pub mod simplex;

pub use engine::{
    horizon_bound, objective_curve, simulate, EngineError, Event, EventKind, NetworkState,
    SimulationResult,
};
pub use lrdc::{
    compute_frontiers, induced_radii, lrdc_brute_force, lrdc_objective, round_lrdc,
    solo_radius_cap, solve_lrdc_lp, validate_assignment, ChargerFrontiers, LrdcAssignment,
    LrdcError, LrdcLpSolution,
};
pub use model::{
    charging_rate, Area, Charger, Node, PhysicsParams, Point, RadiusAssignment, Scenario,
    ValidationReport, Violation,
};
pub use planners::{
    best_radius_for, charging_oriented, exhaustive_search, iterative_lrec, IterativeOutcome,
    PlannerConfig, RadiusChoice,
};
pub use radiation::{
    all_active, feasible, kernel_by_name, max_radiation, radiation_at, FeasibilityCheck,
    ProportionalKernel, RadiationEstimate, RadiationKernel, FEASIBILITY_EPS,
};
