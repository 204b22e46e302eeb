//! Domain types for wireless charging scenarios: chargers with finite energy
//! budgets, nodes with finite storage, and the power-transfer model that
//! couples them.

use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// 2-D location in the deployment plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Physical constants of the transfer and exposure model.
///
/// `alpha` scales source power, `beta` offsets the path loss so the rate
/// stays bounded at zero distance, `gamma` converts received power into
/// electromagnetic exposure, and `rho` is the exposure ceiling enforced
/// everywhere in the area.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicsParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub rho: f64,
}

/// Axis-aligned rectangle containing every charger and node.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Area {
    pub x_min: f64,
    pub y_min: f64,
    pub x_max: f64,
    pub y_max: f64,
}

impl Area {
    pub fn new(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Self {
        Area { x_min, y_min, x_max, y_max }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.x_min && p.x <= self.x_max && p.y >= self.y_min && p.y <= self.y_max
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x_min, self.y_min),
            Point::new(self.x_max, self.y_min),
            Point::new(self.x_min, self.y_max),
            Point::new(self.x_max, self.y_max),
        ]
    }

    /// Distance from `p` to the farthest point of the rectangle. This is the
    /// largest radius a charger at `p` ever needs to consider.
    pub fn max_dist_from(&self, p: Point) -> f64 {
        self.corners()
            .iter()
            .map(|c| p.dist(*c))
            .fold(0.0, f64::max)
    }

    /// Uniform sample; degenerate rectangles collapse to their boundary.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Point {
        let x = self.x_min + rng.random::<f64>() * (self.x_max - self.x_min);
        let y = self.y_min + rng.random::<f64>() * (self.y_max - self.y_min);
        Point::new(x, y)
    }
}

/// Stationary energy source. `id` is its index in the scenario's charger list.
#[derive(Debug, Clone, PartialEq)]
pub struct Charger {
    pub id: usize,
    pub position: Point,
    pub initial_energy: f64,
}

/// Rechargeable device. `id` is its index in the scenario's node list.
#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: usize,
    pub position: Point,
    pub initial_capacity: f64,
}

/// Complete problem instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "ScenarioFile", into = "ScenarioFile")]
pub struct Scenario {
    pub params: PhysicsParams,
    pub area: Area,
    pub chargers: Vec<Charger>,
    pub nodes: Vec<Node>,
}

/// One adjustable radius per charger, aligned with the charger list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusAssignment {
    pub radii: Vec<f64>,
}

impl RadiusAssignment {
    pub fn new(radii: Vec<f64>) -> Self {
        RadiusAssignment { radii }
    }

    pub fn zeros(charger_count: usize) -> Self {
        RadiusAssignment { radii: vec![0.0; charger_count] }
    }

    /// Radii must be finite, non-negative, and one per charger.
    pub fn validate_for(&self, scenario: &Scenario) -> Result<(), String> {
        if self.radii.len() != scenario.chargers.len() {
            return Err(format!(
                "expected {} radii, got {}",
                scenario.chargers.len(),
                self.radii.len()
            ));
        }
        for (u, &r) in self.radii.iter().enumerate() {
            if !r.is_finite() || r < 0.0 {
                return Err(format!("radius for charger {u} must be finite and >= 0, got {r}"));
            }
        }
        Ok(())
    }
}

/// Instantaneous power received at `target` from a charger at `charger` with
/// coverage radius `radius`. Zero outside the radius and whenever the charger
/// is not actively transmitting.
///
/// Panics on non-finite positions or a negative radius; scenario validation
/// is expected to have run first.
pub fn charging_rate(
    params: &PhysicsParams,
    charger: Point,
    radius: f64,
    target: Point,
    active: bool,
) -> f64 {
    assert!(
        charger.is_finite() && target.is_finite(),
        "charging_rate: positions must be finite"
    );
    assert!(
        radius.is_finite() && radius >= 0.0,
        "charging_rate: radius must be finite and >= 0, got {radius}"
    );
    if !active {
        return 0.0;
    }
    let d = charger.dist(target);
    if d > radius {
        return 0.0;
    }
    let denom = params.beta + d;
    params.alpha * radius * radius / (denom * denom)
}

/// One scenario invariant that does not hold.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Violation {
    #[error("{name} must be positive, got {value}")]
    NonPositiveParam { name: &'static str, value: f64 },
    #[error("rho must be non-negative, got {value}")]
    NegativeRho { value: f64 },
    #[error("area is not a valid rectangle: [{x_min}, {x_max}] x [{y_min}, {y_max}]")]
    InvalidArea { x_min: f64, x_max: f64, y_min: f64, y_max: f64 },
    #[error("charger at list position {index} has id {id}")]
    ChargerIdMismatch { index: usize, id: usize },
    #[error("node at list position {index} has id {id}")]
    NodeIdMismatch { index: usize, id: usize },
    #[error("charger {id} lies outside the area")]
    ChargerOutsideArea { id: usize },
    #[error("node {id} lies outside the area")]
    NodeOutsideArea { id: usize },
    #[error("charger {id} has invalid energy {value}")]
    BadChargerEnergy { id: usize, value: f64 },
    #[error("node {id} has invalid capacity {value}")]
    BadNodeCapacity { id: usize, value: f64 },
    #[error("charger {id} has a non-finite position")]
    BadChargerPosition { id: usize },
    #[error("node {id} has a non-finite position")]
    BadNodePosition { id: usize },
}

/// Outcome of scenario validation; collects every violation instead of
/// stopping at the first.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "scenario is valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Scenario {
    pub fn charger_count(&self) -> usize {
        self.chargers.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let p = &self.params;
        for (name, value) in [("alpha", p.alpha), ("beta", p.beta), ("gamma", p.gamma)] {
            if !(value.is_finite() && value > 0.0) {
                report.violations.push(Violation::NonPositiveParam { name, value });
            }
        }
        if !(p.rho.is_finite() && p.rho >= 0.0) {
            report.violations.push(Violation::NegativeRho { value: p.rho });
        }
        let a = &self.area;
        let area_ok = a.x_min.is_finite()
            && a.x_max.is_finite()
            && a.y_min.is_finite()
            && a.y_max.is_finite()
            && a.x_min <= a.x_max
            && a.y_min <= a.y_max;
        if !area_ok {
            report.violations.push(Violation::InvalidArea {
                x_min: a.x_min,
                x_max: a.x_max,
                y_min: a.y_min,
                y_max: a.y_max,
            });
        }
        for (index, c) in self.chargers.iter().enumerate() {
            if c.id != index {
                report.violations.push(Violation::ChargerIdMismatch { index, id: c.id });
            }
            if !c.position.is_finite() {
                report.violations.push(Violation::BadChargerPosition { id: c.id });
            } else if area_ok && !self.area.contains(c.position) {
                report.violations.push(Violation::ChargerOutsideArea { id: c.id });
            }
            if !(c.initial_energy.is_finite() && c.initial_energy >= 0.0) {
                report.violations.push(Violation::BadChargerEnergy {
                    id: c.id,
                    value: c.initial_energy,
                });
            }
        }
        for (index, n) in self.nodes.iter().enumerate() {
            if n.id != index {
                report.violations.push(Violation::NodeIdMismatch { index, id: n.id });
            }
            if !n.position.is_finite() {
                report.violations.push(Violation::BadNodePosition { id: n.id });
            } else if area_ok && !self.area.contains(n.position) {
                report.violations.push(Violation::NodeOutsideArea { id: n.id });
            }
            if !(n.initial_capacity.is_finite() && n.initial_capacity >= 0.0) {
                report.violations.push(Violation::BadNodeCapacity {
                    id: n.id,
                    value: n.initial_capacity,
                });
            }
        }
        report
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Serialize, Deserialize)]
struct ChargerRecord {
    id: usize,
    x: f64,
    y: f64,
    energy: f64,
}

#[derive(Serialize, Deserialize)]
struct NodeRecord {
    id: usize,
    x: f64,
    y: f64,
    capacity: f64,
}

/// On-disk form: positions flattened to `x`/`y`, energy fields by role.
#[derive(Serialize, Deserialize)]
struct ScenarioFile {
    params: PhysicsParams,
    area: Area,
    chargers: Vec<ChargerRecord>,
    nodes: Vec<NodeRecord>,
}

impl From<ScenarioFile> for Scenario {
    fn from(f: ScenarioFile) -> Self {
        Scenario {
            params: f.params,
            area: f.area,
            chargers: f
                .chargers
                .into_iter()
                .map(|c| Charger {
                    id: c.id,
                    position: Point::new(c.x, c.y),
                    initial_energy: c.energy,
                })
                .collect(),
            nodes: f
                .nodes
                .into_iter()
                .map(|n| Node {
                    id: n.id,
                    position: Point::new(n.x, n.y),
                    initial_capacity: n.capacity,
                })
                .collect(),
        }
    }
}

impl From<Scenario> for ScenarioFile {
    fn from(s: Scenario) -> Self {
        ScenarioFile {
            params: s.params,
            area: s.area,
            chargers: s
                .chargers
                .into_iter()
                .map(|c| ChargerRecord {
                    id: c.id,
                    x: c.position.x,
                    y: c.position.y,
                    energy: c.initial_energy,
                })
                .collect(),
            nodes: s
                .nodes
                .into_iter()
                .map(|n| NodeRecord {
                    id: n.id,
                    x: n.position.x,
                    y: n.position.y,
                    capacity: n.initial_capacity,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params_unit(rho: f64) -> PhysicsParams {
        PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 1.0, rho }
    }

    #[test]
    fn rate_at_unit_distance() {
        let p = params_unit(2.0);
        let rate = charging_rate(&p, Point::new(0.0, 0.0), 1.0, Point::new(1.0, 0.0), true);
        assert_relative_eq!(rate, 0.25, max_relative = 1e-15);
    }

    #[test]
    fn rate_at_source() {
        let p = params_unit(2.0);
        let r = 2.0_f64.sqrt();
        let rate = charging_rate(&p, Point::new(3.0, 0.0), r, Point::new(3.0, 0.0), true);
        assert_relative_eq!(rate, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn rate_zero_outside_radius() {
        let p = params_unit(2.0);
        let rate = charging_rate(&p, Point::new(0.0, 0.0), 1.0, Point::new(1.0 + 1e-12, 0.0), true);
        assert_eq!(rate, 0.0);
        let boundary = charging_rate(&p, Point::new(0.0, 0.0), 1.0, Point::new(1.0, 0.0), true);
        assert!(boundary > 0.0);
    }

    #[test]
    fn rate_zero_when_inactive() {
        let p = params_unit(2.0);
        let rate = charging_rate(&p, Point::new(0.0, 0.0), 1.0, Point::new(0.5, 0.0), false);
        assert_eq!(rate, 0.0);
    }

    #[test]
    fn rate_scales_with_radius_squared() {
        let p = params_unit(2.0);
        let at = |r: f64| charging_rate(&p, Point::new(0.0, 0.0), r, Point::new(0.5, 0.0), true);
        assert_relative_eq!(at(2.0), 4.0 * at(1.0), max_relative = 1e-12);
    }

    #[test]
    #[should_panic(expected = "radius must be finite")]
    fn rate_rejects_negative_radius() {
        let p = params_unit(2.0);
        charging_rate(&p, Point::new(0.0, 0.0), -1.0, Point::new(1.0, 0.0), true);
    }

    #[test]
    #[should_panic(expected = "positions must be finite")]
    fn rate_rejects_non_finite_position() {
        let p = params_unit(2.0);
        charging_rate(&p, Point::new(f64::NAN, 0.0), 1.0, Point::new(1.0, 0.0), true);
    }

    #[test]
    fn fixture_is_valid() {
        let s = crate::fixtures::fig1();
        assert!(s.validate().is_valid());
    }

    #[test]
    fn validation_collects_all_violations() {
        let mut s = crate::fixtures::fig1();
        s.params.beta = 0.0;
        s.nodes[1].position = Point::new(100.0, 0.0);
        s.chargers[0].initial_energy = -1.0;
        let report = s.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .contains(&Violation::NonPositiveParam { name: "beta", value: 0.0 }));
        assert!(report.violations.contains(&Violation::NodeOutsideArea { id: 1 }));
        assert!(report
            .violations
            .contains(&Violation::BadChargerEnergy { id: 0, value: -1.0 }));
        assert_eq!(report.violations.len(), 3);
    }

    #[test]
    fn validation_reports_id_mismatch() {
        let mut s = crate::fixtures::fig1();
        s.chargers[1].id = 7;
        let report = s.validate();
        assert!(report
            .violations
            .contains(&Violation::ChargerIdMismatch { index: 1, id: 7 }));
    }

    #[test]
    fn radius_assignment_validation() {
        let s = crate::fixtures::fig1();
        assert!(RadiusAssignment::zeros(2).validate_for(&s).is_ok());
        assert!(RadiusAssignment::new(vec![1.0]).validate_for(&s).is_err());
        assert!(RadiusAssignment::new(vec![1.0, -0.5]).validate_for(&s).is_err());
        assert!(RadiusAssignment::new(vec![1.0, f64::INFINITY]).validate_for(&s).is_err());
    }

    #[test]
    fn area_helpers() {
        let a = Area::new(0.0, -0.5, 3.0, 0.5);
        assert!(a.contains(Point::new(0.0, 0.5)));
        assert!(!a.contains(Point::new(3.1, 0.0)));
        let d = a.max_dist_from(Point::new(3.0, 0.0));
        assert_relative_eq!(d, (9.0_f64 + 0.25).sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn scenario_json_schema_round_trip() {
        let s = crate::fixtures::fig1();
        let text = s.to_json_pretty();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["params"]["alpha"], 1.0);
        assert_eq!(value["area"]["x_max"], 3.0);
        assert_eq!(value["chargers"][0]["x"], 1.0);
        assert_eq!(value["chargers"][1]["energy"], 1.0);
        assert_eq!(value["nodes"][1]["capacity"], 1.0);
        let back = Scenario::from_json(&text).unwrap();
        assert_eq!(back, s);
    }
}
