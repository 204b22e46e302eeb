//! Built-in scenarios with hand-checkable behavior.

use crate::model::{Area, Charger, Node, PhysicsParams, Point, Scenario};

/// Collinear two-charger, two-node instance used throughout the test suite.
///
/// Layout on the x-axis: node 0 at 0, charger 0 at 1, node 1 at 2,
/// charger 1 at 3. Every energy budget and storage capacity is 1, the
/// transfer constants are 1, and the exposure ceiling is 2. The optimum
/// radii are (1, sqrt(2)) with total transferred energy 5/3, and shrinking
/// charger 1 to radius 1 drops the total to 3/2 even though the covered
/// node set is unchanged.
pub fn fig1() -> Scenario {
    Scenario {
        params: PhysicsParams { alpha: 1.0, beta: 1.0, gamma: 1.0, rho: 2.0 },
        area: Area::new(0.0, -0.5, 3.0, 0.5),
        chargers: vec![
            Charger { id: 0, position: Point::new(1.0, 0.0), initial_energy: 1.0 },
            Charger { id: 1, position: Point::new(3.0, 0.0), initial_energy: 1.0 },
        ],
        nodes: vec![
            Node { id: 0, position: Point::new(0.0, 0.0), initial_capacity: 1.0 },
            Node { id: 1, position: Point::new(2.0, 0.0), initial_capacity: 1.0 },
        ],
    }
}

/// Fixture lookup by name, for the command-line interface.
pub fn by_name(name: &str) -> Option<Scenario> {
    match name {
        "fig1" => Some(fig1()),
        _ => None,
    }
}
