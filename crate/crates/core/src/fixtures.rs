//! Bundled certificate fixtures.

use crate::competition::Certificate;

/// JSON source of the shipped icosahedron certificate with four added
/// vertices (twelve triangles assigned along a fixed vertex ordering).
pub const ICOSAHEDRON_K4_JSON: &str = include_str!("../fixtures/icosahedron_k4.json");

/// The shipped icosahedron certificate, parsed.
pub fn icosahedron_k4() -> Certificate {
    serde_json::from_str(ICOSAHEDRON_K4_JSON).expect("bundled fixture parses")
}
