//! The 16 convex lattice polygons with exactly one interior point, up to
//! SA(2,Z), labeled `Bx` by boundary-point count B and a disambiguating
//! letter, and their quivers.

use crate::{LatticePolygon, PolygonError};

const LABELS: [&str; 16] = [
    "3", "4a", "4b", "4c", "5a", "5b", "6a", "6b", "6c", "6d", "7a", "7b", "8a", "8b", "8c", "9",
];

pub fn catalog_labels() -> &'static [&'static str] {
    &LABELS
}

/// Corner coordinates of a catalog polygon, counterclockwise. Boundary
/// lattice points interior to an edge are not corners; they are recovered by
/// the invariants.
pub fn catalog_polygon(label: &str) -> Result<LatticePolygon, PolygonError> {
    let corners: Vec<(i64, i64)> = match label {
        "3" => vec![(0, 1), (-1, -1), (1, 0)],
        "4a" => vec![(0, 1), (-1, 0), (0, -1), (1, 0)],
        "4b" => vec![(0, 1), (-1, 0), (-1, -1), (1, 0)],
        "4c" => vec![(0, 1), (-2, -1), (1, 0)],
        "5a" => vec![(0, 1), (-1, 0), (0, -1), (1, 0), (1, 1)],
        "5b" => vec![(0, 1), (-1, 1), (-1, -1), (1, 0)],
        "6a" => vec![(0, 1), (-1, 0), (-1, -1), (0, -1), (1, 0), (1, 1)],
        "6b" => vec![(1, 1), (-1, 1), (-1, -1), (1, 0)],
        "6c" => vec![(1, 1), (-1, 1), (-1, 0), (0, -1), (1, 0)],
        "6d" => vec![(1, 0), (-1, 2), (-1, -1)],
        "7a" => vec![(1, 0), (-1, 2), (-1, -1), (0, -1)],
        "7b" => vec![(0, 1), (-1, 1), (-1, -1), (1, -1), (1, 0)],
        "8a" => vec![(1, -1), (-1, 3), (-1, -1)],
        "8b" => vec![(1, 0), (-1, 2), (-1, -1), (1, -1)],
        "8c" => vec![(1, 1), (-1, 1), (-1, -1), (1, -1)],
        "9" => vec![(2, -1), (-1, 2), (-1, -1)],
        other => return Err(PolygonError::UnknownLabel(other.to_string())),
    };
    LatticePolygon::new(corners)
}

/// Quiver label for a polygon label: B boundary points correspond to the
/// B-vertex quiver A_{11−B}, except at B = 4 where 4a and 4c share the
/// 4-cycle quiver (A7') while 4b has the other 4-vertex quiver (A7).
pub fn quiver_for_polygon(label: &str) -> Result<&'static str, PolygonError> {
    Ok(match label {
        "3" => "A8",
        "4a" | "4c" => "A7p",
        "4b" => "A7",
        "5a" | "5b" => "A6",
        "6a" | "6b" | "6c" | "6d" => "A5",
        "7a" | "7b" => "A4",
        "8a" | "8b" | "8c" => "A3",
        "9" => "A2",
        other => return Err(PolygonError::UnknownLabel(other.to_string())),
    })
}
