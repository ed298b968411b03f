//! Convex lattice polygons: Pick invariants, equivalence under the group
//! SA(2,Z) = SL(2,Z) ⋉ Z² of orientation-preserving lattice-affine maps,
//! the catalog of the 16 polygons with a single interior lattice point,
//! spectral polynomials, and the polygon-to-quiver correspondence.

mod catalog;
mod spectral;

pub use catalog::{catalog_labels, catalog_polygon, quiver_for_polygon};
pub use spectral::{coefficient_name, spectral_poly, transformed_4a_and_target, verify_4a_to_4c};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices are not in strictly convex counterclockwise position")]
    NotConvex,
    #[error("unknown polygon label `{0}`")]
    UnknownLabel(String),
}

/// A convex lattice polygon given by its corners in counterclockwise order.
/// No three consecutive corners are collinear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<(i64, i64)>,
}

/// Lattice-point counts of a polygon: twice the area, boundary points, and
/// interior points, tied together by Pick's identity 2S = B + 2g − 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonInvariants {
    pub twice_area: i64,
    pub boundary: i64,
    pub interior: i64,
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0 - b.0, a.1 - b.1)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Convex hull in counterclockwise order (Andrew's monotone chain),
/// collinear boundary points dropped.
pub fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let build = |iter: &mut dyn Iterator<Item = (i64, i64)>| {
        let mut chain: Vec<(i64, i64)> = Vec::new();
        for p in iter {
            while chain.len() >= 2 {
                let a = chain[chain.len() - 2];
                let b = chain[chain.len() - 1];
                if cross(sub(b, a), sub(p, a)) <= 0 {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(p);
        }
        chain
    };
    let mut lower = build(&mut pts.iter().copied());
    let mut upper = build(&mut pts.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}

impl LatticePolygon {
    /// Corners in counterclockwise order; rejects clockwise, nonconvex, or
    /// collinear input.
    pub fn new(vertices: Vec<(i64, i64)>) -> Result<LatticePolygon, PolygonError> {
        if vertices.len() < 3 {
            return Err(PolygonError::TooFewVertices(vertices.len()));
        }
        // The vertex list must be its own convex hull, up to cyclic rotation.
        let hull = convex_hull(&vertices);
        if hull.len() != vertices.len() {
            return Err(PolygonError::NotConvex);
        }
        let start = vertices
            .iter()
            .position(|v| *v == hull[0])
            .ok_or(PolygonError::NotConvex)?;
        for (k, h) in hull.iter().enumerate() {
            if vertices[(start + k) % vertices.len()] != *h {
                return Err(PolygonError::NotConvex);
            }
        }
        Ok(LatticePolygon { vertices })
    }

    /// Convex hull of arbitrary lattice points (at least 3 corners required).
    pub fn hull_of(points: &[(i64, i64)]) -> Result<LatticePolygon, PolygonError> {
        let hull = convex_hull(points);
        LatticePolygon::new(hull)
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn n_corners(&self) -> usize {
        self.vertices.len()
    }

    fn edges(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| sub(self.vertices[(i + 1) % n], self.vertices[i]))
    }

    /// Twice the area, boundary count by edge gcds, interior count by Pick.
    pub fn invariants(&self) -> PolygonInvariants {
        let n = self.vertices.len();
        let twice_area: i64 = (0..n)
            .map(|i| cross(self.vertices[i], self.vertices[(i + 1) % n]))
            .sum();
        let boundary: i64 = self.edges().map(|(dx, dy)| gcd(dx, dy)).sum();
        let interior = (twice_area - boundary + 2) / 2;
        PolygonInvariants {
            twice_area,
            boundary,
            interior,
        }
    }

    fn bounding_box(&self) -> ((i64, i64), (i64, i64)) {
        let xs = self.vertices.iter().map(|v| v.0);
        let ys = self.vertices.iter().map(|v| v.1);
        (
            (xs.clone().min().unwrap(), xs.max().unwrap()),
            (ys.clone().min().unwrap(), ys.max().unwrap()),
        )
    }

    fn side(&self, p: (i64, i64)) -> i64 {
        // Minimum over edges of the left-turn cross product: positive inside,
        // zero on the boundary, negative outside.
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                cross(sub(b, a), sub(p, a))
            })
            .min()
            .expect("polygon has edges")
    }

    /// All lattice points inside or on the boundary, by box enumeration.
    pub fn lattice_points(&self) -> Vec<(i64, i64)> {
        let ((x0, x1), (y0, y1)) = self.bounding_box();
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if self.side((x, y)) >= 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Strictly interior lattice points, by box enumeration.
    pub fn interior_points(&self) -> Vec<(i64, i64)> {
        let ((x0, x1), (y0, y1)) = self.bounding_box();
        let mut out = Vec::new();
        for x in (x0 + 1)..x1 {
            for y in (y0 + 1)..y1 {
                if self.side((x, y)) > 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn translate(&self, v: (i64, i64)) -> LatticePolygon {
        LatticePolygon {
            vertices: self
                .vertices
                .iter()
                .map(|p| (p.0 + v.0, p.1 + v.1))
                .collect(),
        }
    }

    /// Apply a linear map with determinant +1 (corner order and convexity
    /// are preserved).
    pub fn transform(&self, m: [[i64; 2]; 2]) -> LatticePolygon {
        debug_assert_eq!(m[0][0] * m[1][1] - m[0][1] * m[1][0], 1);
        LatticePolygon {
            vertices: self
                .vertices
                .iter()
                .map(|p| {
                    (
                        m[0][0] * p.0 + m[0][1] * p.1,
                        m[1][0] * p.0 + m[1][1] * p.1,
                    )
                })
                .collect(),
        }
    }
}

/// An element (M, v) of SA(2,Z) acting as p ↦ M·p + v.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: [[i64; 2]; 2],
    pub shift: (i64, i64),
}

impl AffineMap {
    pub fn apply(&self, p: LatticePolygon) -> LatticePolygon {
        p.transform(self.matrix).translate(self.shift)
    }
}

/// Find (M, v) ∈ SA(2,Z) with M·P1 + v = P2, if one exists.
///
/// An affine map sends corners to corners preserving counterclockwise order,
/// so it is determined by the cyclic alignment of the corner sequences: two
/// consecutive edge vectors of a convex polygon are linearly independent and
/// pin down M exactly. All alignments are tried.
pub fn sa2z_equivalent(p1: &LatticePolygon, p2: &LatticePolygon) -> Option<AffineMap> {
    let n = p1.n_corners();
    if n != p2.n_corners() {
        return None;
    }
    let e1: Vec<(i64, i64)> = p1.edges().collect();
    let e2: Vec<(i64, i64)> = p2.edges().collect();
    for offset in 0..n {
        // Solve M·u_k = w_k for the first two edges (u = e1, w = shifted e2).
        let u0 = e1[0];
        let u1 = e1[1];
        let w0 = e2[offset];
        let w1 = e2[(offset + 1) % n];
        let det = cross(u0, u1);
        if det == 0 {
            return None; // impossible for strictly convex corners
        }
        // M = [w0 w1]·[u0 u1]^{-1}; entries must be integral.
        let raw = [
            [w0.0 * u1.1 - w1.0 * u0.1, w1.0 * u0.0 - w0.0 * u1.0],
            [w0.1 * u1.1 - w1.1 * u0.1, w1.1 * u0.0 - w0.1 * u1.0],
        ];
        if raw.iter().flatten().any(|x| x % det != 0) {
            continue;
        }
        let m = [
            [raw[0][0] / det, raw[0][1] / det],
            [raw[1][0] / det, raw[1][1] / det],
        ];
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1 {
            continue;
        }
        let c1 = p1.vertices[0];
        let c2 = p2.vertices[offset];
        let shift = (
            c2.0 - m[0][0] * c1.0 - m[0][1] * c1.1,
            c2.1 - m[1][0] * c1.0 - m[1][1] * c1.1,
        );
        let candidate = AffineMap { matrix: m, shift };
        if candidate.apply(p1.clone()).vertices
            == (0..n)
                .map(|k| p2.vertices[(offset + k) % n])
                .collect::<Vec<_>>()
        {
            return Some(candidate);
        }
    }
    None
}

/// The unique catalog label whose polygon is SA(2,Z)-equivalent to the
/// input, if any.
pub fn classify(p: &LatticePolygon) -> Option<&'static str> {
    let inv = p.invariants();
    if inv.interior != 1 {
        return None;
    }
    catalog_labels()
        .iter()
        .copied()
        .find(|label| sa2z_equivalent(p, &catalog_polygon(label).expect("catalog label")).is_some())
}
