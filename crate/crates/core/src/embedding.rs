//! Coordinates for a tetrahedron given by edge lengths, in the frame where
//! the apex `P0` sits on the positive z-axis and the base `P1 P2 P3` lies in
//! the xy-plane with edge `d` parallel to the y-axis:
//!
//! ```text
//! P0 = (0, 0, z)    P1 = (x, y, 0)    P2 = (x, y + d, 0)    P3 = (xi, upsilon, 0)
//! ```
//!
//! In this frame the `de` medial parallelogram is spanned by
//! `u = (0, d/2, 0)` and `v = (−xi/2, −upsilon/2, z/2)`.

use crate::error::{Error, Result};
use crate::lengths::{Edge, OppositePair, SixEdgeLengths, Tolerance};
use crate::mensuration::{validate_edge_lengths, Status};
use crate::vector::{Point3, Vec3};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmbeddedTet {
    pub lengths: SixEdgeLengths,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub xi: f64,
    pub upsilon: f64,
}

impl EmbeddedTet {
    /// `[P0, P1, P2, P3]`.
    pub fn vertices(&self) -> [Point3; 4] {
        let d = self.lengths.d();
        [
            Point3::new(0.0, 0.0, self.z),
            Point3::new(self.x, self.y, 0.0),
            Point3::new(self.x, self.y + d, 0.0),
            Point3::new(self.xi, self.upsilon, 0.0),
        ]
    }

    /// Residuals `lhs − rhs` of the five squared-length relations that tie
    /// the coordinates to `f, c, a, b, e` (in that order). `d` holds by
    /// construction.
    pub fn residuals(&self) -> [f64; 5] {
        let l = &self.lengths;
        let (x, y, z, xi, up, d) = (self.x, self.y, self.z, self.xi, self.upsilon, l.d());
        [
            l.squared(Edge::F) - ((x - xi).powi(2) + (y - up).powi(2)),
            l.squared(Edge::C) - ((x - xi).powi(2) + (y + d - up).powi(2)),
            l.squared(Edge::A) - (x * x + y * y + z * z),
            l.squared(Edge::B) - (x * x + (y + d).powi(2) + z * z),
            l.squared(Edge::E) - (xi * xi + up * up + z * z),
        ]
    }
}

/// Places the tetrahedron in the canonical frame.
///
/// `y` and `upsilon` follow from differences of the squared-length relations:
///
/// ```text
/// y       = (b² − a² − d²) / (2d)
/// upsilon = (b² + f² − a² − c²) / (2d)
/// ```
///
/// and the rest from `x² + z² = a² − y²`, `xi² + z² = e² − upsilon²`,
/// `(x − xi)² = f² − (y − upsilon)²`, taking `z ≥ 0` and `x − xi ≥ 0`.
/// Any other sign choice gives a mirror image.
///
/// Flat inputs are rejected with [`Error::DegenerateFrame`]: the frame needs
/// the apex strictly above the base plane.
pub fn embed_canonical(lengths: &SixEdgeLengths, tol: Tolerance) -> Result<EmbeddedTet> {
    let report = validate_edge_lengths(lengths, tol);
    match report.status {
        Status::Realizable => {}
        Status::Degenerate => return Err(Error::DegenerateFrame("tetrahedron is flat")),
        Status::NotRealizable => {
            return Err(Error::NotRealizable(
                report.failure_reason().unwrap_or_default(),
            ))
        }
    }
    let scale = lengths.scale();
    let eps = tol.scaled(scale, 1);
    let d = lengths.d();
    if d <= eps {
        return Err(Error::DegenerateFrame("edge d is too short"));
    }
    let sq = |e| lengths.squared(e);

    let y = (sq(Edge::B) - sq(Edge::A) - sq(Edge::D)) / (2.0 * d);
    let upsilon = lengths.pair_bracket(OppositePair::De) / (2.0 * d);

    // s = x − xi, the distance from P3 to the line through P1 and P2.
    let s = (sq(Edge::F) - (y - upsilon).powi(2)).max(0.0).sqrt();
    if s <= eps {
        return Err(Error::DegenerateFrame("base triangle is collinear"));
    }
    let a_rest = sq(Edge::A) - y * y;
    let e_rest = sq(Edge::E) - upsilon * upsilon;
    // x² − xi² = (x − xi)(x + xi)
    let sum = (a_rest - e_rest) / s;
    let x = 0.5 * (sum + s);
    let xi = 0.5 * (sum - s);
    let z = (a_rest - x * x).max(0.0).sqrt();
    if z <= eps {
        return Err(Error::DegenerateFrame("apex lies in the base plane"));
    }
    Ok(EmbeddedTet {
        lengths: *lengths,
        x,
        y,
        z,
        xi,
        upsilon,
    })
}

/// The parallelogram formed by the midpoints of the four edges not in the
/// chosen pair.
///
/// Vertices follow [`OppositePair::cycle`], so consecutive vertices are
/// midpoints of two edges of a common face. `u = vertices[1] − vertices[0]`
/// is half the first chosen edge and `v = vertices[0] − vertices[3]` half the
/// second.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MedialParallelogram {
    pub pair: OppositePair,
    pub vertices: [Point3; 4],
    pub u: Vec3,
    pub v: Vec3,
}

impl MedialParallelogram {
    /// Builds the parallelogram from tetrahedron vertices `[P0, P1, P2, P3]`
    /// in any frame.
    pub fn from_points(points: &[Point3; 4], pair: OppositePair) -> Self {
        let vertices = pair.cycle().map(|edge| {
            let (i, j) = edge.vertices();
            points[i].midpoint(points[j])
        });
        Self {
            pair,
            vertices,
            u: vertices[1] - vertices[0],
            v: vertices[0] - vertices[3],
        }
    }

    pub fn area(&self) -> f64 {
        self.u.cross(self.v).norm()
    }

    pub fn center(&self) -> Point3 {
        let sum = self
            .vertices
            .iter()
            .fold(Vec3::default(), |acc, p| acc + p.to_vec());
        Point3::ORIGIN + sum / 4.0
    }

    /// Consecutive side vectors `v[k+1] − v[k]`, wrapping around.
    pub fn sides(&self) -> [Vec3; 4] {
        let v = &self.vertices;
        [v[1] - v[0], v[2] - v[1], v[3] - v[2], v[0] - v[3]]
    }

    /// Scalar triple product of the edge vectors from the first vertex;
    /// zero for coplanar vertices.
    pub fn planarity_residual(&self) -> f64 {
        let v = &self.vertices;
        (v[1] - v[0]).triple(v[2] - v[0], v[3] - v[0])
    }
}

pub fn medial_parallelogram(embedded: &EmbeddedTet, pair: OppositePair) -> MedialParallelogram {
    MedialParallelogram::from_points(&embedded.vertices(), pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mensuration::medial_area;
    use std::f64::consts::SQRT_2;

    fn lengths(v: [f64; 6]) -> SixEdgeLengths {
        SixEdgeLengths::from_array(v).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn corner_points() -> [Point3; 4] {
        [
            Point3::new(0.0, 0.0, 1.0),
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
        ]
    }

    #[test]
    fn regular_frame_values() {
        let t = embed_canonical(&lengths([1.0; 6]), tol()).unwrap();
        assert_eq!(t.y, -0.5);
        assert_eq!(t.upsilon, 0.0);
        assert!(t.z > 0.0);
        assert!(
            t.residuals().iter().all(|r| r.abs() < 1e-14),
            "{:?}",
            t.residuals()
        );
    }

    #[test]
    fn corner_frame_values() {
        let t = embed_canonical(&lengths([1.0, SQRT_2, SQRT_2, 1.0, SQRT_2, 1.0]), tol()).unwrap();
        assert!(t.y.abs() < 1e-15);
        assert!(t.upsilon.abs() < 1e-15);
        // x − xi = +1 puts P3 at (−1, 0, 0): the mirror image of the usual
        // corner placement.
        assert!(t.x.abs() < 1e-15 && (t.xi + 1.0).abs() < 1e-15);
        assert!((t.z - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_flat_and_impossible_inputs() {
        let flat = lengths([SQRT_2, 1.0, SQRT_2, 1.0, 1.0, 1.0]);
        assert!(matches!(
            embed_canonical(&flat, tol()),
            Err(Error::DegenerateFrame(_))
        ));
        let broken = lengths([1.0, 1.0, 1.0, 1.0, 1.0, 10.0]);
        assert!(matches!(
            embed_canonical(&broken, tol()),
            Err(Error::NotRealizable(_))
        ));
    }

    #[test]
    fn corner_parallelogram_vertices() {
        let par = MedialParallelogram::from_points(&corner_points(), OppositePair::De);
        assert_eq!(
            par.vertices,
            [
                Point3::new(0.0, 0.0, 0.5),
                Point3::new(0.0, 0.5, 0.5),
                Point3::new(0.5, 0.5, 0.0),
                Point3::new(0.5, 0.0, 0.0),
            ]
        );
        assert!((par.area() - SQRT_2 / 4.0).abs() < 1e-15);
    }

    #[test]
    fn canonical_spanning_vectors() {
        let t = embed_canonical(&lengths([1.3, 1.1, 0.9, 1.0, 1.2, 1.05]), tol()).unwrap();
        let par = medial_parallelogram(&t, OppositePair::De);
        assert!((par.u - Vec3::new(0.0, 0.5, 0.0)).norm() < 1e-15);
        assert!((par.v - Vec3::new(-t.xi / 2.0, -t.upsilon / 2.0, t.z / 2.0)).norm() < 1e-15);
        // (zd/4, 0, xi d/4) up to sign of the middle component
        let n = par.u.cross(par.v);
        assert!((n.x - t.z / 4.0).abs() < 1e-15 && n.y == 0.0);
        assert!((n.z.abs() - t.xi.abs() / 4.0).abs() < 1e-15);
    }

    #[test]
    fn regular_parallelogram_is_a_square() {
        let t = embed_canonical(&lengths([1.0; 6]), tol()).unwrap();
        for pair in OppositePair::ALL {
            let par = medial_parallelogram(&t, pair);
            for side in par.sides() {
                assert!((side.norm() - 0.5).abs() < 1e-15);
            }
            assert!(par.u.dot(par.v).abs() < 1e-15);
            assert!(par.planarity_residual().abs() < 1e-15);
            assert!((par.area() - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn sides_are_half_the_chosen_edges() {
        let l = lengths([1.3, 1.1, 0.9, 1.0, 1.2, 1.05]);
        let t = embed_canonical(&l, tol()).unwrap();
        let pts = t.vertices();
        for pair in OppositePair::ALL {
            let par = medial_parallelogram(&t, pair);
            let (p, q) = pair.edges();
            let edge_vec = |e: Edge| {
                let (i, j) = e.vertices();
                pts[j] - pts[i]
            };
            // u ∥ p and v ∥ q, each half as long
            assert!(par.u.cross(edge_vec(p)).norm() < 1e-14);
            assert!(par.v.cross(edge_vec(q)).norm() < 1e-14);
            assert!((par.u.norm() - l.get(p) / 2.0).abs() < 1e-14);
            assert!((par.v.norm() - l.get(q) / 2.0).abs() < 1e-14);
            let [s0, s1, s2, s3] = par.sides();
            assert!((s0 + s2).norm() < 1e-15 && (s1 + s3).norm() < 1e-15);
            let closed = medial_area(&l, pair, tol()).unwrap();
            assert!((par.area() - closed).abs() < 1e-14, "{pair}");
        }
    }
}
