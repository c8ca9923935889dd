//! Coordinate-based reference computations used to check the closed-form
//! formulas.
//!
//! Nothing in here calls into the canonical frame of [`crate::embed_canonical`]:
//! lengths are turned into points by plain trilateration, and areas come from
//! midpoints and a cross product.

mod rng;
mod sweep;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lengths::{Edge, OppositePair, SixEdgeLengths, Tolerance};
use crate::mensuration::{medial_area, validate_edge_lengths, Status};
use crate::vector::Point3;

pub use rng::RngState;
pub use sweep::{run_sweep, sweep_samples, SweepSummary};

/// Minimum accepted volume of a random sample, as a fraction of `bounds³`.
pub const VOLUME_FLOOR: f64 = 1e-3;
/// Draws allowed before [`random_tetrahedron`] gives up.
pub const MAX_ATTEMPTS: usize = 10_000;
/// Denominator floor for relative errors.
pub const REL_ERROR_FLOOR: f64 = 1e-30;

/// Four vertices with the same roles as in the edge labeling: `p0` is the
/// apex shared by `a`, `b` and `e`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourPoints {
    pub p0: Point3,
    pub p1: Point3,
    pub p2: Point3,
    pub p3: Point3,
}

impl FourPoints {
    pub fn from_array([p0, p1, p2, p3]: [Point3; 4]) -> Self {
        Self { p0, p1, p2, p3 }
    }

    pub fn as_array(&self) -> [Point3; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    pub fn map(&self, f: impl Fn(Point3) -> Point3) -> Self {
        Self::from_array(self.as_array().map(f))
    }

    /// `(p1 − p0) · ((p2 − p0) × (p3 − p0)) / 6`.
    pub fn signed_volume(&self) -> f64 {
        (self.p1 - self.p0).triple(self.p2 - self.p0, self.p3 - self.p0) / 6.0
    }
}

/// Realizes the lengths as points: `p1` at the origin, `p2 = (0, d, 0)`,
/// `p3` in the xy-plane with `x ≥ 0`, and `p0` with `z ≥ 0`.
///
/// Flat inputs are accepted and reported as [`Status::Degenerate`], with
/// `p0` in the plane `z = 0`.
pub fn embed_reference(lengths: &SixEdgeLengths, tol: Tolerance) -> Result<(FourPoints, Status)> {
    let report = validate_edge_lengths(lengths, tol);
    if report.status == Status::NotRealizable {
        return Err(Error::NotRealizable(
            report.failure_reason().unwrap_or_default(),
        ));
    }
    let sq = |e| lengths.squared(e);
    let d = lengths.d();

    // p3: |p1 p3| = f, |p2 p3| = c
    let y3 = (sq(Edge::D) + sq(Edge::F) - sq(Edge::C)) / (2.0 * d);
    let x3 = (sq(Edge::F) - y3 * y3).max(0.0).sqrt();

    // p0: |p1 p0| = a, |p2 p0| = b, |p3 p0| = e
    let y0 = (sq(Edge::D) + sq(Edge::A) - sq(Edge::B)) / (2.0 * d);
    let x0 = if x3 > 0.0 {
        (sq(Edge::A) + sq(Edge::F) - sq(Edge::E) - 2.0 * y0 * y3) / (2.0 * x3)
    } else {
        0.0
    };
    let z0 = (sq(Edge::A) - x0 * x0 - y0 * y0).max(0.0).sqrt();

    let points = FourPoints {
        p0: Point3::new(
            x0,
            y0,
            if report.status == Status::Degenerate {
                0.0
            } else {
                z0
            },
        ),
        p1: Point3::ORIGIN,
        p2: Point3::new(0.0, d, 0.0),
        p3: Point3::new(x3, y3, 0.0),
    };
    Ok((points, report.status))
}

/// Pairwise distances in the fixed labeling. Fails only when two vertices
/// coincide.
pub fn edge_lengths_of(points: &FourPoints) -> Result<SixEdgeLengths> {
    let pts = points.as_array();
    SixEdgeLengths::from_array(Edge::ALL.map(|edge| {
        let (i, j) = edge.vertices();
        pts[i].distance(pts[j])
    }))
}

/// Medial parallelogram area computed directly: midpoints of the four
/// edges outside `pair`, two adjacent sides, norm of their cross product.
pub fn direct_medial_area(points: &FourPoints, pair: OppositePair) -> f64 {
    let pts = points.as_array();
    let mid = pair.cycle().map(|edge| {
        let (i, j) = edge.vertices();
        pts[i].midpoint(pts[j])
    });
    let side1 = mid[1] - mid[0];
    let side2 = mid[3] - mid[0];
    side1.cross(side2).norm()
}

/// Draws four points uniformly from `[−bounds, bounds]³`, redrawing until
/// the volume exceeds `VOLUME_FLOOR · bounds³`.
pub fn random_tetrahedron(state: RngState, bounds: f64) -> Result<(FourPoints, RngState)> {
    assert!(
        bounds > 0.0 && bounds.is_finite(),
        "bounds must be positive"
    );
    let floor = VOLUME_FLOOR * bounds.powi(3);
    let mut state = state;
    for _ in 0..MAX_ATTEMPTS {
        let mut coords = [0.0; 12];
        for c in &mut coords {
            let (value, next) = state.uniform(-bounds, bounds);
            *c = value;
            state = next;
        }
        let points = FourPoints::from_array(std::array::from_fn(|k| {
            Point3::new(coords[3 * k], coords[3 * k + 1], coords[3 * k + 2])
        }));
        if points.signed_volume().abs() > floor {
            return Ok((points, state));
        }
    }
    Err(Error::ResamplingExhausted(MAX_ATTEMPTS))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRecord {
    pub lengths: SixEdgeLengths,
    pub pair: OppositePair,
    pub formula_area: f64,
    pub oracle_area: f64,
    pub rel_error: f64,
    pub status: Verdict,
}

/// Closed-form medial area versus the coordinate oracle for one pair.
pub fn compare_formula_vs_oracle(
    lengths: &SixEdgeLengths,
    pair: OppositePair,
    tol: f64,
) -> Result<ComparisonRecord> {
    compare_with(lengths, pair, tol, |l, p| {
        medial_area(l, p, Tolerance::default())
    })
}

/// Like [`compare_formula_vs_oracle`] but with a caller-supplied formula,
/// which lets a deliberately wrong formula be shown to fail.
pub fn compare_with<F>(
    lengths: &SixEdgeLengths,
    pair: OppositePair,
    tol: f64,
    formula: F,
) -> Result<ComparisonRecord>
where
    F: Fn(&SixEdgeLengths, OppositePair) -> Result<f64>,
{
    let (points, _) = embed_reference(lengths, Tolerance::default())?;
    let oracle_area = direct_medial_area(&points, pair);
    let formula_area = formula(lengths, pair)?;
    let rel_error = (formula_area - oracle_area).abs() / oracle_area.max(REL_ERROR_FLOOR);
    Ok(ComparisonRecord {
        lengths: *lengths,
        pair,
        formula_area,
        oracle_area,
        rel_error,
        status: if rel_error <= tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    })
}
