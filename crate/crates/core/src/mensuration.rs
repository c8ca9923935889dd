//! Closed-form mensuration from edge lengths alone: face areas, the
//! Cayley–Menger determinant and volume, realizability, and the medial
//! parallelogram area and opposite-edge angle for each pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lengths::{Edge, Face, OppositePair, SixEdgeLengths, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Realizable,
    /// All faces are proper triangles but the four vertices are coplanar.
    Degenerate,
    NotRealizable,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealizabilityReport {
    /// Strict triangle inequality per face, in [`Face::ALL`] order.
    pub face_ok: [bool; 4],
    /// The bordered 5×5 Cayley–Menger determinant (length⁶), equal to `288 V²`.
    pub cm_value: f64,
    /// `None` when the determinant is negative beyond tolerance.
    pub volume: Option<f64>,
    pub status: Status,
}

impl RealizabilityReport {
    pub fn failing_faces(&self) -> impl Iterator<Item = Face> + '_ {
        Face::ALL
            .into_iter()
            .zip(self.face_ok)
            .filter_map(|(face, ok)| (!ok).then_some(face))
    }

    /// Human-readable cause when the status is `NotRealizable`.
    pub fn failure_reason(&self) -> Option<String> {
        if self.status != Status::NotRealizable {
            return None;
        }
        let faces: Vec<_> = self.failing_faces().map(Face::key).collect();
        Some(if faces.is_empty() {
            format!(
                "Cayley-Menger determinant is negative ({:e})",
                self.cm_value
            )
        } else {
            format!("triangle inequality fails on face {}", faces.join(", "))
        })
    }
}

fn strict_triangle(sides: [f64; 3]) -> bool {
    let [x, y, z] = sides;
    x < y + z && y < x + z && z < x + y
}

/// Area of a triangle from its side lengths.
///
/// Uses Kahan's ordering of Heron's formula (sides sorted in decreasing
/// order, parenthesised as written) which stays accurate for needle-like
/// triangles. A triple that is degenerate within `tol` yields `0`.
pub fn heron_face_area(l1: f64, l2: f64, l3: f64, tol: Tolerance) -> Result<f64> {
    let mut s = [l1, l2, l3];
    if s.iter().any(|l| !(l.is_finite() && *l > 0.0)) {
        return Err(Error::NotATriangle(l1, l2, l3));
    }
    s.sort_by(|p, q| q.total_cmp(p));
    let [x, y, z] = s;
    let slack = z - (x - y);
    if slack < -tol.scaled(x, 1) {
        return Err(Error::NotATriangle(l1, l2, l3));
    }
    let slack = slack.max(0.0);
    let product = (x + (y + z)) * slack * (z + (x - y)) * (x + (y - z));
    Ok(0.25 * product.sqrt())
}

/// Determinant of the bordered matrix of squared distances
///
/// ```text
/// | 0  1   1   1   1  |
/// | 1  0   a²  b²  e² |
/// | 1  a²  0   d²  f² |
/// | 1  b²  d²  0   c² |
/// | 1  e²  f²  c²  0  |
/// ```
///
/// (rows and columns ordered `P0..P3`), which equals `288 V²`.
pub fn cayley_menger_determinant(lengths: &SixEdgeLengths) -> f64 {
    let sq = |e| lengths.squared(e);
    let (a, b, c, d, e, f) = (
        sq(Edge::A),
        sq(Edge::B),
        sq(Edge::C),
        sq(Edge::D),
        sq(Edge::E),
        sq(Edge::F),
    );
    let mut m = [
        [0.0, 1.0, 1.0, 1.0, 1.0],
        [1.0, 0.0, a, b, e],
        [1.0, a, 0.0, d, f],
        [1.0, b, d, 0.0, c],
        [1.0, e, f, c, 0.0],
    ];
    determinant(&mut m)
}

/// Gaussian elimination with partial pivoting. Consumes `m`.
fn determinant<const N: usize>(m: &mut [[f64; N]; N]) -> f64 {
    let mut det = 1.0;
    for col in 0..N {
        let pivot = (col..N)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap_or(col);
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..N {
            let factor = m[row][col] / m[col][col];
            if factor != 0.0 {
                let pivot_row = m[col];
                for (cell, p) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell -= factor * p;
                }
            }
        }
    }
    det
}

/// Volume from the Cayley–Menger determinant, `sqrt(CM / 288)`.
///
/// Determinants within `tol · scale⁶` of zero give volume `0`.
pub fn cayley_menger_volume(lengths: &SixEdgeLengths, tol: Tolerance) -> Result<f64> {
    let cm = cayley_menger_determinant(lengths);
    volume_from_cm(cm, tol.scaled(lengths.scale(), 6)).ok_or_else(|| {
        Error::NotRealizable(format!("Cayley-Menger determinant is negative ({cm:e})"))
    })
}

fn volume_from_cm(cm: f64, threshold: f64) -> Option<f64> {
    if cm > threshold {
        Some((cm / 288.0).sqrt())
    } else if cm >= -threshold {
        Some(0.0)
    } else {
        None
    }
}

/// Classifies a sextuple of lengths as a proper, flat, or impossible
/// tetrahedron.
pub fn validate_edge_lengths(lengths: &SixEdgeLengths, tol: Tolerance) -> RealizabilityReport {
    let face_ok = Face::ALL.map(|face| strict_triangle(lengths.face(face)));
    let cm_value = cayley_menger_determinant(lengths);
    let threshold = tol.scaled(lengths.scale(), 6);
    let volume = volume_from_cm(cm_value, threshold);
    let status = if !face_ok.iter().all(|&ok| ok) {
        Status::NotRealizable
    } else if cm_value > threshold {
        Status::Realizable
    } else if cm_value >= -threshold {
        Status::Degenerate
    } else {
        Status::NotRealizable
    };
    RealizabilityReport {
        face_ok,
        cm_value,
        volume,
        status,
    }
}

/// `4 p² q² − bracket²` for the chosen pair `(p, q)`, evaluated in the
/// factored form `(2pq − |bracket|)(2pq + |bracket|)`.
pub fn medial_radicand(lengths: &SixEdgeLengths, pair: OppositePair) -> f64 {
    let two_pq = 2.0 * lengths.pair_product(pair);
    let bracket = lengths.pair_bracket(pair).abs();
    (two_pq - bracket) * (two_pq + bracket)
}

fn checked_radicand(lengths: &SixEdgeLengths, pair: OppositePair, tol: Tolerance) -> Result<f64> {
    let radicand = medial_radicand(lengths, pair);
    if radicand < -tol.scaled(lengths.scale(), 4) {
        return Err(Error::NegativeRadicand { pair, radicand });
    }
    Ok(radicand.max(0.0))
}

/// Area of the medial parallelogram selected by `pair`:
/// `sqrt(4 p² q² − bracket²) / 8`.
///
/// Flat inputs are accepted (the parallelogram then lies in the common
/// plane). A radicand below `−tol · scale⁴` means the lengths cannot belong
/// to any tetrahedron and is reported as [`Error::NegativeRadicand`].
pub fn medial_area(lengths: &SixEdgeLengths, pair: OppositePair, tol: Tolerance) -> Result<f64> {
    Ok(checked_radicand(lengths, pair, tol)?.sqrt() / 8.0)
}

/// Medial areas for `de`, `ac` and `bf`, in that order.
pub fn medial_area_all(lengths: &SixEdgeLengths, tol: Tolerance) -> Result<[f64; 3]> {
    Ok([
        medial_area(lengths, OppositePair::De, tol)?,
        medial_area(lengths, OppositePair::Ac, tol)?,
        medial_area(lengths, OppositePair::Bf, tol)?,
    ])
}

/// Cosine of the (unsigned) angle between the lines carrying the two chosen
/// edges, `|bracket| / (2pq)`, clamped into `[0, 1]`.
///
/// The medial area is `(pq / 4) · sin θ` for the same angle.
pub fn opposite_edge_cosine(
    lengths: &SixEdgeLengths,
    pair: OppositePair,
    tol: Tolerance,
) -> Result<f64> {
    checked_radicand(lengths, pair, tol)?;
    let cos = lengths.pair_bracket(pair).abs() / (2.0 * lengths.pair_product(pair));
    Ok(cos.clamp(0.0, 1.0))
}
