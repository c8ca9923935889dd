use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the six labeled edges. Vertex indices refer to `P0..P3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Edge {
    pub const ALL: [Edge; 6] = [Edge::A, Edge::B, Edge::C, Edge::D, Edge::E, Edge::F];

    /// Endpoints as vertex indices.
    pub const fn vertices(self) -> (usize, usize) {
        match self {
            Edge::A => (0, 1),
            Edge::B => (0, 2),
            Edge::C => (2, 3),
            Edge::D => (1, 2),
            Edge::E => (0, 3),
            Edge::F => (1, 3),
        }
    }

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn label(self) -> char {
        match self {
            Edge::A => 'a',
            Edge::B => 'b',
            Edge::C => 'c',
            Edge::D => 'd',
            Edge::E => 'e',
            Edge::F => 'f',
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A triangular face, named by its three edge labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    Abd,
    Aef,
    Bce,
    Cdf,
}

impl Face {
    pub const ALL: [Face; 4] = [Face::Abd, Face::Aef, Face::Bce, Face::Cdf];

    pub const fn edges(self) -> [Edge; 3] {
        match self {
            Face::Abd => [Edge::A, Edge::B, Edge::D],
            Face::Aef => [Edge::A, Edge::E, Edge::F],
            Face::Bce => [Edge::B, Edge::C, Edge::E],
            Face::Cdf => [Edge::C, Edge::D, Edge::F],
        }
    }

    pub const fn key(self) -> &'static str {
        match self {
            Face::Abd => "abd",
            Face::Aef => "aef",
            Face::Bce => "bce",
            Face::Cdf => "cdf",
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Selects one of the three pairs of non-incident edges, and with it one
/// medial parallelogram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OppositePair {
    De,
    Ac,
    Bf,
}

impl OppositePair {
    pub const ALL: [OppositePair; 3] = [OppositePair::De, OppositePair::Ac, OppositePair::Bf];

    /// The chosen edges. The first one spans side `u` of the parallelogram,
    /// the second spans side `v`.
    pub const fn edges(self) -> (Edge, Edge) {
        match self {
            OppositePair::De => (Edge::D, Edge::E),
            OppositePair::Ac => (Edge::A, Edge::C),
            OppositePair::Bf => (Edge::B, Edge::F),
        }
    }

    /// The four remaining edges, ordered so that consecutive entries (and the
    /// last with the first) lie on a common face. Their midpoints, in this
    /// order, are the parallelogram's vertices.
    pub const fn cycle(self) -> [Edge; 4] {
        match self {
            OppositePair::De => [Edge::A, Edge::B, Edge::C, Edge::F],
            OppositePair::Ac => [Edge::B, Edge::D, Edge::F, Edge::E],
            OppositePair::Bf => [Edge::A, Edge::D, Edge::C, Edge::E],
        }
    }

    pub const fn key(self) -> &'static str {
        match self {
            OppositePair::De => "de",
            OppositePair::Ac => "ac",
            OppositePair::Bf => "bf",
        }
    }
}

impl fmt::Display for OppositePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for OppositePair {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "de" => Ok(OppositePair::De),
            "ac" => Ok(OppositePair::Ac),
            "bf" => Ok(OppositePair::Bf),
            other => Err(format!(
                "unknown edge pair `{other}` (expected de, ac or bf)"
            )),
        }
    }
}

/// Relative tolerance used for clamping and degeneracy tests.
///
/// Absolute thresholds are `rel * scale^k`, where `scale` is the longest
/// edge and `k` is the length dimension of the compared quantity (4 for the
/// area radicand, 6 for the Cayley–Menger determinant).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT_REL: f64 = 1e-12;

    /// Panics if `rel` is negative or not finite.
    pub fn new(rel: f64) -> Self {
        assert!(
            rel.is_finite() && rel >= 0.0,
            "tolerance must be finite and non-negative"
        );
        Self(rel)
    }

    pub fn rel(self) -> f64 {
        self.0
    }

    pub fn scaled(self, scale: f64, power: i32) -> f64 {
        self.0 * scale.powi(power)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self(Self::DEFAULT_REL)
    }
}

/// The six edge lengths of a tetrahedron, labeled `a..f` as in the crate
/// docs. Every value is strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SixEdgeLengths([f64; 6]);

impl SixEdgeLengths {
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        Self::from_array([a, b, c, d, e, f])
    }

    pub fn from_array(values: [f64; 6]) -> Result<Self> {
        for edge in Edge::ALL {
            let value = values[edge.index()];
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveLength { edge, value });
            }
        }
        Ok(Self(values))
    }

    pub fn as_array(&self) -> [f64; 6] {
        self.0
    }

    pub fn get(&self, edge: Edge) -> f64 {
        self.0[edge.index()]
    }

    pub fn a(&self) -> f64 {
        self.0[0]
    }
    pub fn b(&self) -> f64 {
        self.0[1]
    }
    pub fn c(&self) -> f64 {
        self.0[2]
    }
    pub fn d(&self) -> f64 {
        self.0[3]
    }
    pub fn e(&self) -> f64 {
        self.0[4]
    }
    pub fn f(&self) -> f64 {
        self.0[5]
    }

    pub fn squared(&self, edge: Edge) -> f64 {
        let l = self.get(edge);
        l * l
    }

    /// Longest edge; the natural length unit for tolerances.
    pub fn scale(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }

    /// Every length multiplied by `factor`. Panics unless `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self::from_array(self.0.map(|l| l * factor)).expect("scale factor must be positive")
    }

    pub fn face(&self, face: Face) -> [f64; 3] {
        face.edges().map(|edge| self.get(edge))
    }

    /// Product of the two lengths of the chosen pair.
    pub fn pair_product(&self, pair: OppositePair) -> f64 {
        let (p, q) = pair.edges();
        self.get(p) * self.get(q)
    }

    /// Twice the dot product of the two chosen edge vectors, expressed in
    /// squared lengths. Up to sign this is `b² + f² − a² − c²` for `de`,
    /// `b² + f² − d² − e²` for `ac` and `a² + c² − d² − e²` for `bf`.
    /// Terms are grouped so that swapping within a group, or swapping the
    /// groups, gives a bit-identical magnitude.
    pub fn pair_bracket(&self, pair: OppositePair) -> f64 {
        use Edge::*;
        let sq = |e| self.squared(e);
        match pair {
            OppositePair::De => (sq(B) + sq(F)) - (sq(A) + sq(C)),
            OppositePair::Ac => (sq(B) + sq(F)) - (sq(D) + sq(E)),
            OppositePair::Bf => (sq(A) + sq(C)) - (sq(D) + sq(E)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn rejects_non_positive_and_non_finite() {
        assert_eq!(
            SixEdgeLengths::new(1.0, 1.0, 0.0, 1.0, 1.0, 1.0),
            Err(Error::NonPositiveLength {
                edge: Edge::C,
                value: 0.0
            })
        );
        assert!(SixEdgeLengths::new(1.0, -2.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(SixEdgeLengths::new(1.0, 1.0, 1.0, f64::NAN, 1.0, 1.0).is_err());
        assert!(SixEdgeLengths::new(1.0, 1.0, 1.0, 1.0, f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn opposite_pairs_share_no_vertex() {
        for pair in OppositePair::ALL {
            let (p, q) = pair.edges();
            let (p0, p1) = p.vertices();
            let (q0, q1) = q.vertices();
            let used: BTreeSet<_> = [p0, p1, q0, q1].into_iter().collect();
            assert_eq!(used.len(), 4, "{pair}");
        }
    }

    #[test]
    fn faces_are_closed_triangles() {
        for face in Face::ALL {
            let mut count = [0usize; 4];
            for edge in face.edges() {
                let (i, j) = edge.vertices();
                count[i] += 1;
                count[j] += 1;
            }
            let degrees: Vec<_> = count.into_iter().filter(|&c| c > 0).collect();
            assert_eq!(degrees, vec![2, 2, 2], "{face}");
        }
    }

    #[test]
    fn cycle_neighbours_share_a_face() {
        for pair in OppositePair::ALL {
            let cycle = pair.cycle();
            let (p, q) = pair.edges();
            assert!(!cycle.contains(&p) && !cycle.contains(&q));
            for k in 0..4 {
                let (x, y) = (cycle[k], cycle[(k + 1) % 4]);
                assert!(
                    Face::ALL
                        .iter()
                        .any(|f| f.edges().contains(&x) && f.edges().contains(&y)),
                    "{pair}: {x}{y}"
                );
            }
        }
    }

    #[test]
    fn pair_keys_round_trip() {
        for pair in OppositePair::ALL {
            assert_eq!(pair.key().parse::<OppositePair>().unwrap(), pair);
        }
        assert!("DE".parse::<OppositePair>().is_err());
    }
}
