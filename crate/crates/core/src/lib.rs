//! Mensuration of a single tetrahedron given only its six edge lengths.
//!
//! The central quantity is the area of a *medial parallelogram*: pick two
//! opposite (non-incident) edges, and the midpoints of the remaining four
//! edges form a planar parallelogram whose sides are half the chosen edges.
//! Its area has the closed form
//!
//! ```text
//! area(d, e) = 1/8 * sqrt(4 d² e² − (b² + f² − a² − c²)²)
//! ```
//!
//! with the edge labels fixed as follows (vertex `P0` is the apex):
//!
//! ```text
//!                  P0
//!                 /|\
//!              a / | \ b            a = |P0P1|   b = |P0P2|
//!               /  |e \             c = |P2P3|   d = |P1P2|
//!             P1 --+-- P2           e = |P0P3|   f = |P1P3|
//!               \  d  /
//!              f \ | / c
//!                 \|/
//!                  P3
//! ```
//!
//! Opposite pairs are `(d, e)`, `(a, c)` and `(b, f)`; faces are `abd`,
//! `aef`, `bce` and `cdf`.
//!
//! The prefactor is 1/8. A commonly printed version of this formula carries
//! 1/16, which is off by a factor of two: the regular unit tetrahedron has
//! medial squares of side 1/2 and area exactly 1/4, and the 1/8 form gives
//! `sqrt(4)/8 = 1/4`. The [`oracle`] module re-derives every area from
//! explicit coordinates so the constant is checked rather than trusted.

#![forbid(unsafe_code)]

mod embedding;
mod error;
mod lengths;
mod mensuration;
pub mod oracle;
mod vector;

pub use embedding::{embed_canonical, medial_parallelogram, EmbeddedTet, MedialParallelogram};
pub use error::{Error, Result};
pub use lengths::{Edge, Face, OppositePair, SixEdgeLengths, Tolerance};
pub use mensuration::{
    cayley_menger_determinant, cayley_menger_volume, heron_face_area, medial_area, medial_area_all,
    medial_radicand, opposite_edge_cosine, validate_edge_lengths, RealizabilityReport, Status,
};
pub use vector::{Point3, Vec3};
