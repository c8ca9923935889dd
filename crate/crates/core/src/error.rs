use thiserror::Error;

use crate::lengths::{Edge, OppositePair};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {edge} must be positive and finite, got {value}")]
    NonPositiveLength { edge: Edge, value: f64 },

    #[error("lengths {0}, {1}, {2} violate the triangle inequality")]
    NotATriangle(f64, f64, f64),

    #[error("radicand for pair {pair} is {radicand}, below tolerance")]
    NegativeRadicand { pair: OppositePair, radicand: f64 },

    #[error("edge lengths are not realizable: {0}")]
    NotRealizable(String),

    #[error("canonical frame is degenerate: {0}")]
    DegenerateFrame(&'static str),

    #[error("no well-conditioned tetrahedron after {0} attempts")]
    ResamplingExhausted(usize),
}
