use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;
use tetmedial_core::oracle::run_sweep;
use tetmedial_core::{
    heron_face_area, medial_area, opposite_edge_cosine, validate_edge_lengths, Face, OppositePair,
    Status, Tolerance,
};

use crate::exit;
use crate::records::InputRecord;

/// Which medial parallelograms to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSelection {
    All,
    One(OppositePair),
}

impl PairSelection {
    fn includes(self, pair: OppositePair) -> bool {
        match self {
            PairSelection::All => true,
            PairSelection::One(p) => p == pair,
        }
    }
}

impl FromStr for PairSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(PairSelection::All),
            other => other.parse().map(PairSelection::One),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceAreas {
    pub abd: f64,
    pub aef: f64,
    pub bce: f64,
    pub cdf: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceFlags {
    pub abd: bool,
    pub aef: bool,
    pub bce: bool,
    pub cdf: bool,
}

/// One value per opposite pair; pairs not selected are omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct PairValues {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub de: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ac: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bf: Option<f64>,
}

impl PairValues {
    fn set(&mut self, pair: OppositePair, value: f64) {
        let slot = match pair {
            OppositePair::De => &mut self.de,
            OppositePair::Ac => &mut self.ac,
            OppositePair::Bf => &mut self.bf,
        };
        *slot = Some(value);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRecord {
    pub id: String,
    pub edges: [f64; 6],
    pub status: Status,
    pub degenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_areas: Option<FaceAreas>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub medial_areas: Option<PairValues>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cosines: Option<PairValues>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ReportRecord {
    fn failed(record: &InputRecord, error: String) -> Self {
        Self {
            id: record.id.clone(),
            edges: record.edges,
            status: Status::NotRealizable,
            degenerate: false,
            volume: None,
            face_areas: None,
            medial_areas: None,
            cosines: None,
            error: Some(error),
        }
    }
}

/// Full mensuration report for one record. Never fails: problems are
/// recorded in `error`, and numeric fields are only filled for realizable or
/// flat tetrahedra.
pub fn compute_report(record: &InputRecord, tol: Tolerance, pairs: PairSelection) -> ReportRecord {
    let lengths = match record.lengths() {
        Ok(l) => l,
        Err(e) => return ReportRecord::failed(record, e.to_string()),
    };
    let check = validate_edge_lengths(&lengths, tol);
    if check.status == Status::NotRealizable {
        return ReportRecord::failed(record, check.failure_reason().unwrap_or_default());
    }

    let mut errors = Vec::new();
    let face_area = |face: Face| {
        let [x, y, z] = lengths.face(face);
        heron_face_area(x, y, z, tol)
    };
    let face_areas = match Face::ALL.map(face_area) {
        [Ok(abd), Ok(aef), Ok(bce), Ok(cdf)] => Some(FaceAreas { abd, aef, bce, cdf }),
        results => {
            errors.extend(
                results
                    .into_iter()
                    .filter_map(|r| r.err())
                    .map(|e| e.to_string()),
            );
            None
        }
    };

    let mut areas = PairValues::default();
    let mut cosines = PairValues::default();
    for pair in OppositePair::ALL.into_iter().filter(|&p| pairs.includes(p)) {
        match (
            medial_area(&lengths, pair, tol),
            opposite_edge_cosine(&lengths, pair, tol),
        ) {
            (Ok(area), Ok(cos)) => {
                areas.set(pair, area);
                cosines.set(pair, cos);
            }
            (Err(e), _) | (_, Err(e)) => errors.push(e.to_string()),
        }
    }

    ReportRecord {
        id: record.id.clone(),
        edges: record.edges,
        status: check.status,
        degenerate: check.status == Status::Degenerate,
        volume: check.volume,
        face_areas,
        medial_areas: Some(areas),
        cosines: Some(cosines),
        error: (!errors.is_empty()).then(|| errors.join("; ")),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationRecord {
    pub id: String,
    pub edges: [f64; 6],
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_ok: Option<FaceFlags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Realizability verdict for one record.
pub fn validate_record(record: &InputRecord, tol: Tolerance) -> ValidationRecord {
    let lengths = match record.lengths() {
        Ok(l) => l,
        Err(e) => {
            return ValidationRecord {
                id: record.id.clone(),
                edges: record.edges,
                status: Status::NotRealizable,
                face_ok: None,
                cm_value: None,
                volume: None,
                error: Some(e.to_string()),
            }
        }
    };
    let report = validate_edge_lengths(&lengths, tol);
    let [abd, aef, bce, cdf] = report.face_ok;
    ValidationRecord {
        id: record.id.clone(),
        edges: record.edges,
        status: report.status,
        face_ok: Some(FaceFlags { abd, aef, bce, cdf }),
        cm_value: Some(report.cm_value),
        volume: report.volume,
        error: report.failure_reason(),
    }
}

pub fn write_json_line<W: Write, T: Serialize>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

/// Runs the formula-vs-oracle sweep over `[-1, 1]³`, writes the summary as
/// one JSON line, and returns the exit code.
pub fn selftest<W: Write>(seed: u64, n: usize, tol: f64, out: &mut W) -> io::Result<i32> {
    let summary = match run_sweep(seed, n, 1.0, tol) {
        Ok(s) => s,
        Err(e) => {
            writeln!(
                out,
                "{{\"error\":{}}}",
                serde_json::Value::String(e.to_string())
            )?;
            return Ok(exit::SELFTEST_FAILED);
        }
    };
    write_json_line(out, &summary)?;
    Ok(if summary.passed() {
        exit::SUCCESS
    } else {
        exit::SELFTEST_FAILED
    })
}
