//! Batch front end for `tetmedial-core`: reads edge-length records as CSV or
//! JSON and writes one JSON Lines report per record.

pub mod records;
pub mod report;

pub use records::{parse_records, Format, InputRecord, ParseError};
pub use report::{
    compute_report, selftest, validate_record, write_json_line, PairSelection, ReportRecord,
    ValidationRecord,
};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const UNREALIZABLE: i32 = 2;
    pub const SELFTEST_FAILED: i32 = 3;
}
