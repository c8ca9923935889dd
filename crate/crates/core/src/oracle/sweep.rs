use serde::Serialize;

use super::{
    compare_formula_vs_oracle, edge_lengths_of, random_tetrahedron, ComparisonRecord, FourPoints,
    RngState, Verdict,
};
use crate::error::Result;
use crate::lengths::OppositePair;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSummary {
    pub seed: u64,
    /// Number of tetrahedra; each contributes one comparison per pair.
    pub count: usize,
    pub comparisons: usize,
    pub bounds: f64,
    pub tolerance: f64,
    pub max_rel_error: f64,
    pub failures: Vec<ComparisonRecord>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The `n` tetrahedra a sweep with this `seed` and `bounds` visits.
pub fn sweep_samples(seed: u64, n: usize, bounds: f64) -> Result<Vec<FourPoints>> {
    let mut state = RngState::new(seed);
    let mut samples = Vec::with_capacity(n);
    for _ in 0..n {
        let (points, next) = random_tetrahedron(state, bounds)?;
        samples.push(points);
        state = next;
    }
    Ok(samples)
}

/// Compares closed form and oracle on `n` random tetrahedra, all three pairs
/// each. Mismatches are collected in `failures`; an error is returned only if
/// sampling itself fails.
pub fn run_sweep(seed: u64, n: usize, bounds: f64, tol: f64) -> Result<SweepSummary> {
    let mut max_rel_error: f64 = 0.0;
    let mut failures = Vec::new();
    let samples = sweep_samples(seed, n, bounds)?;
    for points in &samples {
        let lengths = edge_lengths_of(points)?;
        for pair in OppositePair::ALL {
            let record =
                compare_formula_vs_oracle(&lengths, pair, tol).unwrap_or(ComparisonRecord {
                    lengths,
                    pair,
                    formula_area: f64::NAN,
                    oracle_area: f64::NAN,
                    rel_error: f64::INFINITY,
                    status: Verdict::Fail,
                });
            max_rel_error = max_rel_error.max(record.rel_error);
            if record.status == Verdict::Fail {
                failures.push(record);
            }
        }
    }
    Ok(SweepSummary {
        seed,
        count: n,
        comparisons: 3 * n,
        bounds,
        tolerance: tol,
        max_rel_error,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_sample_sweep() {
        let summary = run_sweep(5, 1, 1.0, 1e-9).unwrap();
        assert_eq!(summary.count, 1);
        assert_eq!(summary.comparisons, 3);
        assert!(summary.passed());
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = run_sweep(42, 200, 1.0, 1e-9).unwrap();
        let b = run_sweep(42, 200, 1.0, 1e-9).unwrap();
        assert_eq!(a, b);
        let c = run_sweep(43, 200, 1.0, 1e-9).unwrap();
        assert_ne!(a.max_rel_error, c.max_rel_error);
    }

    #[test]
    fn zero_tolerance_records_failures() {
        let summary = run_sweep(42, 200, 1.0, 0.0).unwrap();
        assert!(summary.failures.iter().all(|r| r.rel_error > 0.0));
        assert_eq!(summary.passed(), summary.max_rel_error == 0.0);
    }
}
