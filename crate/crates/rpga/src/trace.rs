//! Per-iteration records and the trace a solver run produces.

use crate::vector::Vector;

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The best atom inner product fell below the gradient tolerance.
    GradientZero,
    /// The iteration cap was reached.
    MaxIterations,
    /// Every atom inner product is exactly zero while the gradient is not:
    /// the finite dictionary cannot see the remaining descent direction.
    DegenerateSelection,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::GradientZero => "gradient_zero",
            Termination::MaxIterations => "max_iterations",
            Termination::DegenerateSelection => "degenerate_selection",
        }
    }
}

/// One completed step of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    /// 1-based step index.
    pub k: usize,
    /// Index of the selected atom.
    pub atom_index: usize,
    /// Signed inner product of the gradient at the previous point with the
    /// selected atom.
    pub inner_product: f64,
    /// Step coefficient along the selected atom.
    pub lambda: f64,
    /// Rescaling factor from the line search (1 for the baseline variant).
    pub t: f64,
    /// Objective value at the new point.
    pub objective_value: f64,
    /// Optimization error at the new point, when the minimum value is known.
    pub error: Option<f64>,
}

/// Full record of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    pub records: Vec<IterationRecord>,
    pub termination: Termination,
    pub final_point: Vector,
}

impl RunTrace {
    pub fn steps(&self) -> usize {
        self.records.len()
    }

    /// Objective value after the last completed step, if any.
    pub fn final_objective(&self) -> Option<f64> {
        self.records.last().map(|r| r.objective_value)
    }

    /// True when objective values never increase along the trace.
    pub fn is_monotone(&self) -> bool {
        self.records
            .windows(2)
            .all(|w| w[1].objective_value <= w[0].objective_value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(k: usize, value: f64) -> IterationRecord {
        IterationRecord {
            k,
            atom_index: 0,
            inner_product: 1.0,
            lambda: 0.5,
            t: 1.0,
            objective_value: value,
            error: None,
        }
    }

    #[test]
    fn monotone_detection() {
        let good = RunTrace {
            records: vec![record(1, 3.0), record(2, 2.0), record(3, 2.0)],
            termination: Termination::MaxIterations,
            final_point: Vector::zeros(1),
        };
        assert!(good.is_monotone());
        let bad = RunTrace {
            records: vec![record(1, 1.0), record(2, 2.0)],
            termination: Termination::MaxIterations,
            final_point: Vector::zeros(1),
        };
        assert!(!bad.is_monotone());
    }
}
