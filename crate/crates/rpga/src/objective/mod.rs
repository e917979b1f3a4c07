//! Convex objective contract and concrete instances.
//!
//! An [`Objective`] provides values and gradients, optionally its analytic
//! smoothness constants and its known minimum. The free functions [`value`]
//! and [`gradient`] are the checked entry points that report dimension
//! mismatches as errors; the trait methods themselves panic on mismatch.

mod estimators;
mod logistic;
mod quadratic;

pub use estimators::{estimate_alpha, estimate_m_zero, finite_difference_check};
pub(crate) use estimators::{curvature_probe_direction, sample_box_radius, sample_in_level_set};
pub use logistic::LogisticObjective;
pub use quadratic::QuadraticObjective;

use crate::config::Radius;
use crate::error::ObjectiveError;
use crate::vector::Vector;

/// Analytic smoothness data attached to an objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothnessConstants {
    pub alpha: f64,
    pub q: f64,
    pub us_radius: Radius,
    /// Gradient-norm bound on the initial level set, when known.
    pub m_zero: Option<f64>,
}

/// Known minimizer of an objective and its value there.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimumInfo {
    pub minimizer: Vector,
    pub min_value: f64,
}

/// A convex, Frechet-differentiable function on R^n.
///
/// Implementations must be deterministic and safe to call concurrently.
/// `value` and `gradient` panic when the point dimension is wrong; use the
/// module-level free functions for checked access.
pub trait Objective: Send + Sync {
    fn dimension(&self) -> usize;

    fn value(&self, x: &Vector) -> f64;

    fn gradient(&self, x: &Vector) -> Vector;

    /// Smoothness constants, when analytically known.
    fn analytic_constants(&self) -> Option<SmoothnessConstants> {
        None
    }

    /// Global minimizer and minimum value, when known.
    fn minimum_info(&self) -> Option<&MinimumInfo> {
        None
    }

    /// Closed-form modulus of smoothness at argument `u`, when known.
    /// Sampled estimates can only certify lower bounds; analytic values are
    /// needed for upper-bound checks.
    fn analytic_modulus(&self, u: f64) -> Option<f64> {
        let _ = u;
        None
    }
}

/// Checked objective evaluation.
pub fn value(obj: &dyn Objective, x: &Vector) -> Result<f64, ObjectiveError> {
    check_dimension(obj, x)?;
    Ok(obj.value(x))
}

/// Checked gradient evaluation.
pub fn gradient(obj: &dyn Objective, x: &Vector) -> Result<Vector, ObjectiveError> {
    check_dimension(obj, x)?;
    Ok(obj.gradient(x))
}

fn check_dimension(obj: &dyn Objective, x: &Vector) -> Result<(), ObjectiveError> {
    if x.dim() != obj.dimension() {
        return Err(ObjectiveError::DimensionMismatch {
            expected: obj.dimension(),
            found: x.dim(),
        });
    }
    Ok(())
}

/// Affine function `<c, x> + offset`. Convex with zero curvature; its level
/// set is an unbounded half-space, which makes it the canonical probe for
/// the degenerate paths of the estimators and the line search.
#[derive(Debug, Clone)]
pub struct LinearObjective {
    coefficients: Vector,
    offset: f64,
}

impl LinearObjective {
    pub fn new(coefficients: Vector, offset: f64) -> Self {
        Self {
            coefficients,
            offset,
        }
    }
}

impl Objective for LinearObjective {
    fn dimension(&self) -> usize {
        self.coefficients.dim()
    }

    fn value(&self, x: &Vector) -> f64 {
        crate::vector::dot(&self.coefficients, x).expect("dimension checked by caller")
            + self.offset
    }

    fn gradient(&self, x: &Vector) -> Vector {
        assert_eq!(x.dim(), self.dimension(), "dimension mismatch");
        self.coefficients.clone()
    }

    fn analytic_modulus(&self, _u: f64) -> Option<f64> {
        Some(0.0)
    }
}

/// Shared parsing for the plain-text instance format: a `rows cols` header,
/// `rows` matrix lines, then one trailing line with `rows` numbers.
pub(crate) fn parse_instance_text(
    text: &str,
) -> Result<(crate::matrix::Matrix, Vec<f64>), ObjectiveError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines.next().ok_or(ObjectiveError::Parse {
        line: 1,
        message: "empty file".into(),
    })?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(ObjectiveError::Parse {
            line: header_no + 1,
            message: format!("expected 'rows cols', got '{header}'"),
        });
    }
    let rows: usize = parts[0].parse().map_err(|_| ObjectiveError::Parse {
        line: header_no + 1,
        message: format!("bad row count '{}'", parts[0]),
    })?;
    let cols: usize = parts[1].parse().map_err(|_| ObjectiveError::Parse {
        line: header_no + 1,
        message: format!("bad column count '{}'", parts[1]),
    })?;
    let mut matrix_rows = Vec::with_capacity(rows);
    for _ in 0..rows {
        let (no, line) = lines.next().ok_or(ObjectiveError::Parse {
            line: header_no + 1,
            message: format!("expected {rows} matrix rows"),
        })?;
        let entries = parse_numbers(line, no + 1, cols)?;
        matrix_rows.push(entries);
    }
    let (no, tail_line) = lines.next().ok_or(ObjectiveError::Parse {
        line: header_no + 1,
        message: "missing trailing target/label line".into(),
    })?;
    let tail = parse_numbers(tail_line, no + 1, rows)?;
    let matrix = crate::matrix::Matrix::from_rows(matrix_rows)?;
    Ok((matrix, tail))
}

fn parse_numbers(line: &str, line_no: usize, expected: usize) -> Result<Vec<f64>, ObjectiveError> {
    let parsed: Result<Vec<f64>, _> = line.split_whitespace().map(|t| t.parse::<f64>()).collect();
    let values = parsed.map_err(|e| ObjectiveError::Parse {
        line: line_no,
        message: format!("bad number: {e}"),
    })?;
    if values.len() != expected {
        return Err(ObjectiveError::Parse {
            line: line_no,
            message: format!("expected {expected} numbers, got {}", values.len()),
        });
    }
    Ok(values)
}
