//! Dense coordinate vectors and the three primitive operations the solvers
//! are built from: inner product, scaled addition, and the Euclidean norm.
//!
//! Vectors are immutable values: every operation returns a fresh vector and
//! leaves its inputs untouched, so invariants can be checked without aliasing
//! caveats.

use crate::error::VectorError;

/// Dense vector in R^n. Entries are finite by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    entries: Vec<f64>,
}

impl Vector {
    /// Builds a vector, rejecting empty input and non-finite entries.
    pub fn new(entries: Vec<f64>) -> Result<Self, VectorError> {
        if entries.is_empty() {
            return Err(VectorError::Empty);
        }
        if let Some(index) = entries.iter().position(|v| !v.is_finite()) {
            return Err(VectorError::NonFiniteEntry { index });
        }
        Ok(Self { entries })
    }

    /// Copies a slice into a new vector.
    pub fn from_slice(entries: &[f64]) -> Result<Self, VectorError> {
        Self::new(entries.to_vec())
    }

    /// The zero vector of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "vector dimension must be at least 1");
        Self {
            entries: vec![0.0; dim],
        }
    }

    /// Standard basis vector e_i (0-based index) of dimension `dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut entries = vec![0.0; dim];
        entries[i] = 1.0;
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.entries.iter()
    }

    /// Entry access; panics when out of range, like slice indexing.
    pub fn get(&self, i: usize) -> f64 {
        self.entries[i]
    }

    /// Returns `s * self` as a new vector.
    pub fn scale(&self, s: f64) -> Vector {
        Vector {
            entries: self.entries.iter().map(|v| s * v).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0.0)
    }

    pub fn dot(&self, other: &Vector) -> Result<f64, VectorError> {
        dot(self, other)
    }

    pub fn norm(&self) -> f64 {
        norm(self)
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.entries[i]
    }
}

/// Standard inner product `sum_i a_i b_i`.
pub fn dot(a: &Vector, b: &Vector) -> Result<f64, VectorError> {
    if a.dim() != b.dim() {
        return Err(VectorError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(a.iter().zip(b.iter()).map(|(x, y)| x * y).sum())
}

/// Returns `s * a + b` as a new vector; inputs are unchanged.
pub fn axpy(s: f64, a: &Vector, b: &Vector) -> Result<Vector, VectorError> {
    if !s.is_finite() {
        return Err(VectorError::NonFiniteScalar { value: s });
    }
    if a.dim() != b.dim() {
        return Err(VectorError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(Vector {
        entries: a.iter().zip(b.iter()).map(|(x, y)| s * x + y).collect(),
    })
}

/// Euclidean norm `sqrt(dot(a, a))`.
pub fn norm(a: &Vector) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(entries: &[f64]) -> Vector {
        Vector::from_slice(entries).unwrap()
    }

    #[test]
    fn dot_direct_arithmetic() {
        assert_eq!(dot(&v(&[1.0, 2.0]), &v(&[3.0, 4.0])).unwrap(), 11.0);
    }

    #[test]
    fn dot_with_zero_annihilates() {
        let x = v(&[2.5, -3.0, 7.0]);
        assert_eq!(dot(&x, &Vector::zeros(3)).unwrap(), 0.0);
    }

    #[test]
    fn dot_matches_elementwise_sum_oracle() {
        // Oracle: accumulate the products by explicit indexing.
        let a = v(&[0.37, -1.2, 4.5, 0.01, -2.25]);
        let b = v(&[1.5, 2.25, -0.125, 8.0, 0.5]);
        let mut expected = 0.0;
        for i in 0..5 {
            expected += a[i] * b[i];
        }
        assert_eq!(dot(&a, &b).unwrap(), expected);
    }

    #[test]
    fn dot_rejects_dimension_mismatch() {
        let err = dot(&v(&[1.0]), &v(&[1.0, 2.0])).unwrap_err();
        assert_eq!(err, VectorError::DimensionMismatch { left: 1, right: 2 });
    }

    #[test]
    fn axpy_zero_scale_returns_b() {
        let a = v(&[1.0, 2.0]);
        let b = v(&[5.0, -7.0]);
        assert_eq!(axpy(0.0, &a, &b).unwrap(), b);
    }

    #[test]
    fn axpy_cancellation_is_exactly_zero() {
        let a = v(&[0.1, -0.7, 3.3]);
        let out = axpy(-1.0, &a, &a).unwrap();
        assert_eq!(norm(&out), 0.0);
    }

    #[test]
    fn axpy_direct_arithmetic() {
        let out = axpy(2.0, &v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap();
        assert_eq!(out.as_slice(), &[2.0, 1.0]);
    }

    #[test]
    fn axpy_rejects_non_finite_scale() {
        let a = v(&[1.0]);
        assert!(matches!(
            axpy(f64::NAN, &a, &a),
            Err(VectorError::NonFiniteScalar { .. })
        ));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm(&v(&[3.0, 4.0])), 5.0);
        assert_eq!(norm(&Vector::zeros(4)), 0.0);
        for i in 0..4 {
            assert_eq!(norm(&Vector::basis(4, i)), 1.0);
        }
    }

    #[test]
    fn new_rejects_bad_input() {
        assert_eq!(Vector::new(vec![]).unwrap_err(), VectorError::Empty);
        assert!(matches!(
            Vector::new(vec![1.0, f64::INFINITY]),
            Err(VectorError::NonFiniteEntry { index: 1 })
        ));
    }

    fn vec_strategy(dim: usize) -> impl Strategy<Value = Vector> {
        prop::collection::vec(-100.0f64..100.0, dim).prop_map(|e| Vector::new(e).unwrap())
    }

    proptest! {
        #[test]
        fn dot_is_symmetric(a in vec_strategy(6), b in vec_strategy(6)) {
            let ab = dot(&a, &b).unwrap();
            let ba = dot(&b, &a).unwrap();
            let scale = ab.abs().max(1.0);
            prop_assert!((ab - ba).abs() <= 1e-12 * scale);
        }

        #[test]
        fn dot_is_bilinear(
            a in vec_strategy(5),
            b in vec_strategy(5),
            c in vec_strategy(5),
            s in -10.0f64..10.0,
        ) {
            // <s a + b, c> = s <a, c> + <b, c> up to rounding.
            let lhs = dot(&axpy(s, &a, &b).unwrap(), &c).unwrap();
            let rhs = s * dot(&a, &c).unwrap() + dot(&b, &c).unwrap();
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn self_cancellation_is_exact(a in vec_strategy(8)) {
            prop_assert_eq!(norm(&axpy(-1.0, &a, &a).unwrap()), 0.0);
        }
    }
}
