//! Run configuration for the greedy solvers: smoothness constants, step
//! parameters, weakness sequence, iteration caps, and tolerances.

use crate::error::ConfigError;

/// Which iteration engine a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Argmax selection, rescaling line search every step.
    Rescaled,
    /// Weak selection (per-step weakness and mu), rescaling line search.
    WeakRescaled,
    /// Argmax selection, no line search: the pre-rescale point is kept.
    NoRescaleBaseline,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Rescaled => "rescaled",
            Variant::WeakRescaled => "weak_rescaled",
            Variant::NoRescaleBaseline => "no_rescale_baseline",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "rescaled" => Some(Variant::Rescaled),
            "weak_rescaled" => Some(Variant::WeakRescaled),
            "no_rescale_baseline" => Some(Variant::NoRescaleBaseline),
            _ => None,
        }
    }
}

/// Radius of validity of the smoothness inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Radius {
    Finite(f64),
    Infinite,
}

/// All parameters of a solver run.
///
/// `mu` and `weakness` are per-step sequences; a one-element sequence acts
/// as a constant, and sequences shorter than the run are cycled.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Smoothness exponent, in (1, 2].
    pub q: f64,
    /// Smoothness constant, positive.
    pub alpha: f64,
    /// Gradient-norm bound on the initial level set; `None` when unknown.
    pub m_zero: Option<f64>,
    /// Radius within which the smoothness inequality is certified.
    pub us_radius: Radius,
    /// Step parameter sequence; each value must exceed the admissibility
    /// threshold `max(1, m_zero * us_radius^(1-q) / alpha)`.
    pub mu: Vec<f64>,
    /// Weakness sequence in (0, 1]; must be identically 1 except for the
    /// weak variant.
    pub weakness: Vec<f64>,
    /// Iteration cap; 0 produces an empty trace.
    pub max_iterations: usize,
    /// Stopping threshold on the best atom inner product.
    pub gradient_tolerance: f64,
    /// Relative first-order tolerance passed to the line search.
    pub linesearch_tolerance: f64,
    pub variant: Variant,
}

impl RunConfig {
    /// A configuration with constant `mu`, weakness 1, and default
    /// tolerances. The gradient tolerance is `1e-10 * (1 + m_zero)` when
    /// `m_zero` is supplied later via the field; here it starts at 1e-10.
    pub fn new(variant: Variant, q: f64, alpha: f64, mu: f64, max_iterations: usize) -> Self {
        Self {
            q,
            alpha,
            m_zero: None,
            us_radius: Radius::Infinite,
            mu: vec![mu],
            weakness: vec![1.0],
            max_iterations,
            gradient_tolerance: 1e-10,
            linesearch_tolerance: 1e-10,
            variant,
        }
    }

    /// Sets `m_zero` and rescales the default gradient tolerance with it.
    pub fn with_m_zero(mut self, m_zero: f64) -> Self {
        self.m_zero = Some(m_zero);
        self.gradient_tolerance = 1e-10 * (1.0 + m_zero);
        self
    }

    /// The admissibility threshold for mu: `max(1, alpha^-1 m_zero M^(1-q))`
    /// when both constants are known and the radius is finite, otherwise 1
    /// (for q > 1 the radius term vanishes as M grows).
    pub fn mu_threshold(&self) -> f64 {
        match (self.m_zero, self.us_radius) {
            (Some(m0), Radius::Finite(m)) => (m0 * m.powf(1.0 - self.q) / self.alpha).max(1.0),
            _ => 1.0,
        }
    }

    /// Value of a cycled per-step sequence at 1-based step `k`.
    pub fn mu_at(&self, k: usize) -> f64 {
        cycled(&self.mu, k)
    }

    /// Weakness at 1-based step `k`.
    pub fn weakness_at(&self, k: usize) -> f64 {
        cycled(&self.weakness, k)
    }

    /// Checks every invariant; solvers call this before running.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.q > 1.0 && self.q <= 2.0) {
            return Err(ConfigError::InvalidQ(self.q));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(ConfigError::InvalidAlpha(self.alpha));
        }
        if let Some(m0) = self.m_zero {
            if !(m0 >= 0.0 && m0.is_finite()) {
                return Err(ConfigError::InvalidMZero(m0));
            }
        }
        if let Radius::Finite(m) = self.us_radius {
            if !(m > 0.0 && m.is_finite()) {
                return Err(ConfigError::InvalidRadius(m));
            }
        }
        if self.mu.is_empty() {
            return Err(ConfigError::EmptySequence { name: "mu" });
        }
        if self.weakness.is_empty() {
            return Err(ConfigError::EmptySequence { name: "weakness" });
        }
        let threshold = self.mu_threshold();
        for &mu in &self.mu {
            if !(mu > threshold && mu.is_finite()) {
                return Err(ConfigError::InadmissibleMu { mu, threshold });
            }
        }
        for &ell in &self.weakness {
            if !(ell > 0.0 && ell <= 1.0) {
                return Err(ConfigError::InvalidWeakness(ell));
            }
            if self.variant != Variant::WeakRescaled && ell != 1.0 {
                return Err(ConfigError::WeaknessNotOne(ell));
            }
        }
        if !(self.gradient_tolerance > 0.0) {
            return Err(ConfigError::InvalidTolerance {
                name: "gradient",
                value: self.gradient_tolerance,
            });
        }
        if !(self.linesearch_tolerance > 0.0) {
            return Err(ConfigError::InvalidTolerance {
                name: "linesearch",
                value: self.linesearch_tolerance,
            });
        }
        Ok(())
    }
}

fn cycled(seq: &[f64], k: usize) -> f64 {
    assert!(k >= 1, "step indices are 1-based");
    seq[(k - 1) % seq.len()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_validates() {
        RunConfig::new(Variant::Rescaled, 2.0, 1.0, 2.0, 100)
            .validate()
            .unwrap();
    }

    #[test]
    fn mu_threshold_with_finite_radius() {
        let mut cfg = RunConfig::new(Variant::Rescaled, 1.5, 2.0, 8.0, 10).with_m_zero(4.0);
        cfg.us_radius = Radius::Finite(0.25);
        // m0 * M^(1-q) / alpha = 4 * 0.25^(-0.5) / 2 = 4.
        assert!((cfg.mu_threshold() - 4.0).abs() < 1e-12);
        cfg.validate().unwrap();
        cfg.mu = vec![3.9];
        assert!(matches!(
            cfg.validate(),
            Err(ConfigError::InadmissibleMu { .. })
        ));
    }

    #[test]
    fn infinite_radius_degenerates_to_mu_greater_than_one() {
        let mut cfg = RunConfig::new(Variant::Rescaled, 1.5, 0.01, 1.001, 10).with_m_zero(1e6);
        assert_eq!(cfg.mu_threshold(), 1.0);
        cfg.validate().unwrap();
        cfg.mu = vec![1.0];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn weakness_restrictions() {
        let mut cfg = RunConfig::new(Variant::Rescaled, 2.0, 1.0, 2.0, 10);
        cfg.weakness = vec![0.5];
        assert!(matches!(
            cfg.validate(),
            Err(ConfigError::WeaknessNotOne(_))
        ));
        cfg.variant = Variant::WeakRescaled;
        cfg.validate().unwrap();
        cfg.weakness = vec![0.0];
        assert!(matches!(
            cfg.validate(),
            Err(ConfigError::InvalidWeakness(_))
        ));
        cfg.weakness = vec![1.5];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn q_range_enforced() {
        assert!(RunConfig::new(Variant::Rescaled, 1.0, 1.0, 2.0, 10)
            .validate()
            .is_err());
        assert!(RunConfig::new(Variant::Rescaled, 2.5, 1.0, 2.0, 10)
            .validate()
            .is_err());
        assert!(RunConfig::new(Variant::Rescaled, 2.0, 1.0, 2.0, 10)
            .validate()
            .is_ok());
    }

    #[test]
    fn zero_iteration_cap_is_allowed() {
        RunConfig::new(Variant::Rescaled, 2.0, 1.0, 2.0, 0)
            .validate()
            .unwrap();
    }

    #[test]
    fn sequences_cycle() {
        let mut cfg = RunConfig::new(Variant::WeakRescaled, 2.0, 1.0, 2.0, 10);
        cfg.mu = vec![2.0, 3.0];
        cfg.weakness = vec![0.5, 0.75, 1.0];
        assert_eq!(cfg.mu_at(1), 2.0);
        assert_eq!(cfg.mu_at(2), 3.0);
        assert_eq!(cfg.mu_at(3), 2.0);
        assert_eq!(cfg.weakness_at(4), 0.5);
    }
}
