//! Tolerance policy shared by every numerical decision in the crate.

/// Thresholds for classification decisions and structural validation.
///
/// All comparisons are made relative to a scale of `max(1, ||input||)` so the
/// same config behaves uniformly across input magnitudes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceConfig {
    /// Orbit-classification decisions: causal typing, `beta = 0`, `x = 0`.
    pub classify: f64,
    /// Structural residuals: frame Gram matrices, group and algebra constraints.
    pub structural: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            classify: 1e-8,
            structural: 1e-10,
        }
    }
}

impl ToleranceConfig {
    /// Default config with an overridden classification threshold.
    pub fn with_classify(classify: f64) -> Self {
        Self {
            classify,
            ..Self::default()
        }
    }
}
