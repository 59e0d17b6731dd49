//! Taylor coefficients of f, evaluation of f, f′, g, g′ and the
//! polynomial dynamics `P_n = (z² − 1)^{∘n}`.

mod dynamics;
mod eval;
mod taylor;

pub use dynamics::{p_iterate, p_iterate_mp};
pub use eval::{Evaluator, GUARD_BITS, G_DOMAIN_RADIUS};
pub use taylor::{taylor_coeffs, CoefficientCheck, TaylorTable};

use crate::error::{Error, Result};

/// Numeric settings threaded through every evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalConfig {
    /// Taylor series cutoff `N`.
    pub series_cutoff: usize,
    /// Truncation depth `D` of the infinite products.
    pub product_depth: usize,
    /// Base working precision in bits; raised per evaluation as needed.
    pub precision: u32,
    pub tolerance: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            series_cutoff: 64,
            product_depth: 60,
            precision: 53,
            tolerance: 1e-10,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.series_cutoff < 1 {
            return Err(Error::InvalidConfig("series cutoff must be positive".into()));
        }
        if self.product_depth < 1 {
            return Err(Error::InvalidConfig("product depth must be positive".into()));
        }
        if self.precision < 53 {
            return Err(Error::InvalidConfig(format!(
                "precision must be at least 53 bits, got {}",
                self.precision
            )));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be a positive number, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn with_product_depth(mut self, depth: usize) -> Self {
        self.product_depth = depth;
        self
    }
}
