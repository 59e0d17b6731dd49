use num_complex::Complex64;

use crate::mp::MpComplex;

/// A complex value together with an absolute error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub bound: f64,
}

impl Estimate {
    pub fn new(value: Complex64, bound: f64) -> Self {
        Estimate { value, bound }
    }

    /// True when the two enclosures overlap: `|a − b| ≤ bound_a + bound_b`.
    pub fn agrees_with(&self, other: &Estimate) -> bool {
        (self.value - other.value).norm() <= self.bound + other.bound
    }

    pub fn distance(&self, other: &Estimate) -> f64 {
        (self.value - other.value).norm()
    }
}

/// Multiprecision value with an absolute error bound.
#[derive(Clone, Debug)]
pub struct MpEstimate {
    pub value: MpComplex,
    pub bound: f64,
}

impl MpEstimate {
    /// Rounds to `Complex64`, folding the final rounding into the bound.
    pub fn to_estimate(&self) -> Estimate {
        let value = self.value.to_c64();
        Estimate {
            value,
            bound: self.bound + value.norm() * f64::EPSILON,
        }
    }
}
