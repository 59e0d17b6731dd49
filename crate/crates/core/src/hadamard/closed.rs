use num_complex::Complex64;
use rayon::prelude::*;

use super::bounds::{product_tail, sqrt1_tail, sqrt2_tail};
use crate::error::{Error, Result};
use crate::estimate::Estimate;
use crate::mp::{self};
use crate::zeros::{run_chain, ChainConsts, SignSeq, Stop};

const PHI: f64 = 1.618_033_988_749_895;

/// Which radical chain feeds the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Innermost `√2`: one factor per simple zero,
    /// `f(z) = 1 + φ⁻¹·Π_σ (1 + zφ·T(σ))`.
    Sqrt2,
    /// Innermost `√1`: every zero with its multiplicity,
    /// `f(z) = φ·Π_σ (1 + (z/φ)·U(σ))`.
    Sqrt1,
}

impl Variant {
    fn seed(self) -> f64 {
        match self {
            Variant::Sqrt2 => 2.0,
            Variant::Sqrt1 => 1.0,
        }
    }

    /// Bound on the sum of `|term|` over sequences deeper than `depth`.
    pub fn tail(self, depth: usize) -> f64 {
        match self {
            Variant::Sqrt2 => sqrt2_tail(depth),
            Variant::Sqrt1 => sqrt1_tail(depth),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt2" => Ok(Variant::Sqrt2),
            "sqrt1" => Ok(Variant::Sqrt1),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

/// `Π_{n≥1} (φ + t_n)/(2φ)` for one sequence, `t_1 = σ_1√seed`.
///
/// When a radicand is exactly 0 the chain keeps the 0; with `seed = 1`
/// and `σ_1 = −1` that happens at the second step.
pub fn chain_term(sigma: &SignSeq, variant: Variant) -> Complex64 {
    let seed = Complex64::new(variant.seed(), 0.0);
    let consts = ChainConsts::new(&seed, &mp::phi(53));
    run_chain(
        sigma,
        &seed,
        &consts,
        Stop::Converged {
            eps: f64::EPSILON / 4.0,
            max_extra: 80,
        },
    )
    .product
}

/// The chain terms of every sequence with last `−1` at position `≤ depth`,
/// in (generation, lexicographic) order.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    variant: Variant,
    depth: usize,
    terms: Vec<Complex64>,
}

impl ClosedForm {
    pub fn new(depth: usize, variant: Variant) -> Self {
        let terms = SignSeq::up_to(depth)
            .par_iter()
            .map(|s| chain_term(s, variant))
            .collect();
        ClosedForm {
            variant,
            depth,
            terms,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn terms(&self) -> &[Complex64] {
        &self.terms
    }

    /// Truncated closed form for f with a bound covering the omitted
    /// sequences and rounding.
    pub fn eval(&self, z: Complex64) -> Estimate {
        let n = self.terms.len();
        match self.variant {
            Variant::Sqrt2 => {
                let w = z * PHI;
                let p = self.terms.iter().fold(Complex64::new(1.0, 0.0), |acc, t| acc * (1.0 + w * t));
                let s = w.norm() * self.variant.tail(self.depth);
                let bound = p.norm() * product_tail(s) / PHI + p.norm() * 4.0 * (n + 2) as f64 * f64::EPSILON;
                Estimate::new(1.0 + p / PHI, bound)
            }
            Variant::Sqrt1 => {
                let w = z / PHI;
                let p = self.terms.iter().fold(Complex64::new(1.0, 0.0), |acc, t| acc * (1.0 + w * t));
                let s = w.norm() * self.variant.tail(self.depth);
                let v = p * PHI;
                let bound = v.norm() * product_tail(s) + v.norm() * 4.0 * (n + 2) as f64 * f64::EPSILON;
                Estimate::new(v, bound)
            }
        }
    }

    /// Partial sum of the terms, which tends to `f′(0) = 1`. The bound
    /// covers the omitted sequences.
    pub fn moment(&self) -> Estimate {
        let sum: Complex64 = self.terms.iter().sum();
        let bound = self.variant.tail(self.depth) + self.terms.len() as f64 * 4.0 * f64::EPSILON;
        Estimate::new(sum, bound)
    }
}

/// One-shot [`ClosedForm::eval`].
pub fn closed_form_eval(z: Complex64, depth: usize, variant: Variant) -> Estimate {
    ClosedForm::new(depth, variant).eval(z)
}

/// Partial moment sum `Σ_{gen σ ≤ depth} term(σ)`; tends to 1 for both variants.
pub fn moment_sum(depth: usize, variant: Variant) -> Estimate {
    ClosedForm::new(depth, variant).moment()
}
