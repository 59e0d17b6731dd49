use rug::{Float, Integer, Rational};

use crate::goldfield::QuadNum;

/// Exact Taylor coefficients `f⁽ⁿ⁾(0)/n!` for `n = 0..=cutoff`.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorTable {
    coeffs: Vec<QuadNum>,
}

/// Outcome of the exact coefficient checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientCheck {
    /// First index with a non-positive coefficient.
    pub first_nonpositive: Option<usize>,
    /// First index `n ≥ 1` with `n!·coeff > 1`.
    pub first_unbounded: Option<usize>,
}

impl CoefficientCheck {
    pub fn passed(&self) -> bool {
        self.first_nonpositive.is_none() && self.first_unbounded.is_none()
    }
}

/// Runs the recurrence obtained by matching powers of `z` in
/// `f(2φz) = f(z)² − 1`. With `c_n = f⁽ⁿ⁾(0)/n!` it reads
///
/// ```text
/// c_n · ((2φ)ⁿ − 2φ) = Σ_{k=1}^{n−1} c_k c_{n−k},   n ≥ 2
/// ```
///
/// which is the Leibniz-rule recurrence for the derivatives divided by `n!`.
pub fn taylor_coeffs(cutoff: usize) -> TaylorTable {
    let two_phi = QuadNum::two_phi();
    let mut coeffs = Vec::with_capacity(cutoff + 1);
    coeffs.push(QuadNum::phi());
    if cutoff >= 1 {
        coeffs.push(QuadNum::one());
    }
    let mut power = two_phi.clone();
    for n in 2..=cutoff {
        power = &power * &two_phi;
        let divisor = &power - &two_phi;
        let mut half = QuadNum::zero();
        for k in 1..=(n - 1) / 2 {
            half = &half + &(&coeffs[k] * &coeffs[n - k]);
        }
        let mut sum = &half + &half;
        if n % 2 == 0 {
            let mid = &coeffs[n / 2];
            sum = &sum + &(mid * mid);
        }
        let next = sum
            .checked_div(&divisor)
            .expect("(2φ)ⁿ − 2φ is nonzero for n ≥ 2");
        coeffs.push(next);
    }
    TaylorTable { coeffs }
}

impl TaylorTable {
    pub fn compute(cutoff: usize) -> Self {
        taylor_coeffs(cutoff)
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QuadNum] {
        &self.coeffs
    }

    pub fn get(&self, n: usize) -> Option<&QuadNum> {
        self.coeffs.get(n)
    }

    /// `f⁽ⁿ⁾(0) = n!·c_n`.
    pub fn derivative_at_zero(&self, n: usize) -> Option<QuadNum> {
        let c = self.coeffs.get(n)?;
        let fact = Integer::factorial(n as u32);
        Some(c.mul_rational(&Rational::from(Integer::from(fact))))
    }

    pub fn to_floats(&self, precision: u32) -> Vec<Float> {
        self.coeffs.iter().map(|c| c.to_float(precision)).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(QuadNum::to_f64).collect()
    }

    /// Positivity of every coefficient and `n!·c_n ≤ 1` for `n ≥ 1`, as exact
    /// comparisons. (`c_0 = φ` is the one coefficient above 1.)
    pub fn check(&self) -> CoefficientCheck {
        let one = QuadNum::one();
        let mut out = CoefficientCheck {
            first_nonpositive: None,
            first_unbounded: None,
        };
        let mut fact = Integer::from(1);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                fact *= n as u32;
            }
            if out.first_nonpositive.is_none() && !c.is_positive() {
                out.first_nonpositive = Some(n);
            }
            let scaled = c.mul_rational(&Rational::from(fact.clone()));
            if n > 0 && out.first_unbounded.is_none() && scaled > one {
                out.first_unbounded = Some(n);
            }
        }
        out
    }
}
