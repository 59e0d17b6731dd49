use num_complex::Complex64;

use super::bounds::{omitted_inverse_sum, product_tail};
use crate::error::{Error, Result};
use crate::estimate::Estimate;
use crate::mp::principal_sqrt;
use crate::series::Evaluator;
use crate::zeros::{enumerate_simple_zeros, z0_of_sigma, ZeroRecord};

const PHI: f64 = 1.618_033_988_749_895;
const TWO_PHI: f64 = 3.236_067_977_499_79;

/// `H(z) = Π (1 − z/z_n)` over the simple zeros with last `−1` at position
/// `≤ L`, plus the conjugates of the boundary generation so the stored set
/// is closed under conjugation.
#[derive(Clone, Debug)]
pub struct HProduct {
    zeros: Vec<ZeroRecord>,
    points: Vec<Complex64>,
    truncation: usize,
    /// `Σ 1/|z_n|` over the stored zeros.
    stored_inverse_sum: f64,
}

/// Square-root representation together with its branch diagnosis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SqrtEval {
    pub estimate: Estimate,
    /// Set when the principal root has non-positive real part, where it may
    /// be the wrong sign of f.
    pub branch_ambiguous: bool,
}

fn rounding(value: f64, ops: usize) -> f64 {
    value * 4.0 * ops as f64 * f64::EPSILON
}

impl HProduct {
    pub fn build(ev: &Evaluator, depth: usize) -> Result<Self> {
        let mut zeros = enumerate_simple_zeros(ev, depth)?;
        let extra: Vec<_> = zeros
            .iter()
            .map(|r| r.seq.conjugate())
            .filter(|s| s.generation() > depth)
            .collect();
        for s in extra {
            zeros.push(z0_of_sigma(ev, &s)?);
        }
        zeros.sort_by(|a, b| {
            a.value
                .norm()
                .total_cmp(&b.value.norm())
                .then(a.value.re.total_cmp(&b.value.re))
                .then(a.value.im.total_cmp(&b.value.im))
        });
        Ok(Self::from_records(zeros, depth))
    }

    /// Wraps already computed zeros. `depth` must be the enumeration depth
    /// they came from, since the truncation bounds depend on it.
    pub fn from_records(zeros: Vec<ZeroRecord>, depth: usize) -> Self {
        let points: Vec<Complex64> = zeros.iter().map(|r| r.value).collect();
        let stored_inverse_sum = points.iter().map(|z| 1.0 / z.norm()).sum();
        HProduct {
            zeros,
            points,
            truncation: depth,
            stored_inverse_sum,
        }
    }

    pub fn zeros(&self) -> &[ZeroRecord] {
        &self.zeros
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Upper bound on `Σ 1/|z_n|` over all simple zeros.
    pub fn inverse_sum_bound(&self) -> f64 {
        self.stored_inverse_sum + omitted_inverse_sum(self.truncation)
    }

    /// Whether every stored zero has its conjugate stored, within `tol`.
    pub fn is_conjugate_closed(&self, tol: f64) -> bool {
        let mut sorted = self.points.clone();
        sorted.sort_by(|a, b| a.re.total_cmp(&b.re));
        self.points.iter().all(|z| {
            let c = z.conj();
            let start = sorted.partition_point(|p| p.re < c.re - tol);
            sorted[start..]
                .iter()
                .take_while(|p| p.re <= c.re + tol)
                .any(|p| (p - c).norm() <= tol)
        })
    }

    /// The finite product over the stored zeros.
    pub fn h_eval(&self, z: Complex64) -> Complex64 {
        self.points.iter().fold(Complex64::new(1.0, 0.0), |acc, zn| acc * (1.0 - z / zn))
    }

    /// `H(z)` with a bound on the distance to the product over all simple zeros.
    pub fn h_estimate(&self, z: Complex64) -> Estimate {
        let v = self.h_eval(z);
        let s = z.norm() * omitted_inverse_sum(self.truncation);
        let bound = v.norm() * product_tail(s) + rounding(v.norm(), self.points.len());
        Estimate::new(v, bound)
    }

    /// `f(z) = 1 + H(2φz)/φ`.
    pub fn f_via_h(&self, z: Complex64) -> Estimate {
        let h = self.h_estimate(z * TWO_PHI);
        Estimate::new(1.0 + h.value / PHI, h.bound / PHI + rounding(1.0, 2))
    }

    /// `f(z) = √(2 + H((2φ)²z)/φ)`, principal root.
    pub fn f_via_sqrt(&self, z: Complex64) -> SqrtEval {
        let h = self.h_estimate(z * (TWO_PHI * TWO_PHI));
        let w = 2.0 + h.value / PHI;
        let e = h.bound / PHI;
        let root = principal_sqrt(w);
        // |√(w + δ) − √w| ≤ |δ|/(√|w| + √(|w| − |δ|)) for |δ| < |w|
        let bound = if e < w.norm() {
            e / (w.norm().sqrt() + (w.norm() - e).sqrt())
        } else {
            f64::INFINITY
        };
        SqrtEval {
            estimate: Estimate::new(root, bound + rounding(root.norm(), 3)),
            branch_ambiguous: !(root.re > 0.0),
        }
    }

    /// `Σ e·|u/z|` over the zeros missing from each kept factor `H(u)^e`,
    /// with the factors given as `(|u|, e)` pairs.
    fn missing_zero_sum(&self, factors: &[(f64, f64)]) -> f64 {
        factors
            .iter()
            .map(|&(radius, exponent)| exponent * radius * omitted_inverse_sum(self.truncation))
            .sum()
    }

    /// `Σ_{n ≥ first} weight(n)·|z|·M/(2φ)^{shift(n)}` with `M ≥ Σ 1/|z_k|`:
    /// the total `Σ|u/z_k|` over the outer factors left out. Powers count as
    /// repeated factors, so `e^{total} − 1` bounds their relative effect.
    fn omitted_outer(&self, z: f64, first: usize, weight: impl Fn(usize) -> f64, shift: impl Fn(usize) -> i32) -> f64 {
        let m = self.inverse_sum_bound();
        let mut total = 0.0;
        for n in first..first + 400 {
            let term = weight(n) * z * m / TWO_PHI.powi(shift(n));
            total += term;
            if term < 1e-30 * total.max(1e-300) {
                break;
            }
        }
        total
    }

    /// `f(z) = φ·Π_{n≥0} H(z/(2φ)^{2n})^{2ⁿ}` truncated to `terms` outer factors.
    pub fn f_via_wh(&self, z: Complex64, terms: usize) -> Result<Estimate> {
        if terms == 0 {
            return Err(Error::InvalidArgument("f_via_wh needs terms >= 1".into()));
        }
        let mut v = Complex64::new(PHI, 0.0);
        let mut factors = Vec::with_capacity(terms);
        for n in 0..terms {
            let u = z / TWO_PHI.powi(2 * n as i32);
            v *= self.h_eval(u).powu(1 << n);
            factors.push((u.norm(), (1u64 << n) as f64));
        }
        let outer = self.omitted_outer(z.norm(), terms, |n| 2f64.powi(n as i32), |n| 2 * n as i32);
        let s = self.missing_zero_sum(&factors) + outer;
        let bound = v.norm() * product_tail(s) + rounding(v.norm(), terms * (self.points.len() + 1));
        Ok(Estimate::new(v, bound))
    }

    /// `f′(z) = Π_{n≥1} H(z/(2φ)^{2n})^{2ⁿ−1}·H(z/(2φ)^{2n−1})^{2ⁿ−1}`
    /// truncated to `n ≤ terms`.
    pub fn f_prime_via_h(&self, z: Complex64, terms: usize) -> Result<Estimate> {
        if terms == 0 {
            return Err(Error::InvalidArgument("f_prime_via_h needs terms >= 1".into()));
        }
        let mut v = Complex64::new(1.0, 0.0);
        let mut factors = Vec::with_capacity(2 * terms);
        for n in 1..=terms {
            let e = (1u32 << n) - 1;
            let even = z / TWO_PHI.powi(2 * n as i32);
            let odd = z / TWO_PHI.powi(2 * n as i32 - 1);
            v *= self.h_eval(even).powu(e) * self.h_eval(odd).powu(e);
            factors.push((even.norm(), e as f64));
            factors.push((odd.norm(), e as f64));
        }
        let w = |n: usize| 2f64.powi(n as i32) - 1.0;
        let outer = self.omitted_outer(z.norm(), terms + 1, w, |n| 2 * n as i32)
            + self.omitted_outer(z.norm(), terms + 1, w, |n| 2 * n as i32 - 1);
        let s = self.missing_zero_sum(&factors) + outer;
        let bound = v.norm() * product_tail(s) + rounding(v.norm(), 2 * terms * (self.points.len() + 1));
        Ok(Estimate::new(v, bound))
    }
}
