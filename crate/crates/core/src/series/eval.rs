use num_complex::Complex64;
use rug::ops::Pow;
use rug::Float;

use super::{taylor_coeffs, EvalConfig, TaylorTable};
use crate::error::{Error, Result};
use crate::estimate::{Estimate, MpEstimate};
use crate::mp::{self, MpComplex};

/// Extra bits on top of `precision + 2k` for `k` scaling steps.
pub const GUARD_BITS: u32 = 24;

/// The radical iteration for g must land within this distance of φ.
pub const G_DOMAIN_RADIUS: f64 = 0.1;

/// Coefficients are kept at enough precision for this many scaling steps;
/// deeper evaluations convert on demand.
const CACHED_STEPS: u32 = 64;

/// Evaluates f, f′, g and g′ for one [`EvalConfig`].
///
/// The exact Taylor table is built once and rounded to a float view once;
/// every evaluation is then a pure function of its argument.
#[derive(Clone, Debug)]
pub struct Evaluator {
    cfg: EvalConfig,
    table: TaylorTable,
    coeffs: Vec<Float>,
    coeffs_f64: Vec<f64>,
    coeff_prec: u32,
}

/// Smallest `k ≥ 0` with `r·(2φ)^{-k} ≤ 1`.
pub(crate) fn scale_steps(r: f64) -> u32 {
    if !(r > 1.0) {
        return 0;
    }
    if !r.is_finite() {
        return u32::MAX;
    }
    let a = 1.0 + 5f64.sqrt();
    let mut k = (r.ln() / a.ln()).ceil().max(0.0) as u32;
    while k > 0 && r / a.powi(k as i32 - 1) <= 1.0 {
        k -= 1;
    }
    while r / a.powi(k as i32) > 1.0 {
        k += 1;
    }
    k
}

fn ulp(p: u32) -> f64 {
    2f64.powi(-(p as i32))
}

impl Evaluator {
    pub fn new(cfg: EvalConfig) -> Result<Self> {
        cfg.validate()?;
        let table = taylor_coeffs(cfg.series_cutoff);
        let coeff_prec = cfg.precision + 2 * CACHED_STEPS + GUARD_BITS;
        let coeffs = table.to_floats(coeff_prec);
        let coeffs_f64 = table.to_f64();
        Ok(Evaluator {
            cfg,
            table,
            coeffs,
            coeffs_f64,
            coeff_prec,
        })
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    pub fn table(&self) -> &TaylorTable {
        &self.table
    }

    /// Number of `(2φ)` scalings `eval_f` uses for an argument of modulus `r`.
    pub fn scale_steps(&self, r: f64) -> u32 {
        scale_steps(r)
    }

    /// Working precision after `k` scaling steps: each squaring roughly
    /// doubles the absolute error, so two bits are added per step.
    pub fn working_precision(&self, k: u32) -> u32 {
        self.cfg.precision + 2 * k + GUARD_BITS
    }

    /// Truncated Taylor sum at `|w| ≤ 1` with an absolute error bound.
    ///
    /// The sum stops early once the remaining terms, bounded through
    /// `|c_k| ≤ 1/k!`, fall below the working precision.
    fn taylor(&self, w: &MpComplex, p: u32) -> (MpComplex, f64) {
        let r = w.abs_f64();
        let n_max = self.table.cutoff();
        let target = ulp(p + 2);
        // t = r^m / m!
        let mut m = 0usize;
        let mut t = 1.0f64;
        while m < n_max {
            let next = t * r / (m + 1) as f64;
            if next < target && m >= 1 {
                break;
            }
            t = next;
            m += 1;
        }
        let next_term = t * r / (m + 1) as f64;
        let tail = next_term / (1.0 - r / (m + 2) as f64).max(0.5);

        let owned;
        let coeffs: &[Float] = if p <= self.coeff_prec {
            &self.coeffs
        } else {
            owned = self.table.to_floats(p + 8);
            &owned
        };
        let w = w.with_prec(p);
        let mut acc = MpComplex::from_real(&coeffs[m], p);
        for c in coeffs[..m].iter().rev() {
            acc = &acc * &w;
            acc.re += c;
        }
        let mut abs_sum = 0.0;
        let mut pow = 1.0;
        for c in &self.coeffs_f64[..=m] {
            abs_sum += c * pow;
            pow *= r;
        }
        let rounding = (4 * m + 10) as f64 * ulp(p) * abs_sum;
        (acc, tail + rounding)
    }

    /// Base point `z·(2φ)^{-k}` at precision `p`.
    fn reduce(&self, z: &MpComplex, k: u32, p: u32) -> MpComplex {
        if k == 0 {
            return z.with_prec(p);
        }
        let scale = mp::two_phi(p + 16).pow(k);
        let inv = Float::with_val(p + 16, scale.recip_ref());
        z.scale(&inv).with_prec(p)
    }

    /// f at a multiprecision argument.
    ///
    /// For `|z| ≤ 1` this is the Taylor sum; otherwise the argument is
    /// divided by `(2φ)^k` for the minimal `k` and the result pushed back
    /// through `P_k`, using `f((2φ)^k w) = P_k(f(w))`.
    pub fn eval_f_mp(&self, z: &MpComplex) -> MpEstimate {
        let k = scale_steps(z.abs_f64());
        if k == u32::MAX {
            let nan = MpComplex::from_c64(Complex64::new(f64::NAN, f64::NAN), 53);
            return MpEstimate {
                value: nan,
                bound: f64::INFINITY,
            };
        }
        let p = self.working_precision(k);
        let w = self.reduce(z, k, p);
        let (mut v, mut e) = self.taylor(&w, p);
        for _ in 0..k {
            let m = v.abs_f64();
            e = 2.0 * m * e + e * e + 3.0 * ulp(p) * (m * m + 1.0);
            v.square_minus_one();
        }
        MpEstimate { value: v, bound: e }
    }

    pub fn eval_f(&self, z: Complex64) -> Estimate {
        self.eval_f_mp(&MpComplex::from_c64(z, 53)).to_estimate()
    }

    /// f′ from the product `f′(z) = Π_{n≥1} φ⁻¹ f((2φ)^{-n} z)`, truncated at
    /// the configured depth `D`.
    ///
    /// The factors with `n ≤ k` are the orbit `P_j(f(w))` of the reduced
    /// argument, so only one full-length Taylor sum is needed.
    pub fn eval_f_prime_mp(&self, z: &MpComplex) -> MpEstimate {
        let depth = self.cfg.product_depth;
        let r = z.abs_f64();
        let k = scale_steps(r);
        if k == u32::MAX {
            let nan = MpComplex::from_c64(Complex64::new(f64::NAN, f64::NAN), 53);
            return MpEstimate {
                value: nan,
                bound: f64::INFINITY,
            };
        }
        let p = self.working_precision(k) + 8;
        let phi = mp::phi(p);
        let inv_phi = Float::with_val(p, phi.recip_ref());

        // (value, absolute error) of f((2φ)^{-n} z) for n = 1..=depth
        let mut factors: Vec<(MpComplex, f64)> = Vec::with_capacity(depth);
        let w = self.reduce(z, k, p);
        let (fw, ew) = self.taylor(&w, p);
        let mut orbit = Vec::with_capacity(k as usize);
        let (mut v, mut e) = (fw, ew);
        for j in 0..k {
            if j > 0 {
                let m = v.abs_f64();
                e = 2.0 * m * e + e * e + 3.0 * ulp(p) * (m * m + 1.0);
                v.square_minus_one();
            }
            orbit.push((v.clone(), e));
        }
        // orbit[j] = f((2φ)^{-(k-j)} z)
        for n in 1..=depth {
            if (n as u32) <= k {
                factors.push(orbit[(k - n as u32) as usize].clone());
            } else {
                let u = self.reduce(&w, n as u32 - k, p);
                factors.push(self.taylor(&u, p));
            }
        }

        let mut prod = MpComplex::from_real(&Float::with_val(p, 1), p);
        let mut mags = Vec::with_capacity(depth);
        for (f, e) in &factors {
            prod = &prod * &f.scale(&inv_phi);
            mags.push((f.abs_f64() / phi.to_f64(), e / phi.to_f64()));
        }
        let prod_mag = prod.abs_f64();
        let propagated = if mags.iter().all(|&(m, _)| m > 0.0) {
            let s: f64 = mags.iter().map(|&(m, e)| (e / m).ln_1p()).sum();
            prod_mag * s.exp_m1()
        } else {
            let upper: f64 = mags.iter().map(|&(m, e)| m + e).product();
            upper - prod_mag
        };
        let rounding = prod_mag * (4 * depth + 8) as f64 * ulp(p);

        // Tail n > D: |φ⁻¹ f(u) − 1| ≤ (e^{|u|} − 1)/φ with |u| shrinking by 2φ.
        let a = 1.0 + 5f64.sqrt();
        let x = r / a.powi(depth as i32 + 1);
        let tail_sum = x * x.exp() * a / (a - 1.0) / phi.to_f64();
        let truncation = prod_mag * tail_sum.exp_m1();

        MpEstimate {
            value: prod,
            bound: propagated + rounding + truncation,
        }
    }

    pub fn eval_f_prime(&self, z: Complex64) -> Estimate {
        self.eval_f_prime_mp(&MpComplex::from_c64(z, 53)).to_estimate()
    }

    /// Iterates `x ↦ √(1 + x)` from `w` for the configured depth and
    /// returns the iterates `x_1..x_D` at precision `p`.
    fn radical_orbit(&self, w: &MpComplex, p: u32) -> Result<Vec<MpComplex>> {
        let depth = self.cfg.product_depth;
        let one = Float::with_val(p, 1);
        let mut x = w.with_prec(p);
        let mut orbit = Vec::with_capacity(depth);
        for _ in 0..depth {
            x = x.add_real(&one).sqrt();
            orbit.push(x.clone());
        }
        let phi = mp::phi(p);
        let last = orbit.last().expect("depth ≥ 1");
        let distance = (last - &MpComplex::from_real(&phi, p)).abs_f64();
        if !w.is_finite() || !(distance <= G_DOMAIN_RADIUS) {
            let c = w.to_c64();
            return Err(Error::Domain {
                re: c.re,
                im: c.im,
                distance,
                depth,
            });
        }
        Ok(orbit)
    }

    fn g_precision(&self) -> u32 {
        self.cfg.precision + GUARD_BITS + 8
    }

    /// g(w) = (w − φ) · Π_{n≥1} 2φ/(φ + x_n),  x_n = √(1 + x_{n−1}), x_0 = w.
    pub fn eval_g_mp(&self, w: &MpComplex) -> Result<MpEstimate> {
        let p = self.g_precision();
        let orbit = self.radical_orbit(w, p)?;
        let phi = mp::phi(p);
        let two_phi = mp::two_phi(p);
        let two_phi_c = MpComplex::from_real(&two_phi, p);
        let mut prod = w.with_prec(p).add_real(&Float::with_val(p, -&phi));
        for x in &orbit {
            let denom = x.add_real(&phi);
            prod = &(&prod * &two_phi_c) / &denom;
        }
        let mag = prod.abs_f64();
        let phi64 = phi.to_f64();
        let delta = (orbit.last().unwrap() - &MpComplex::from_real(&phi, p)).abs_f64();
        let rho = 1.0 / (2.0 * phi64 - 2.0 * delta);
        let eps = delta * rho / (2.0 * phi64);
        let tail = eps / (1.0 - rho) / (1.0 - delta / (2.0 * phi64));
        let bound = mag * tail.exp_m1() + mag * (6 * orbit.len() + 8) as f64 * ulp(p);
        Ok(MpEstimate { value: prod, bound })
    }

    pub fn eval_g(&self, w: Complex64) -> Result<Estimate> {
        Ok(self.eval_g_mp(&MpComplex::from_c64(w, 53))?.to_estimate())
    }

    /// g′(w) = Π_{n≥1} φ/x_n over the same radical orbit as [`eval_g_mp`](Self::eval_g_mp).
    pub fn eval_g_prime_mp(&self, w: &MpComplex) -> Result<MpEstimate> {
        let p = self.g_precision();
        let orbit = self.radical_orbit(w, p)?;
        let phi = mp::phi(p);
        let phi_c = MpComplex::from_real(&phi, p);
        let mut prod = MpComplex::from_real(&Float::with_val(p, 1), p);
        for x in &orbit {
            prod = &(&prod * &phi_c) / x;
        }
        let mag = prod.abs_f64();
        let phi64 = phi.to_f64();
        let delta = (orbit.last().unwrap() - &phi_c).abs_f64();
        let rho = 1.0 / (2.0 * phi64 - 2.0 * delta);
        let eps = delta * rho / (phi64 - delta);
        let tail = eps / (1.0 - rho) / (1.0 - eps);
        let bound = mag * tail.exp_m1() + mag * (6 * orbit.len() + 8) as f64 * ulp(p);
        Ok(MpEstimate { value: prod, bound })
    }

    pub fn eval_g_prime(&self, w: Complex64) -> Result<Estimate> {
        Ok(self.eval_g_prime_mp(&MpComplex::from_c64(w, 53))?.to_estimate())
    }

    /// `|f(2φz) − (f(z)² − 1)|`, formed at working precision.
    pub fn poincare_residual(&self, z: Complex64) -> f64 {
        let k = scale_steps(z.norm() * (1.0 + 5f64.sqrt()));
        let p = self.working_precision(k);
        let zm = MpComplex::from_c64(z, 53);
        let scaled = zm.scale(&mp::two_phi(p + 16));
        let lhs = self.eval_f_mp(&scaled).value;
        let mut rhs = self.eval_f_mp(&zm).value;
        rhs.square_minus_one();
        (&lhs - &rhs).abs_f64()
    }
}
