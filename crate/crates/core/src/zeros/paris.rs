use num_complex::Complex64;
use rug::Float;

use super::sign::SignSeq;
use super::simple::z0_of_sigma;
use crate::error::{Error, Result};
use crate::mp::{self, MpComplex};
use crate::series::Evaluator;

/// Required agreement between the three routes to C.
pub const CROSS_CHECK_TOL: f64 = 1e-10;

/// The constant C from three independent computations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParisConstant {
    pub value: f64,
    /// `−g(0)/2`.
    pub via_g: f64,
    /// `−z₀(+1, +1, …)/2`.
    pub via_zero: f64,
    /// Half the negative root of f, by bisection.
    pub via_bisection: f64,
    /// Largest pairwise difference.
    pub spread: f64,
}

/// Root of `x ↦ Re f(x)` in `(lo, hi)` after `iters` halvings.
/// The endpoints must bracket a sign change.
pub fn bisect_real_root(ev: &Evaluator, lo: f64, hi: f64, iters: u32) -> Result<f64> {
    let f = |x: f64| ev.eval_f(Complex64::new(x, 0.0)).value.re;
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (f(a), f(b));
    if fa.signum() == fb.signum() {
        return Err(Error::InvalidArgument(format!(
            "f does not change sign on ({lo}, {hi}): {fa}, {fb}"
        )));
    }
    for _ in 0..iters {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// C with `φ − φₙ ~ 2C/(2φ)ⁿ`, computed as `−g(0)/2`, as `−z₀/2` for the
/// all-`+1` sequence and from the negative root of f on `(−3, 0)`.
pub fn paris_constant(ev: &Evaluator) -> Result<ParisConstant> {
    let p = ev.working_precision(0);
    let via_g = -ev.eval_g_mp(&MpComplex::zero(p))?.value.re.to_f64() / 2.0;
    let via_zero = -z0_of_sigma(ev, &SignSeq::all_plus())?.value.re / 2.0;
    let via_bisection = -bisect_real_root(ev, -3.0, 0.0, 60)? / 2.0;
    let spread = (via_g - via_zero)
        .abs()
        .max((via_g - via_bisection).abs())
        .max((via_zero - via_bisection).abs());
    if !(spread <= CROSS_CHECK_TOL) {
        return Err(Error::CrossCheck {
            via_g,
            via_zero,
            via_bisection,
        });
    }
    Ok(ParisConstant {
        value: via_g,
        via_g,
        via_zero,
        via_bisection,
        spread,
    })
}

/// `φ₁ = 1, φₙ₊₁ = √(1 + φₙ)` for `n = 1..=n_max`, at `prec` bits.
pub fn nested_radicals(n_max: usize, prec: u32) -> Vec<Float> {
    let mut out = Vec::with_capacity(n_max);
    let mut x = Float::with_val(prec, 1);
    for _ in 0..n_max {
        out.push(x.clone());
        x = (x + 1u32).sqrt();
    }
    out
}

/// `(2φ)ⁿ(φ − φₙ)` for `n = 1..=n_max`; the sequence tends to 2C.
///
/// Computed with enough bits that the cancellation in `φ − φₙ` costs nothing.
pub fn nested_convergence(n_max: usize) -> Vec<f64> {
    let prec = 64 + 2 * n_max as u32 + 32;
    let phi = mp::phi(prec);
    let a = mp::two_phi(prec);
    let mut scale = Float::with_val(prec, 1);
    nested_radicals(n_max, prec)
        .into_iter()
        .map(|x| {
            scale *= &a;
            Float::with_val(prec, &phi - &x) * &scale
        })
        .map(|v| v.to_f64())
        .collect()
}
