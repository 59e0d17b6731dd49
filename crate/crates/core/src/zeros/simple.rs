use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use rug::Float;

use super::radical::{run_chain, ChainConsts, Stop};
use super::sign::SignSeq;
use crate::error::{Error, Result};
use crate::mp::{self, MpComplex};
use crate::series::Evaluator;

const TWO_PHI: f64 = 3.236_067_977_499_79;

/// Ring `n` with `(2φ)ⁿ < r ≤ (2φ)ⁿ⁺¹`.
pub fn ring_index(r: f64) -> i32 {
    assert!(r > 0.0 && r.is_finite(), "ring of {r}");
    let mut k = (r.ln() / TWO_PHI.ln()).ceil() as i32;
    while TWO_PHI.powi(k) < r {
        k += 1;
    }
    while TWO_PHI.powi(k - 1) >= r {
        k -= 1;
    }
    k - 1
}

/// The ring of `r` plus the neighbouring ring when `r` is within relative
/// distance `tol` of the shared boundary.
pub fn ring_tags(r: f64, tol: f64) -> (i32, Option<i32>) {
    let n = ring_index(r);
    let lower = TWO_PHI.powi(n);
    let upper = TWO_PHI.powi(n + 1);
    if (r - lower).abs() <= tol * lower {
        (n, Some(n - 1))
    } else if (upper - r).abs() <= tol * upper {
        (n, Some(n + 1))
    } else {
        (n, None)
    }
}

/// A verified simple zero of f.
#[derive(Clone, Debug)]
pub struct ZeroRecord {
    pub value: Complex64,
    /// The same zero at the precision it was computed with.
    pub precise: MpComplex,
    pub seq: SignSeq,
    pub ring: i32,
    /// `|f(value)|`, evaluated at the precise value.
    pub residual: f64,
    pub derivative_magnitude: f64,
    /// Bound on the distance from `precise` to the true zero.
    pub location_bound: f64,
}

fn zero_precision(ev: &Evaluator, sigma: &SignSeq) -> u32 {
    ev.working_precision(sigma.generation() as u32 + 3) + 16
}

/// `T(σ) = Π_{n≥1} (φ + t_n)/(2φ)` with `t_1 = σ_1√2`; the zero is `−2/T`.
fn z0_chain(sigma: &SignSeq, prec: u32, stop: Stop) -> (MpComplex, f64) {
    let phi = mp::phi(prec);
    let seed = MpComplex::from_real(&Float::with_val(prec, 2), prec);
    let consts = ChainConsts::new(&seed, &phi);
    let chain = run_chain(sigma, &seed, &consts, stop);
    let minus_two = MpComplex::from_real(&Float::with_val(prec, -2), prec);
    (&minus_two / &chain.product, chain.tail)
}

/// `z₀(σ)` from exactly `depth` factors.
pub fn z0_truncated(sigma: &SignSeq, depth: usize, prec: u32) -> MpComplex {
    z0_chain(sigma, prec, Stop::Fixed(depth.max(1))).0
}

/// `z₀(σ) = −2·Π_{n≥1} 2φ/(φ + t_n)` in double precision, truncated once the
/// factors reach machine precision. Intended for plotting and sweeps.
pub fn z0_approx(sigma: &SignSeq) -> Complex64 {
    let phi = mp::phi(53);
    let seed = Complex64::new(2.0, 0.0);
    let consts = ChainConsts::new(&seed, &phi);
    let chain = run_chain(
        sigma,
        &seed,
        &consts,
        Stop::Converged {
            eps: f64::EPSILON / 4.0,
            max_extra: 80,
        },
    );
    -2.0 / chain.product
}

/// Simple zero for `sigma`, checked against `eval_f` and `eval_f_prime`.
pub fn z0_of_sigma(ev: &Evaluator, sigma: &SignSeq) -> Result<ZeroRecord> {
    let sigma = sigma.to_sigma();
    let prec = zero_precision(ev, &sigma);
    let eps = 2f64.powi(-(prec as i32));
    let (z, tail) = z0_chain(
        &sigma,
        prec,
        Stop::Converged {
            eps,
            max_extra: 4 * prec as usize,
        },
    );
    let value = z.to_c64();
    let r = value.norm();
    let f = ev.eval_f_mp(&z);
    let fp = ev.eval_f_prime_mp(&z);
    let residual = f.value.abs_f64();
    let derivative_magnitude = fp.value.abs_f64();
    if !(derivative_magnitude > ev.config().tolerance) {
        return Err(Error::SimplicityViolation {
            sigma: sigma.to_string(),
            derivative: derivative_magnitude,
        });
    }
    let chain_error = r * tail / (1.0 - tail).max(0.5) + r * 2f64.powi(8 - prec as i32);
    let location_bound = chain_error + (residual + f.bound) / (derivative_magnitude - fp.bound).max(f64::MIN_POSITIVE);
    Ok(ZeroRecord {
        value,
        precise: z,
        ring: ring_index(r),
        seq: sigma,
        residual,
        derivative_magnitude,
        location_bound,
    })
}

/// One record per sigma with last `−1` at position `≤ depth`, sorted by
/// `|value|`, then real part, then imaginary part.
pub fn enumerate_simple_zeros(ev: &Evaluator, depth: usize) -> Result<Vec<ZeroRecord>> {
    let sigmas = SignSeq::up_to(depth);
    let mut records = sigmas
        .par_iter()
        .map(|s| z0_of_sigma(ev, s))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| {
        a.value
            .norm()
            .total_cmp(&b.value.norm())
            .then(a.value.re.total_cmp(&b.value.re))
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(records)
}

/// Number of records per ring.
pub fn ring_occupancy(records: &[ZeroRecord]) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    for r in records {
        *out.entry(r.ring).or_insert(0) += 1;
    }
    out
}

/// `(|f(w)|, |f′(w)|)` at `w = (2φ)²z`.
pub fn doubling_witness(ev: &Evaluator, z: &MpComplex) -> (f64, f64) {
    let p = z.prec().max(64) + 8;
    let a2 = Float::with_val(p, mp::two_phi(p + 8).square_ref());
    let w = z.with_prec(p).scale(&a2);
    let f = ev.eval_f_mp(&w).value.abs_f64();
    let fp = ev.eval_f_prime_mp(&w).value.abs_f64();
    (f, fp)
}

/// True iff both f and f′ vanish (below the tolerance) at `(2φ)²·z₀`,
/// i.e. the zero's first rescaling is at least a double zero.
pub fn multiplicity_doubling_check(ev: &Evaluator, rec: &ZeroRecord) -> bool {
    let tol = ev.config().tolerance;
    let (f, fp) = doubling_witness(ev, &rec.precise);
    f < tol && fp < tol
}

/// Same test at an arbitrary point.
pub fn doubling_at(ev: &Evaluator, z: Complex64) -> bool {
    let tol = ev.config().tolerance;
    let (f, fp) = doubling_witness(ev, &MpComplex::from_c64(z, 53));
    f < tol && fp < tol
}
