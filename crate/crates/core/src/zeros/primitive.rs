use num_complex::Complex64;
use rug::Float;

use super::sign::{Convention, Sign, SignSeq};
use crate::error::{Error, Result};
use crate::mp::MpComplex;

/// Largest `n` accepted by [`primitive_zeros`].
pub const DEFAULT_DEPTH_LIMIT: usize = 20;

/// Acceptance thresholds for a primitive zero `y` of `P_n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimitivityCheck {
    /// `|P_n(y)|` must be below this.
    pub top: f64,
    /// `|P_k(y)|` for `k < n` must stay above this.
    pub floor: f64,
}

impl Default for PrimitivityCheck {
    fn default() -> Self {
        PrimitivityCheck {
            top: 1e-9,
            floor: 1e-6,
        }
    }
}

fn address_precision(n: usize) -> u32 {
    64 + 2 * n as u32 + 32
}

/// `y(s) = s_1√(1 + s_2√(1 + … + s_{n−1}√2))` at `prec` bits, innermost first,
/// principal roots throughout.
pub fn y_of_s_mp(s: &SignSeq, prec: u32) -> Result<MpComplex> {
    if s.convention() != Convention::Address || s.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "y(s) needs a non-empty address, got {s} ({:?})",
            s.convention()
        )));
    }
    let one = Float::with_val(prec, 1);
    let mut v = MpComplex::from_real(&Float::with_val(prec, 2), prec);
    for (i, sign) in s.word().iter().rev().enumerate() {
        if i > 0 {
            v = v.add_real(&one);
        }
        v = v.sqrt();
        if *sign == Sign::Minus {
            v = -&v;
        }
    }
    Ok(v)
}

/// `(|P_n(y)|, min_{k<n} |P_k(y)|)` with all iterates at the precision of `y`.
pub fn primitivity_witness(y: &MpComplex, n: usize) -> (f64, f64) {
    let mut v = y.clone();
    let mut lower = f64::INFINITY;
    for _ in 0..n {
        lower = lower.min(v.abs_f64());
        v.square_minus_one();
    }
    (v.abs_f64(), lower)
}

/// Primitive zero of `P_n` for the address `s` of length `n − 1`.
///
/// The candidate is rejected unless `P_n(y) ≈ 0` and no earlier iterate
/// vanishes.
pub fn y_of_s(s: &SignSeq, check: PrimitivityCheck) -> Result<Complex64> {
    let n = s.len() + 1;
    let y = y_of_s_mp(s, address_precision(n))?;
    let (top, lower) = primitivity_witness(&y, n);
    if !(top < check.top && lower > check.floor) {
        return Err(Error::NotPrimitive {
            address: s.to_string(),
            top,
            lower,
        });
    }
    Ok(y.to_c64())
}

/// Outcome of [`primitive_zeros`].
#[derive(Clone, Debug, PartialEq)]
pub struct PrimitiveZeros {
    pub n: usize,
    /// Accepted values in lexicographic address order.
    pub values: Vec<Complex64>,
    /// Addresses whose candidate failed the primitivity check.
    pub rejected: Vec<SignSeq>,
    /// Number of values at pairwise distance greater than the tolerance.
    pub distinct: usize,
    /// Smallest distance between two accepted values.
    pub min_separation: f64,
}

/// Every address of length `n − 1` in lexicographic order (`+ < −`).
pub fn addresses(n: usize) -> Vec<SignSeq> {
    assert!(n >= 2);
    let len = n - 1;
    (0u64..1 << len)
        .map(|bits| {
            SignSeq::address(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}

/// All primitive zeros of `P_n` reachable through principal-branch radicals.
pub fn primitive_zeros(
    n: usize,
    check: PrimitivityCheck,
    distinct_tol: f64,
) -> Result<PrimitiveZeros> {
    if !(2..=DEFAULT_DEPTH_LIMIT).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "n must lie in 2..={DEFAULT_DEPTH_LIMIT}, got {n}"
        )));
    }
    let mut values = Vec::with_capacity(1 << (n - 1));
    let mut rejected = Vec::new();
    for s in addresses(n) {
        match y_of_s(&s, check) {
            Ok(y) => values.push(y),
            Err(Error::NotPrimitive { .. }) => rejected.push(s),
            Err(e) => return Err(e),
        }
    }
    let (distinct, min_separation) = count_distinct(&values, distinct_tol);
    Ok(PrimitiveZeros {
        n,
        values,
        rejected,
        distinct,
        min_separation,
    })
}

/// Greedy clustering: a value is new unless an earlier one lies within `tol`.
/// Also returns the smallest pairwise distance.
pub(crate) fn count_distinct(values: &[Complex64], tol: f64) -> (usize, f64) {
    let mut sorted: Vec<Complex64> = values.to_vec();
    sorted.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut min_sep = f64::INFINITY;
    let mut distinct = 0;
    for i in 0..sorted.len() {
        let mut fresh = true;
        for j in (0..i).rev() {
            let dx = sorted[i].re - sorted[j].re;
            if dx > tol.max(min_sep) {
                break;
            }
            let d = (sorted[i] - sorted[j]).norm();
            min_sep = min_sep.min(d);
            if d <= tol {
                fresh = false;
            }
        }
        if fresh {
            distinct += 1;
        }
    }
    (distinct, min_sep)
}
