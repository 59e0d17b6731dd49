use num_complex::Complex64;

use super::bounds::generation_radius;
use super::product::HProduct;
use crate::error::{Error, Result};

const TWO_PHI: f64 = 3.236_067_977_499_79;

/// Winding number of `fun` around 0 along `|z| = radius`, from `samples`
/// equally spaced points. Fails when a step turns by more than a quarter
/// turn or `fun` vanishes on the contour.
pub fn winding_number(fun: impl Fn(Complex64) -> Complex64, radius: f64, samples: usize) -> Result<i64> {
    if samples < 8 {
        return Err(Error::InvalidArgument("need at least 8 samples".into()));
    }
    let point = |k: usize| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / samples as f64);
    let first = fun(point(0));
    let mut prev = first;
    let mut total = 0.0;
    for k in 1..=samples {
        let cur = if k == samples { first } else { fun(point(k)) };
        if cur.norm() == 0.0 || !cur.is_finite() {
            return Err(Error::InvalidArgument(format!("function vanishes near {}", point(k))));
        }
        let step = (cur / prev).arg();
        if step.abs() > std::f64::consts::FRAC_PI_2 {
            return Err(Error::InvalidArgument(format!(
                "contour |z| = {radius} too coarse at {samples} samples"
            )));
        }
        total += step;
        prev = cur;
    }
    Ok((total / (2.0 * std::f64::consts::PI)).round() as i64)
}

/// Zeros of f inside `|z| < radius` predicted from the stored simple zeros:
/// each `z_k` contributes `2ⁿ` at `(2φ)^{2n} z_k`.
///
/// Only meaningful while `radius` stays below the first ring not fully
/// enumerated.
pub fn expected_zero_count(h: &HProduct, radius: f64) -> Result<u64> {
    let limit = generation_radius(h.truncation() + 1);
    if radius > limit {
        return Err(Error::InvalidArgument(format!(
            "radius {radius} exceeds the enumerated region (< {limit})"
        )));
    }
    let mut count = 0u64;
    for z in h.points() {
        let mut r = z.norm();
        let mut mult = 1u64;
        while r < radius {
            count += mult;
            r *= TWO_PHI * TWO_PHI;
            mult *= 2;
        }
    }
    Ok(count)
}

/// Outcome of comparing the winding number of f with the stored zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArgumentCheck {
    pub radius_bits: u64,
    pub winding: i64,
    pub expected: u64,
}

impl ArgumentCheck {
    pub fn radius(&self) -> f64 {
        f64::from_bits(self.radius_bits)
    }

    pub fn passed(&self) -> bool {
        self.winding >= 0 && self.winding as u64 == self.expected
    }
}

/// Argument-principle smoke test: f should have exactly the zeros implied
/// by `h` inside `|z| < radius`. Not a proof; a too-coarse contour is an error.
pub fn argument_principle_check(
    fun: impl Fn(Complex64) -> Complex64,
    h: &HProduct,
    radius: f64,
    samples: usize,
) -> Result<ArgumentCheck> {
    let expected = expected_zero_count(h, radius)?;
    let winding = winding_number(fun, radius, samples)?;
    Ok(ArgumentCheck {
        radius_bits: radius.to_bits(),
        winding,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn winding_of_polynomial() {
        let f = |z: Complex64| (z - 0.5) * (z + Complex64::new(0.0, 0.3)) * (z - 3.0);
        assert_eq!(winding_number(f, 1.0, 256).unwrap(), 2);
        assert_eq!(winding_number(f, 4.0, 256).unwrap(), 3);
        assert!(winding_number(|z| z.powu(40), 1.0, 16).is_err());
    }
}
