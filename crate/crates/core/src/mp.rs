//! Multiprecision complex numbers on top of MPFR floats, plus a small
//! scalar trait so radical chains can run in either `f64` or MPFR.
//!
//! All square roots here are principal, and a zero imaginary part is read
//! as `+0`: `sqrt(-x) = +i·sqrt(x)` regardless of the sign bit of the zero.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use rug::Float;

/// Principal square root of a `Complex64` with the `+0` convention.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    if x == 0.0 && y == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let r = x.hypot(y);
    if x >= 0.0 {
        let t = ((r + x) / 2.0).sqrt();
        Complex64::new(t, y / (2.0 * t))
    } else {
        let t = ((r - x) / 2.0).sqrt();
        let im = if y < 0.0 { -t } else { t };
        Complex64::new(y.abs() / (2.0 * t), im)
    }
}

/// A complex number with MPFR components of equal precision.
#[derive(Clone, Debug, PartialEq)]
pub struct MpComplex {
    pub re: Float,
    pub im: Float,
}

impl MpComplex {
    pub fn zero(prec: u32) -> Self {
        MpComplex {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn from_c64(z: Complex64, prec: u32) -> Self {
        MpComplex {
            re: Float::with_val(prec, z.re),
            im: Float::with_val(prec, z.im),
        }
    }

    pub fn from_real(x: &Float, prec: u32) -> Self {
        MpComplex {
            re: Float::with_val(prec, x),
            im: Float::new(prec),
        }
    }

    pub fn from_parts(re: Float, im: Float) -> Self {
        MpComplex { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Copy rounded to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        MpComplex {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        MpComplex {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        MpComplex {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    pub fn add_real(&self, x: &Float) -> Self {
        MpComplex {
            re: Float::with_val(self.prec(), &self.re + x),
            im: self.im.clone(),
        }
    }

    /// `self ← self² − 1`, one step of `w ↦ w² − 1`.
    pub fn square_minus_one(&mut self) {
        let p = self.prec();
        let re2 = Float::with_val(p, self.re.square_ref());
        let im2 = Float::with_val(p, self.im.square_ref());
        let cross = Float::with_val(p, &self.re * &self.im);
        self.re = re2 - im2 - 1u32;
        self.im = cross * 2u32;
    }

    /// Principal square root with the `+0` convention for real negatives.
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.re.is_zero() && self.im.is_zero() {
            return MpComplex::zero(p);
        }
        let r = self.abs();
        if !self.re.is_sign_negative() {
            let t = Float::with_val(p, &r + &self.re) / 2u32;
            let t = t.sqrt();
            let im = Float::with_val(p, &self.im / &t) / 2u32;
            MpComplex { re: t, im }
        } else {
            let t = Float::with_val(p, &r - &self.re) / 2u32;
            let t = t.sqrt();
            let re = Float::with_val(p, self.im.abs_ref()) / &t / 2u32;
            let im = if self.im.is_sign_negative() && !self.im.is_zero() {
                -t
            } else {
                t
            };
            MpComplex { re, im }
        }
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let n = Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref());
        MpComplex {
            re: Float::with_val(p, &self.re / &n),
            im: -(Float::with_val(p, &self.im / &n)),
        }
    }
}

impl<'a> Add<&'a MpComplex> for &'a MpComplex {
    type Output = MpComplex;
    fn add(self, rhs: &MpComplex) -> MpComplex {
        let p = self.prec().max(rhs.prec());
        MpComplex {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl<'a> Sub<&'a MpComplex> for &'a MpComplex {
    type Output = MpComplex;
    fn sub(self, rhs: &MpComplex) -> MpComplex {
        let p = self.prec().max(rhs.prec());
        MpComplex {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl<'a> Mul<&'a MpComplex> for &'a MpComplex {
    type Output = MpComplex;
    fn mul(self, rhs: &MpComplex) -> MpComplex {
        let p = self.prec().max(rhs.prec());
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        MpComplex {
            re: ac - bd,
            im: ad + bc,
        }
    }
}

impl<'a> Div<&'a MpComplex> for &'a MpComplex {
    type Output = MpComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &MpComplex) -> MpComplex {
        self * &rhs.recip()
    }
}

impl Neg for &MpComplex {
    type Output = MpComplex;
    fn neg(self) -> MpComplex {
        MpComplex {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

/// The operations a nested-radical chain needs. Implemented for
/// `Complex64` (fast, for plotting and large sweeps) and [`MpComplex`]
/// (for zeros that must satisfy tight residuals).
pub trait ComplexScalar: Clone {
    /// A real constant at the precision of `self`.
    fn real_like(&self, x: &Float) -> Self;
    fn csqrt(&self) -> Self;
    fn cadd(&self, rhs: &Self) -> Self;
    fn csub(&self, rhs: &Self) -> Self;
    fn cmul(&self, rhs: &Self) -> Self;
    fn cdiv(&self, rhs: &Self) -> Self;
    fn cneg(&self) -> Self;
    fn to_c64(&self) -> Complex64;
    fn abs64(&self) -> f64 {
        self.to_c64().norm()
    }
}

impl ComplexScalar for Complex64 {
    fn real_like(&self, x: &Float) -> Self {
        Complex64::new(x.to_f64(), 0.0)
    }
    fn csqrt(&self) -> Self {
        principal_sqrt(*self)
    }
    fn cadd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn csub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn cmul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn cdiv(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn cneg(&self) -> Self {
        -self
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
}

impl ComplexScalar for MpComplex {
    fn real_like(&self, x: &Float) -> Self {
        MpComplex::from_real(x, self.prec())
    }
    fn csqrt(&self) -> Self {
        self.sqrt()
    }
    fn cadd(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn csub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn cmul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn cdiv(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn cneg(&self) -> Self {
        -self
    }
    fn to_c64(&self) -> Complex64 {
        MpComplex::to_c64(self)
    }
    fn abs64(&self) -> f64 {
        self.abs_f64()
    }
}

/// φ at `prec` bits.
pub fn phi(prec: u32) -> Float {
    (Float::with_val(prec + 8, 5).sqrt() + 1u32) / 2u32
}

/// 2φ = 1 + √5 at `prec` bits.
pub fn two_phi(prec: u32) -> Float {
    Float::with_val(prec, Float::with_val(prec + 8, 5).sqrt() + 1u32)
}
