//! Exact arithmetic in the real quadratic field Q(√5).
//!
//! Elements are stored as `a + b√5` with `a`, `b` arbitrary-precision
//! rationals. The golden ratio is `φ = 1/2 + 1/2·√5`; the identity
//! `φ² = φ + 1` is a consequence of the multiplication rule, not a
//! representation rule.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rug::{Complete, Float, Rational};

use crate::error::{Error, Result};

/// An element `a + b√5` of Q(√5).
///
/// `rug::Rational` keeps both coefficients in lowest terms with a positive
/// denominator, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: Rational,
    b: Rational,
}

impl QuadNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadNum { a, b }
    }

    /// `num_a/den_a + (num_b/den_b)·√5`. Panics on a zero denominator.
    pub fn from_ratios(num_a: i64, den_a: i64, num_b: i64, den_b: i64) -> Self {
        QuadNum {
            a: Rational::from((num_a, den_a)),
            b: Rational::from((num_b, den_b)),
        }
    }

    pub fn from_int(n: i64) -> Self {
        QuadNum {
            a: Rational::from(n),
            b: Rational::new(),
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadNum {
            a,
            b: Rational::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        QuadNum {
            a: Rational::new(),
            b: Rational::from(1),
        }
    }

    /// The golden ratio (1 + √5)/2.
    pub fn phi() -> Self {
        Self::from_ratios(1, 2, 1, 2)
    }

    /// 2φ = 1 + √5, the multiplier of the functional equation.
    pub fn two_phi() -> Self {
        Self::from_ratios(1, 1, 1, 1)
    }

    /// Rational part.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of √5.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.cmp0() == Ordering::Equal && self.b.cmp0() == Ordering::Equal
    }

    /// Galois conjugate `a − b√5`.
    pub fn conj(&self) -> Self {
        QuadNum {
            a: self.a.clone(),
            b: Rational::from(-&self.b),
        }
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        let a2 = Rational::from(self.a.square_ref());
        let b2 = Rational::from(self.b.square_ref());
        a2 - b2 * 5u32
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.cmp0() == Ordering::Equal {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadNum {
            a: (&self.a / &n).complete(),
            b: Rational::from(-&self.b) / &n,
        })
    }

    pub fn checked_div(&self, rhs: &QuadNum) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = QuadNum::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        QuadNum {
            a: (&self.a * r).complete(),
            b: (&self.b * r).complete(),
        }
    }

    /// Exact sign of the real number `a + b√5`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp0();
        let sb = self.b.cmp0();
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                // Opposite signs: compare a² with 5b².
                let a2 = Rational::from(self.a.square_ref());
                let b2 = Rational::from(self.b.square_ref()) * 5u32;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Value rounded to `precision` bits, within one ulp.
    ///
    /// When `a` and `b` have opposite signs the value is formed as
    /// `norm / (a − b√5)` so that no cancellation occurs.
    pub fn to_float(&self, precision: u32) -> Float {
        let work = precision + 64;
        let cancels = self.a.cmp0() != Ordering::Equal
            && self.b.cmp0() != Ordering::Equal
            && self.a.cmp0() != self.b.cmp0();
        let sqrt5 = Float::with_val(work, 5).sqrt();
        let x = if cancels {
            let conj = Float::with_val(work, &self.a) - Float::with_val(work, &self.b) * &sqrt5;
            Float::with_val(work, &self.norm()) / conj
        } else {
            Float::with_val(work, &self.a) + Float::with_val(work, &self.b) * &sqrt5
        };
        Float::with_val(precision, &x)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float(53).to_f64()
    }
}

impl Default for QuadNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        QuadNum {
            a: (&self.a + &rhs.a).complete(),
            b: (&self.b + &rhs.b).complete(),
        }
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        QuadNum {
            a: (&self.a - &rhs.a).complete(),
            b: (&self.b - &rhs.b).complete(),
        }
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let ac = (&self.a * &rhs.a).complete();
        let bd = (&self.b * &rhs.b).complete();
        let ad = (&self.a * &rhs.b).complete();
        let bc = (&self.b * &rhs.a).complete();
        QuadNum {
            a: ac + bd * 5u32,
            b: ad + bc,
        }
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum {
            a: Rational::from(-&self.a),
            b: Rational::from(-&self.b),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $m(self, rhs: QuadNum) -> QuadNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $m(self, rhs: &QuadNum) -> QuadNum {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Prints `p/q + r/s*sqrt5`, always with explicit denominators.
impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.a)?;
        f.write_str(" + ")?;
        write_ratio(f, &self.b)?;
        f.write_str("*sqrt5")
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    Rational::parse(s)
        .map(Rational::from)
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Accepts the `Display` form as well as `p/q`, `r/s*sqrt5` and
/// `p/q - r/s*sqrt5`; whitespace is ignored.
impl FromStr for QuadNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = compact.strip_suffix("*sqrt5") else {
            return Ok(QuadNum::from_rational(parse_rational(&compact)?));
        };
        let bytes = body.as_bytes();
        // Rightmost sign that is neither leading nor part of "+-"/"--".
        let split = (1..bytes.len())
            .rev()
            .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'+' | b'-'));
        match split {
            None => Ok(QuadNum::new(Rational::new(), parse_rational(body)?)),
            Some(i) => {
                let a = parse_rational(&body[..i])?;
                let b_text = &body[i..];
                let b = match b_text.strip_prefix('+') {
                    Some(rest) => parse_rational(rest)?,
                    None => parse_rational(b_text)?,
                };
                Ok(QuadNum::new(a, b))
            }
        }
    }
}
