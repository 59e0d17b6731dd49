use rug::Float;

use super::sign::{Sign, SignSeq};
use crate::mp::ComplexScalar;

/// Relative bound on `|Π_{m>n} (φ + t_m)/(2φ) − 1|` once the all-`+1` tail
/// has started and `δ = |t_n − φ|`.
///
/// `t_{m+1} − φ = (t_m − φ)/(t_{m+1} + φ)` contracts by at least
/// `ρ = 1/(2φ − 2δ)`, so the factors' logarithms are summable geometrically.
pub(crate) fn tail_bound(delta: f64) -> f64 {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    if !(delta < 0.5) {
        return f64::INFINITY;
    }
    let rho = 1.0 / (2.0 * phi - 2.0 * delta);
    let eps = delta * rho / (2.0 * phi);
    let s = eps / (1.0 - rho) / (1.0 - delta / (2.0 * phi));
    s.exp_m1()
}

/// Result of running a radical chain.
#[derive(Clone, Debug)]
pub(crate) struct Chain<T> {
    /// `Π_{n=1}^{steps} (φ + t_n)/(2φ)`.
    pub product: T,
    /// Relative bound on the omitted factors.
    pub tail: f64,
}

/// Constants a chain needs, built once at the working precision.
pub(crate) struct ChainConsts<T> {
    pub one: T,
    pub phi: T,
    pub two_phi: T,
}

impl<T: ComplexScalar> ChainConsts<T> {
    pub fn new(like: &T, phi: &Float) -> Self {
        let p = phi.prec();
        ChainConsts {
            one: like.real_like(&Float::with_val(p, 1)),
            phi: like.real_like(phi),
            two_phi: like.real_like(&Float::with_val(p, phi * 2u32)),
        }
    }
}

/// How far to run a chain past the last `−1`.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Stop {
    /// Exactly this many factors in total.
    Fixed(usize),
    /// Until a factor is within `eps` of 1, capped at `max_extra` factors past
    /// the last `−1`.
    Converged { eps: f64, max_extra: usize },
}

/// Runs `t_1 = σ_1√seed`, `t_n = σ_n√(1 + t_{n−1})` and multiplies the
/// factors `(φ + t_n)/(2φ)`.
///
/// A zero radicand is a legitimate value: the root is 0 and the chain goes on.
pub(crate) fn run_chain<T: ComplexScalar>(
    sigma: &SignSeq,
    seed: &T,
    c: &ChainConsts<T>,
    stop: Stop,
) -> Chain<T> {
    let sigma = sigma.to_sigma();
    let last = sigma.len();
    let mut radicand = seed.clone();
    let mut product = c.one.clone();
    let mut n = 0usize;
    loop {
        n += 1;
        let root = radicand.csqrt();
        let t = match sigma.sign_at(n) {
            Sign::Plus => root,
            Sign::Minus => root.cneg(),
        };
        let factor = c.phi.cadd(&t).cdiv(&c.two_phi);
        product = product.cmul(&factor);
        let delta = t.csub(&c.phi).abs64();
        radicand = c.one.cadd(&t);
        let done = match stop {
            Stop::Fixed(total) => n >= total,
            Stop::Converged { eps, max_extra } => {
                n >= last && (delta / (2.0 * 1.618_033_988_749_895) < eps || n >= last + max_extra)
            }
        };
        if done {
            let tail = if n >= last { tail_bound(delta) } else { f64::INFINITY };
            return Chain {
                product,
                tail,
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn all_plus_product_matches_paris_value() {
        let phi = crate::mp::phi(53);
        let like = Complex64::new(0.0, 0.0);
        let c = ChainConsts::new(&like, &phi);
        let seed = Complex64::new(2.0, 0.0);
        let chain = run_chain(
            &SignSeq::all_plus(),
            &seed,
            &c,
            Stop::Converged {
                eps: 1e-17,
                max_extra: 80,
            },
        );
        // −2/z₀ = 1/C
        assert!((chain.product.re - 1.0 / 1.098_641_964_394_156_7).abs() < 1e-14);
        assert!(chain.tail < 1e-15);
    }

    #[test]
    fn zero_radicand_is_kept() {
        let phi = crate::mp::phi(53);
        let like = Complex64::new(0.0, 0.0);
        let c = ChainConsts::new(&like, &phi);
        let sigma: SignSeq = "-".parse().unwrap();
        let chain = run_chain(&sigma, &Complex64::new(1.0, 0.0), &c, Stop::Fixed(2));
        // t_1 = −1, t_2 = √0 = 0
        let expect = (1.618_033_988_749_895 - 1.0) / (2.0 * 1.618_033_988_749_895) * 0.5;
        assert!((chain.product.re - expect).abs() < 1e-15);
        assert!(chain.product.is_finite());
    }

    #[test]
    fn tail_bound_shrinks() {
        assert!(tail_bound(1e-3) < 4e-4);
        assert!(tail_bound(1e-9) < 4e-10);
        assert_eq!(tail_bound(0.7), f64::INFINITY);
    }
}
