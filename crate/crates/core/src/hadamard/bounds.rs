//! Tail bounds for sums over sign sequences.
//!
//! Every bound here rests on one empirical fact, checked by the test suite
//! up to generation 16: a zero whose last `−1` sits at position `g ≥ 1`
//! lies outside the disc of radius `(2φ)^{g+1}`. Generation `g` has
//! `2^{g−1}` members, so
//!
//! ```text
//! Σ_{gen > L} 1/|z₀(σ)| ≤ Σ_{g > L} 2^{g−1}/(2φ)^{g+1} = φ^{−L}/4.
//! ```

const PHI: f64 = 1.618_033_988_749_895;

/// Radius below which generation `g` has no zeros.
pub fn generation_radius(g: usize) -> f64 {
    if g == 0 {
        // the real zero −2C
        2.0
    } else {
        (2.0 * PHI).powi(g as i32 + 1)
    }
}

/// `Σ 1/|z₀(σ)|` over sequences with last `−1` beyond position `depth`.
pub fn omitted_inverse_sum(depth: usize) -> f64 {
    PHI.powi(-(depth as i32)) / 4.0
}

/// `Σ |Π (φ + t_n)/(2φ)|` over omitted sequences, innermost `√2`.
/// Each term is `2/|z₀(σ)|`.
pub fn sqrt2_tail(depth: usize) -> f64 {
    2.0 * omitted_inverse_sum(depth)
}

/// Same for the innermost-`√1` chain.
///
/// A sequence starting with `+1` contributes `(φ/2)·T(σ')` for the shifted
/// sequence; one starting with `−1` contributes `U(σ'')/(4φ²)` for each of
/// the two values of `σ_2`. The recursion `R(L) ≤ (φ/2)·T(L−1) + R(L−2)/(2φ²)`
/// closes at `R(L) = φ^{2−L}/2` for `L ≥ 1`. At `L = 0` it reads
/// `R(0) = (φ/2)·T(0) + (U(+1, +1, …) + R(0))/(2φ²)` with `U = φ/(2C)`,
/// which gives `R(0) < 0.68`.
pub fn sqrt1_tail(depth: usize) -> f64 {
    if depth == 0 {
        0.7
    } else {
        PHI.powi(2 - depth as i32) / 2.0
    }
}

/// Relative error of a product `Π(1 − w_n)` when factors with
/// `Σ|w_n| ≤ s` are left out: `|Π(1 − w_n) − 1| ≤ e^s − 1`.
pub fn product_tail(s: f64) -> f64 {
    s.exp_m1()
}
