use num_complex::Complex64;

use crate::mp::MpComplex;

/// `P_n(w)`: applies `w ↦ w² − 1` exactly `n` times.
pub fn p_iterate(w: Complex64, n: u32) -> Complex64 {
    (0..n).fold(w, |v, _| v * v - 1.0)
}

pub fn p_iterate_mp(w: &MpComplex, n: u32) -> MpComplex {
    let mut v = w.clone();
    for _ in 0..n {
        v.square_minus_one();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_composition() {
        let w = Complex64::new(0.3, -1.2);
        assert_eq!(p_iterate(w, 0), w);
    }

    #[test]
    fn radicals_reach_zero() {
        let s2 = 2f64.sqrt();
        assert!(p_iterate(Complex64::new(s2, 0.0), 2).norm() < 1e-15);
        // √(1+√2): y² − 1 = √2, then 1, then 0
        let y = (1.0 + s2).sqrt();
        assert!((p_iterate(Complex64::new(y, 0.0), 1).re - s2).abs() < 1e-15);
        assert!((p_iterate(Complex64::new(y, 0.0), 2).re - 1.0).abs() < 1e-15);
        assert!(p_iterate(Complex64::new(y, 0.0), 3).norm() < 1e-14);
    }

    #[test]
    fn backends_agree() {
        let w = Complex64::new(0.7, 0.4);
        let a = p_iterate(w, 5);
        let b = p_iterate_mp(&MpComplex::from_c64(w, 120), 5).to_c64();
        assert!((a - b).norm() < 1e-13 * a.norm());
    }
}
