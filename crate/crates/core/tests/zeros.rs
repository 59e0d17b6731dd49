use std::sync::OnceLock;

use golden_poincare::mp::{two_phi, MpComplex};
use golden_poincare::series::{EvalConfig, Evaluator};
use golden_poincare::zeros::{
    addresses, approx_zero_cloud, enumerate_simple_zeros, primitive_zeros, primitivity_witness,
    ring_index, y_of_s_mp, z0_approx, z0_of_sigma, PrimitivityCheck, SignSeq, ZeroRecord,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rug::ops::Pow;
use rug::Float;

const PHI: f64 = 1.618_033_988_749_895;
const TWO_PHI: f64 = 2.0 * PHI;

fn ev() -> &'static Evaluator {
    static EV: OnceLock<Evaluator> = OnceLock::new();
    EV.get_or_init(|| Evaluator::new(EvalConfig::default()).unwrap())
}

/// Every zero with last −1 at position ≤ 14.
fn zeros() -> &'static [ZeroRecord] {
    static Z: OnceLock<Vec<ZeroRecord>> = OnceLock::new();
    Z.get_or_init(|| enumerate_simple_zeros(ev(), 14).unwrap())
}

fn gen(r: &ZeroRecord) -> usize {
    r.seq.generation()
}

#[test]
fn ring_rule_holds_to_generation_fourteen() {
    for r in zeros() {
        let g = gen(r);
        let ok = match g {
            0 => r.ring == 0,
            1 => r.ring == 3,
            _ => r.ring == g as i32 + 1 || r.ring == g as i32 + 2,
        };
        assert!(ok, "{} (generation {g}) in ring {}", r.seq, r.ring);
    }
}

#[test]
fn enumeration_counts_and_order() {
    let all = zeros();
    assert_eq!(all.len(), 1 << 14);
    assert!(all.windows(2).all(|w| w[0].value.norm() <= w[1].value.norm()));
    let mut seqs: Vec<String> = all.iter().map(|r| r.seq.to_string()).collect();
    seqs.sort();
    seqs.dedup();
    assert_eq!(seqs.len(), all.len());
}

#[test]
fn complete_rings_are_conjugate_symmetric() {
    // rings up to 14 hold every generation that can reach them
    let all = zeros();
    let inner: Vec<&ZeroRecord> = all.iter().filter(|r| r.ring <= 14).collect();
    let mut by_re = inner.iter().map(|r| r.value).collect::<Vec<_>>();
    by_re.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    for z in &by_re {
        let target = z.conj();
        let tol = 1e-9 * z.norm();
        let found = by_re.iter().any(|w| (w - target).norm() <= tol);
        assert!(found, "{z}");
    }
}

#[test]
fn conjugate_rule_matches_values() {
    for r in zeros().iter().filter(|r| gen(r) <= 9) {
        let c = z0_of_sigma(ev(), &r.seq.conjugate()).unwrap();
        assert!((c.value - r.value.conj()).norm() <= 1e-12 * r.value.norm(), "{}", r.seq);
    }
}

#[test]
fn residuals_and_bounds() {
    for r in zeros() {
        assert!(r.residual < 1e-10, "{}: {}", r.seq, r.residual);
        assert!(r.location_bound < 1e-15 * r.value.norm().max(1.0), "{}: {}", r.seq, r.location_bound);
        assert!(r.derivative_magnitude > 0.0);
        assert_eq!(ring_index(r.value.norm()), r.ring);
    }
}

#[test]
fn rescaled_zero_is_primitive_value() {
    // f((2φ)^{-n} z0) = y(address) with the address read off sigma
    let prec = 256;
    for text in ["", "-", "+-", "--", "+--+-", "-+-+--"] {
        let sigma: SignSeq = text.parse().unwrap();
        let rec = z0_of_sigma(ev(), &sigma).unwrap();
        let n = sigma.generation() + 1 + 2;
        let scale = Float::with_val(prec, two_phi(prec).pow(-(n as i32)));
        let w = rec.precise.with_prec(prec).scale(&scale);
        let f = ev().eval_f_mp(&w).value.to_c64();
        let y = y_of_s_mp(&sigma.to_address(n).unwrap(), prec).unwrap().to_c64();
        assert!((f - y).norm() < 1e-12, "[{text}] n = {n}: {f} vs {y}");
        let (top, lower) = primitivity_witness(&MpComplex::from_c64(y, prec), n);
        assert!(top < 1e-9 && lower > 1e-6, "[{text}]: {top} {lower}");
    }
}

#[test]
fn primitive_counts_to_fourteen() {
    for n in 2..=14 {
        let p = primitive_zeros(n, PrimitivityCheck::default(), 1e-9).unwrap();
        assert!(p.rejected.is_empty(), "n = {n}");
        assert_eq!(p.distinct, 1 << (n - 1), "n = {n}");
        assert_eq!(addresses(n).len(), 1 << (n - 1));
    }
}

#[test]
fn primitive_values_solve_the_polynomial() {
    // independent check in f64 by direct iteration of z² − 1
    for s in addresses(8) {
        let y = y_of_s_mp(&s, 128).unwrap().to_c64();
        let mut v = y;
        let mut smallest = f64::INFINITY;
        for _ in 0..8 {
            smallest = smallest.min(v.norm());
            v = v * v - 1.0;
        }
        assert!(v.norm() < 1e-10, "{s}: {}", v.norm());
        assert!(smallest > 1e-3, "{s}: {smallest}");
    }
}

#[test]
fn cloud_points_approximate_true_zeros() {
    let (n, n1) = (14usize, 6usize);
    let ring = (n - n1) as i32;
    let cloud = approx_zero_cloud(n, n1, 1 << 20).unwrap();
    let truth: Vec<Complex64> = zeros().iter().filter(|r| r.ring == ring).map(|r| r.value).collect();
    assert_eq!(cloud.len(), truth.len());
    let scale = TWO_PHI.powi(n as i32 - 2 * n1 as i32 + 2);
    let mut worst = 0.0f64;
    for p in &cloud {
        let d = truth.iter().map(|t| (t - p.z).norm()).fold(f64::INFINITY, f64::min);
        worst = worst.max(d / scale);
    }
    assert!(worst < 1.0, "worst distance {worst} × (2φ)^(n−2n1+2)");
}

#[test]
fn approx_and_precise_agree() {
    for r in zeros().iter().step_by(97) {
        let a = z0_approx(&r.seq);
        assert!((a - r.value).norm() <= 1e-12 * r.value.norm(), "{}", r.seq);
    }
}

fn sigma_strategy() -> impl Strategy<Value = SignSeq> {
    prop::collection::vec(any::<bool>(), 0..12).prop_map(|bits| {
        let text: String = bits.iter().map(|&b| if b { '-' } else { '+' }).collect();
        text.parse().unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_sigma_gives_a_simple_zero(sigma in sigma_strategy()) {
        let rec = z0_of_sigma(ev(), &sigma).unwrap();
        prop_assert!(rec.residual < 1e-10);
        prop_assert!(rec.derivative_magnitude > 1e-10);
        let conj = z0_of_sigma(ev(), &sigma.conjugate()).unwrap();
        prop_assert!((conj.value - rec.value.conj()).norm() <= 1e-12 * rec.value.norm());
    }

    #[test]
    fn conjugation_is_an_involution(sigma in sigma_strategy()) {
        prop_assert_eq!(sigma.conjugate().conjugate(), sigma.to_sigma());
    }
}

#[test]
fn distinct_sigmas_give_distinct_zeros() {
    let mut v: Vec<Complex64> = zeros().iter().map(|r| r.value).collect();
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    // sorted by real part, so a near-duplicate sits within a window of equal re
    for (i, z) in v.iter().enumerate() {
        for w in v[i + 1..].iter().take_while(|w| w.re - z.re <= 1e-9 * z.norm()) {
            assert!((w - z).norm() > 1e-9 * z.norm(), "{z} and {w}");
        }
    }
}
