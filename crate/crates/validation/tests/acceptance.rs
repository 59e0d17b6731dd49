//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use golden_poincare::goldfield::QuadNum;
use golden_poincare::hadamard::{moment_sum, ClosedForm, HProduct, Variant};
use golden_poincare::series::{taylor_coeffs, EvalConfig, Evaluator};
use golden_poincare::verify::{disc_grid, order, order_slope};
use golden_poincare::zeros::{
    approx_zero_cloud, doubling_witness, enumerate_simple_zeros, paris_constant, primitive_zeros,
    ring_occupancy, PrimitivityCheck, BOUNDARY_TOL, DEFAULT_BUDGET,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TWO_PHI: f64 = 3.236_067_977_499_79;

// criterion 1
const PARIS_AGREEMENT: f64 = 1e-10;
const PARIS_QUOTED: f64 = 1.098;
// criterion 2
const GRID_SIDE: usize = 41;
const POINCARE_TOL: f64 = 1e-9;
// criterion 3
const COEFF_MAX_N: usize = 200;
// criterion 4
const PRIMITIVE_MAX_N: usize = 12;
const PRIMITIVE_TOP: f64 = 1e-9;
const PRIMITIVE_FLOOR: f64 = 1e-6;
const DISTINCT_TOL: f64 = 1e-9;
// criterion 5
const SIMPLE_DEPTH: usize = 10;
const SIMPLE_RESIDUAL: f64 = 1e-8;
const SIMPLE_DERIVATIVE: f64 = 1e-4;
const DOUBLING_TOL: f64 = 1e-6;
// criterion 6
const REPR_DEPTH: usize = 12;
const REPR_POINTS: usize = 50;
const REPR_RADIUS: f64 = 0.5;
const REPR_SEED: u64 = 0x9e37_79b9_7f4a_7c15;
const WH_TERMS: usize = 8;
// criterion 7
const MOMENT_DEPTH: usize = 16;
const MOMENT_TOL: f64 = 1e-5;
const MOMENT_FIRST_TOL: f64 = 1e-10;
// criterion 8
const OCCUPANCY_DEPTH: usize = 14;
const OCCUPANCY_RANGE: (f64, f64) = (1.7, 2.3);
const SLOPE_SAMPLES: usize = 2048;
const SLOPE_REL_TOL: f64 = 0.1;
// criterion 9
const CLOUD_N: usize = 20;
const CLOUD_N1: usize = 8;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: String) -> Self {
        Outcome { passed, detail }
    }
}

fn evaluator() -> Evaluator {
    Evaluator::new(EvalConfig::default()).expect("default config")
}

fn paris(ev: &Evaluator) -> Outcome {
    let c = match paris_constant(ev) {
        Ok(c) => c,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let routes = [c.via_g, c.via_zero, c.via_bisection];
    let spread = routes.iter().cloned().fold(f64::MIN, f64::max) - routes.iter().cloned().fold(f64::MAX, f64::min);
    let truncated = (c.value * 1000.0).floor() / 1000.0;
    let rounded = (c.value * 1000.0).round() / 1000.0;
    Outcome::new(
        spread < PARIS_AGREEMENT && (c.value - PARIS_QUOTED).abs() < 1e-3 && truncated == PARIS_QUOTED,
        format!(
            "-g(0)/2 = {:.15}, -z0(+)/2 = {:.15}, bisection = {:.15}, spread {spread:.2e} < {PARIS_AGREEMENT:e}; \
             C to 3 places: {truncated:.3} truncated, {rounded:.3} rounded",
            c.via_g, c.via_zero, c.via_bisection
        ),
    )
}

fn poincare(ev: &Evaluator) -> Outcome {
    let points = disc_grid(GRID_SIDE, TWO_PHI * TWO_PHI);
    let worst = points.iter().map(|&z| ev.poincare_residual(z)).fold(0.0, f64::max);
    Outcome::new(
        worst < POINCARE_TOL,
        format!("{} grid points, max residual {worst:.2e} < {POINCARE_TOL:e}", points.len()),
    )
}

fn coefficients() -> Outcome {
    let table = taylor_coeffs(COEFF_MAX_N);
    let one = QuadNum::one();
    let mut not_positive = Vec::new();
    let mut over_one = Vec::new();
    for n in 0..=COEFF_MAX_N {
        let d = table.derivative_at_zero(n).expect("within cutoff");
        if !d.is_positive() {
            not_positive.push(n);
        }
        if n >= 1 && d > one {
            over_one.push(n);
        }
    }
    let f0 = table.derivative_at_zero(0).expect("c0");
    Outcome::new(
        not_positive.is_empty() && over_one.is_empty(),
        format!(
            "exact in Q(sqrt5): f^(n)(0) > 0 fails at {not_positive:?} (n ≤ {COEFF_MAX_N}); \
             n!·c_n ≤ 1 fails at {over_one:?} (1 ≤ n ≤ {COEFF_MAX_N}); f(0) = {f0} lies outside the k ≥ 1 induction"
        ),
    )
}

fn primitive() -> Outcome {
    let check = PrimitivityCheck {
        top: PRIMITIVE_TOP,
        floor: PRIMITIVE_FLOOR,
    };
    let mut passed = true;
    let mut counts = Vec::new();
    let mut findings = Vec::new();
    for n in 2..=PRIMITIVE_MAX_N {
        match primitive_zeros(n, check, DISTINCT_TOL) {
            Ok(p) => {
                passed &= p.rejected.is_empty();
                counts.push(format!("{n}:{}", p.distinct));
                if p.distinct != 1 << (n - 1) {
                    findings.push(format!("n = {n}: {} distinct, 2^(n-1) = {}", p.distinct, 1usize << (n - 1)));
                }
            }
            Err(e) => {
                passed = false;
                findings.push(e.to_string());
            }
        }
    }
    Outcome::new(
        passed,
        format!(
            "|P_n(y)| < {PRIMITIVE_TOP:e}, min_k<n |P_k(y)| > {PRIMITIVE_FLOOR:e} for all addresses, 2 ≤ n ≤ {PRIMITIVE_MAX_N}; \
             distinct counts {}; count findings: {}",
            counts.join(" "),
            if findings.is_empty() { "none".to_string() } else { findings.join("; ") }
        ),
    )
}

fn simple_zeros(ev: &Evaluator) -> Outcome {
    let records = match enumerate_simple_zeros(ev, SIMPLE_DEPTH) {
        Ok(r) => r,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let max_residual = records.iter().map(|r| r.residual).fold(0.0, f64::max);
    let max_residual_f64 = records.iter().map(|r| ev.eval_f(r.value).value.norm()).fold(0.0, f64::max);
    let weakest = records
        .iter()
        .min_by(|a, b| a.derivative_magnitude.total_cmp(&b.derivative_magnitude))
        .expect("nonempty");
    let below: Vec<String> = records
        .iter()
        .filter(|r| !(r.derivative_magnitude > SIMPLE_DERIVATIVE))
        .map(|r| format!("{} ({:.3e})", r.seq, r.derivative_magnitude))
        .collect();
    let (mut dbl_f, mut dbl_fp) = (0.0f64, 0.0f64);
    for r in &records {
        let (f, fp) = doubling_witness(ev, &r.precise);
        dbl_f = dbl_f.max(f);
        dbl_fp = dbl_fp.max(fp);
    }
    let min_scaled = records
        .iter()
        .map(|r| r.derivative_magnitude * r.value.norm())
        .fold(f64::INFINITY, f64::min);
    Outcome::new(
        max_residual.max(max_residual_f64) < SIMPLE_RESIDUAL
            && below.is_empty()
            && dbl_f < DOUBLING_TOL
            && dbl_fp < DOUBLING_TOL,
        format!(
            "{} zeros; max |f(z0)| {max_residual:.2e} (double-precision point {max_residual_f64:.2e}) < {SIMPLE_RESIDUAL:e}; \
             min |f'(z0)| {:.3e} at {} (z0 = {:.6e}{:+.6e}i) vs > {SIMPLE_DERIVATIVE:e}, {} below: [{}]; \
             min |f'(z0)|·|z0| {min_scaled:.1}; at (2φ)²z0 max |f| {dbl_f:.2e}, max |f'| {dbl_fp:.2e} < {DOUBLING_TOL:e}",
            records.len(),
            weakest.derivative_magnitude,
            weakest.seq,
            weakest.value.re,
            weakest.value.im,
            below.len(),
            below.join(", ")
        ),
    )
}

fn representations(ev: &Evaluator) -> Outcome {
    let h = match HProduct::build(ev, REPR_DEPTH) {
        Ok(h) => h,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let t1 = ClosedForm::new(REPR_DEPTH, Variant::Sqrt2);
    let rm = ClosedForm::new(REPR_DEPTH, Variant::Sqrt1);
    let mut rng = ChaCha8Rng::seed_from_u64(REPR_SEED);
    let names = ["eval_f", "f_via_h", "f_via_sqrt", "f_via_wh", "sqrt2 product", "sqrt1 product"];
    let mut worst = (0.0f64, String::new());
    let mut max_bound = [0.0f64; 6];
    let mut failures = 0usize;
    for _ in 0..REPR_POINTS {
        let z = loop {
            let z = Complex64::new(rng.gen_range(-REPR_RADIUS..=REPR_RADIUS), rng.gen_range(-REPR_RADIUS..=REPR_RADIUS));
            if z.norm() <= REPR_RADIUS {
                break z;
            }
        };
        let wh = match h.f_via_wh(z, WH_TERMS) {
            Ok(e) => e,
            Err(e) => return Outcome::new(false, e.to_string()),
        };
        let all = [ev.eval_f(z), h.f_via_h(z), h.f_via_sqrt(z).estimate, wh, t1.eval(z), rm.eval(z)];
        for (i, a) in all.iter().enumerate() {
            max_bound[i] = max_bound[i].max(a.bound);
            for (j, b) in all.iter().enumerate().skip(i + 1) {
                let ratio = a.distance(b) / (a.bound + b.bound);
                if !(ratio <= 1.0) {
                    failures += 1;
                }
                if ratio > worst.0 {
                    worst = (ratio, format!("{} vs {} at {z}", names[i], names[j]));
                }
            }
        }
    }
    let bounds: Vec<String> = names.iter().zip(max_bound).map(|(n, b)| format!("{n} {b:.1e}")).collect();
    Outcome::new(
        failures == 0,
        format!(
            "L = {REPR_DEPTH}, {REPR_POINTS} points in |z| ≤ {REPR_RADIUS}; {failures} pairs outside bound_a + bound_b; \
             worst |a-b|/(bound_a+bound_b) = {:.3} ({}); max bounds: {}",
            worst.0,
            worst.1,
            bounds.join(", ")
        ),
    )
}

fn moments(ev: &Evaluator) -> Outcome {
    let c = match paris_constant(ev) {
        Ok(c) => c.value,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let s0 = moment_sum(0, Variant::Sqrt2).value;
    let first_gap = (s0 - 1.0 / c).norm();
    let mut parts = Vec::new();
    let mut passed = first_gap < MOMENT_FIRST_TOL;
    for (variant, name) in [(Variant::Sqrt2, "sqrt2 moments"), (Variant::Sqrt1, "sqrt1 moments")] {
        let reached = (0..=MOMENT_DEPTH).find(|&l| (moment_sum(l, variant).value - 1.0).norm() < MOMENT_TOL);
        let s = moment_sum(MOMENT_DEPTH, variant);
        let gap = (s.value - 1.0).norm();
        let prev = (moment_sum(MOMENT_DEPTH - 1, variant).value - 1.0).norm();
        passed &= reached.is_some();
        parts.push(format!(
            "{name}: |S({MOMENT_DEPTH}) - 1| = {gap:.3e} (tail bound {:.2e}, ratio per generation {:.3}), first L with gap < {MOMENT_TOL:e}: {}",
            s.bound,
            gap / prev,
            reached.map_or("none".to_string(), |l| l.to_string())
        ));
    }
    Outcome::new(
        passed,
        format!("L = 0 term {:.15} vs 1/C {:.15} (gap {first_gap:.1e} < {MOMENT_FIRST_TOL:e}); {}", s0.re, 1.0 / c, parts.join("; ")),
    )
}

fn growth(ev: &Evaluator) -> Outcome {
    let records = match enumerate_simple_zeros(ev, OCCUPANCY_DEPTH) {
        Ok(r) => r,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let occ = ring_occupancy(&records);
    let mut passed = true;
    let mut ratios = Vec::new();
    for n in 10..14 {
        let a = occ.get(&n).copied().unwrap_or(0) as f64;
        let b = occ.get(&(n + 1)).copied().unwrap_or(0) as f64;
        let r = b / a;
        passed &= (OCCUPANCY_RANGE.0..=OCCUPANCY_RANGE.1).contains(&r);
        ratios.push(format!("S{}/S{n} = {}/{} = {r:.3}", n + 1, b, a));
    }
    let slope = order_slope(ev, 2..=8, SLOPE_SAMPLES);
    let rho = order();
    passed &= (slope / rho - 1.0).abs() <= SLOPE_REL_TOL;
    Outcome::new(
        passed,
        format!(
            "L = {OCCUPANCY_DEPTH}: {} in [{}, {}]; slope {slope:.6} vs ln2/ln(2φ) = {rho:.6} (±{:.0}%)",
            ratios.join(", "),
            OCCUPANCY_RANGE.0,
            OCCUPANCY_RANGE.1,
            SLOPE_REL_TOL * 100.0
        ),
    )
}

fn cloud() -> Outcome {
    let points = match approx_zero_cloud(CLOUD_N, CLOUD_N1, DEFAULT_BUDGET) {
        Ok(p) => p,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let ring = (CLOUD_N - CLOUD_N1) as i32;
    let lo = TWO_PHI.powi(ring) * (1.0 - BOUNDARY_TOL);
    let hi = TWO_PHI.powi(ring + 1) * (1.0 + BOUNDARY_TOL);
    let outside = points
        .iter()
        .filter(|p| !p.in_ring(ring) || !(p.z.norm() > lo && p.z.norm() <= hi))
        .count();
    Outcome::new(
        !points.is_empty() && outside == 0,
        format!("cloud({CLOUD_N}, {CLOUD_N1}): {} points, {outside} outside ring S{ring}", points.len()),
    )
}

fn main() -> ExitCode {
    let ev = evaluator();
    let criteria: Vec<Criterion> = vec![
        ("Paris constant", Box::new(|| paris(&ev))),
        ("Poincaré residual", Box::new(|| poincare(&ev))),
        ("exact coefficients", Box::new(coefficients)),
        ("primitive zeros", Box::new(primitive)),
        ("simple zeros", Box::new(|| simple_zeros(&ev))),
        ("representation agreement", Box::new(|| representations(&ev))),
        ("moment identities", Box::new(|| moments(&ev))),
        ("growth and order", Box::new(|| growth(&ev))),
        ("zero cloud", Box::new(cloud)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        failed += !out.passed as usize;
        println!(
            "criterion {} {} {name} ({secs:.2} s): {}",
            i + 1,
            if out.passed { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
