//! Named invariant suites. Each returns a report of individual checks with
//! the measured value and the limit it was held to.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hadamard::{moment_sum, ClosedForm, HProduct, Variant};
use crate::series::Evaluator;
use crate::zeros::{
    doubling_witness, enumerate_simple_zeros, paris_constant, ring_occupancy, ParisConstant,
};

const PHI: f64 = 1.618_033_988_749_895;
const TWO_PHI: f64 = 3.236_067_977_499_79;

/// Measured `|S(16) − 1|` for the two moment chains, frozen with headroom
/// as regression bounds.
pub const MOMENT_REGRESSION: [(Variant, usize, f64); 2] =
    [(Variant::Sqrt2, 16, 5.0e-5), (Variant::Sqrt1, 16, 1.3e-4)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Poincare,
    Inverse,
    Representations,
    Moments,
    Multiplicity,
    Order,
    Paris,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Poincare,
        Suite::Inverse,
        Suite::Representations,
        Suite::Moments,
        Suite::Multiplicity,
        Suite::Order,
        Suite::Paris,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Poincare => "poincare",
            Suite::Inverse => "inverse",
            Suite::Representations => "representations",
            Suite::Moments => "moments",
            Suite::Multiplicity => "multiplicity",
            Suite::Order => "order",
            Suite::Paris => "paris",
        }
    }

    /// Enumeration depth used when none is given.
    pub fn default_depth(self) -> usize {
        match self {
            Suite::Representations => 12,
            Suite::Moments => 16,
            Suite::Multiplicity => 10,
            Suite::Order => 14,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One measured quantity against its limit.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub limit: f64,
    pub passed: bool,
}

impl Check {
    pub fn below(name: impl Into<String>, measured: f64, limit: f64) -> Self {
        Check {
            name: name.into(),
            measured,
            limit,
            passed: measured < limit,
        }
    }

    pub fn above(name: impl Into<String>, measured: f64, limit: f64) -> Self {
        Check {
            name: name.into(),
            measured,
            limit,
            passed: measured > limit,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub depth: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `n` points spread evenly over the disc `|z| ≤ radius` along a golden-angle
/// spiral; deterministic and free of clustering.
pub fn spiral_points(n: usize, radius: f64) -> Vec<Complex64> {
    let angle = std::f64::consts::TAU / (PHI * PHI);
    (0..n)
        .map(|k| Complex64::from_polar(radius * ((k as f64 + 0.5) / n as f64).sqrt(), k as f64 * angle))
        .collect()
}

/// Points of a `side × side` grid on `[−radius, radius]²` inside the disc.
pub fn disc_grid(side: usize, radius: f64) -> Vec<Complex64> {
    let step = 2.0 * radius / (side - 1) as f64;
    let mut out = Vec::with_capacity(side * side);
    for i in 0..side {
        for j in 0..side {
            let z = Complex64::new(-radius + i as f64 * step, -radius + j as f64 * step);
            if z.norm() <= radius {
                out.push(z);
            }
        }
    }
    out
}

/// Least-squares slope of `ln ln max_{|z|=r} |f|` against `ln r` over the
/// circles `r = (2φ)ⁿ`, `n ∈ rings`.
pub fn order_slope(ev: &Evaluator, rings: std::ops::RangeInclusive<i32>, samples: usize) -> f64 {
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for n in rings {
        let r = TWO_PHI.powi(n);
        let m = (0..samples)
            .map(|k| {
                let z = Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / samples as f64);
                ev.eval_f(z).value.norm()
            })
            .fold(0.0, f64::max);
        xs.push(r.ln());
        ys.push(m.ln().ln());
    }
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// The order `ln 2/ln(2φ)`.
pub fn order() -> f64 {
    2f64.ln() / TWO_PHI.ln()
}

fn poincare(ev: &Evaluator) -> Vec<Check> {
    let tol = ev.config().tolerance;
    let worst = disc_grid(41, TWO_PHI * TWO_PHI)
        .into_iter()
        .map(|z| ev.poincare_residual(z))
        .fold(0.0, f64::max);
    vec![Check::below("max |f(2φz) − f(z)² + 1| on 41×41 grid, |z| ≤ (2φ)²", worst, tol)]
}

fn inverse(ev: &Evaluator) -> Result<Vec<Check>> {
    let tol = ev.config().tolerance;
    let mut worst_gf = 0.0f64;
    let mut worst_chain = 0.0f64;
    for z in disc_grid(11, 1.0) {
        let w = ev.eval_f(z).value;
        let back = ev.eval_g(w)?.value;
        worst_gf = worst_gf.max((back - z).norm());
        let chain = ev.eval_g_prime(w)?.value * ev.eval_f_prime(z).value;
        worst_chain = worst_chain.max((chain - 1.0).norm());
    }
    let mut worst_fg = 0.0f64;
    for d in spiral_points(60, 0.5) {
        let w = d + PHI;
        let z = ev.eval_g(w)?.value;
        worst_fg = worst_fg.max((ev.eval_f(z).value - w).norm());
    }
    Ok(vec![
        Check::below("max |g(f(z)) − z|, |z| ≤ 1", worst_gf, tol),
        Check::below("max |f(g(w)) − w|, |w − φ| ≤ 1/2", worst_fg, tol),
        Check::below("max |g′(f(z))·f′(z) − 1|, |z| ≤ 1", worst_chain, tol),
    ])
}

fn representations(ev: &Evaluator, depth: usize) -> Result<Vec<Check>> {
    let h = HProduct::build(ev, depth)?;
    let t1 = ClosedForm::new(depth, Variant::Sqrt2);
    let rm = ClosedForm::new(depth, Variant::Sqrt1);
    let mut worst_ratio = 0.0f64;
    let mut worst_gap = 0.0f64;
    let mut ambiguous = 0usize;
    for z in spiral_points(50, 0.5) {
        let s = h.f_via_sqrt(z);
        ambiguous += s.branch_ambiguous as usize;
        let all = [
            ev.eval_f(z),
            h.f_via_h(z),
            s.estimate,
            h.f_via_wh(z, 8)?,
            t1.eval(z),
            rm.eval(z),
        ];
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                worst_gap = worst_gap.max(a.distance(b));
                worst_ratio = worst_ratio.max(a.distance(b) / (a.bound + b.bound));
            }
        }
    }
    Ok(vec![
        Check::below(
            "max pairwise |a − b|/(bound_a + bound_b), 50 points in |z| ≤ 1/2",
            worst_ratio,
            1.0,
        ),
        Check::below("max pairwise |a − b|", worst_gap, 1e-2),
        Check::below("square-root branch flags", ambiguous as f64, 0.5),
    ])
}

fn moments(depth: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let c = 1.098_641_964_394_156_7;
    let first = moment_sum(0, Variant::Sqrt2);
    out.push(Check::below("|S(0) − 1/C|", (first.value - 1.0 / c).norm(), 1e-10));
    for (variant, at, limit) in MOMENT_REGRESSION {
        let name = match variant {
            Variant::Sqrt2 => "sqrt2 moments",
            Variant::Sqrt1 => "sqrt1 moments",
        };
        let s = moment_sum(depth, variant);
        let gap = (s.value - 1.0).norm();
        out.push(Check::below(format!("{name}: |S({depth}) − 1| within tail bound"), gap, s.bound));
        if depth == at {
            out.push(Check::below(format!("{name}: |S({depth}) − 1| regression bound"), gap, limit));
        }
        // successive differences shrink geometrically
        let diffs: Vec<f64> = (depth.saturating_sub(4)..=depth)
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| (moment_sum(w[1], variant).value - moment_sum(w[0], variant).value).norm())
            .collect();
        let worst = diffs.windows(2).map(|w| w[1] / w[0]).fold(0.0, f64::max);
        out.push(Check::below(format!("{name}: max |ΔS(L+1)|/|ΔS(L)|"), worst, 0.9));
    }
    out
}

fn multiplicity(ev: &Evaluator, depth: usize) -> Result<Vec<Check>> {
    let tol = ev.config().tolerance;
    let records = enumerate_simple_zeros(ev, depth)?;
    let worst_res = records.iter().map(|r| r.residual).fold(0.0, f64::max);
    let min_der = records.iter().map(|r| r.derivative_magnitude).fold(f64::INFINITY, f64::min);
    let (mut worst_f, mut worst_fp) = (0.0f64, 0.0f64);
    for r in &records {
        let (f, fp) = doubling_witness(ev, &r.precise);
        worst_f = worst_f.max(f);
        worst_fp = worst_fp.max(fp);
    }
    Ok(vec![
        Check::below("max |f(z₀)|", worst_res, tol),
        Check::above("min |f′(z₀)|", min_der, tol),
        Check::below("max |f((2φ)²z₀)|", worst_f, tol),
        Check::below("max |f′((2φ)²z₀)|", worst_fp, tol),
    ])
}

fn growth(ev: &Evaluator, depth: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let records = enumerate_simple_zeros(ev, depth)?;
    let occ = ring_occupancy(&records);
    // rings up to depth are complete: generation g lies in rings g + 1 and g + 2
    let top = depth as i32;
    for n in (top - 4).max(1)..top {
        let a = *occ.get(&n).unwrap_or(&0) as f64;
        let b = *occ.get(&(n + 1)).unwrap_or(&0) as f64;
        let ratio = b / a;
        out.push(Check::below(format!("|#S{} / #S{} − 2|", n + 1, n), (ratio - 2.0).abs(), 0.3));
    }
    let slope = order_slope(ev, 2..=8, 2048);
    out.push(Check::below(
        "|slope/ρ − 1| for ln ln M(r) vs ln r",
        (slope / order() - 1.0).abs(),
        0.1,
    ));
    Ok(out)
}

fn paris(ev: &Evaluator) -> Result<(Vec<Check>, ParisConstant)> {
    let c = paris_constant(ev)?;
    Ok((
        vec![
            Check::below("spread of three routes", c.spread, 1e-10),
            Check::below("|C − 1.098|", (c.value - 1.098).abs(), 1e-3),
        ],
        c,
    ))
}

/// Runs one suite. `depth` overrides the suite's default enumeration depth.
pub fn run_suite(ev: &Evaluator, suite: Suite, depth: Option<usize>) -> Result<SuiteReport> {
    let depth = depth.unwrap_or_else(|| suite.default_depth());
    let checks = match suite {
        Suite::Poincare => poincare(ev),
        Suite::Inverse => inverse(ev)?,
        Suite::Representations => representations(ev, depth)?,
        Suite::Moments => moments(depth),
        Suite::Multiplicity => multiplicity(ev, depth)?,
        Suite::Order => growth(ev, depth)?,
        Suite::Paris => paris(ev)?.0,
    };
    Ok(SuiteReport {
        suite,
        depth,
        checks,
    })
}
