//! Result rows and the shared CSV/JSON writer.

use std::io::{self, Write};

use clap::ValueEnum;
use golden_poincare::estimate::Estimate;
use golden_poincare::goldfield::QuadNum;
use golden_poincare::series::EvalConfig;
use golden_poincare::verify::{Check, SuiteReport};
use golden_poincare::zeros::{CloudPoint, ZeroRecord};
use num_complex::Complex64;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Pgm,
}

#[derive(Debug, Serialize)]
pub struct ConfigEcho {
    pub series_cutoff: usize,
    pub product_depth: usize,
    pub precision: u32,
    pub tolerance: f64,
    pub depth: Option<usize>,
    pub budget: String,
    pub format: Format,
}

impl ConfigEcho {
    pub fn new(cfg: &EvalConfig, depth: Option<usize>, budget: u128, format: Format) -> Self {
        ConfigEcho {
            series_cutoff: cfg.series_cutoff,
            product_depth: cfg.product_depth,
            precision: cfg.precision,
            tolerance: cfg.tolerance,
            depth,
            // u128 does not fit a JSON number
            budget: budget.to_string(),
            format,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputRecord<T> {
    pub command: Vec<String>,
    pub config: ConfigEcho,
    pub results: Vec<T>,
}

impl<T: Serialize> OutputRecord<T> {
    pub fn new(command: Vec<String>, config: ConfigEcho, results: Vec<T>) -> Self {
        OutputRecord {
            command,
            config,
            results,
        }
    }

    pub fn write(&self, out: &mut dyn Write, format: Format) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            _ => {
                let mut w = csv::Writer::from_writer(out);
                for row in &self.results {
                    w.serialize(row)?;
                }
                w.flush()
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CoeffRow {
    pub n: usize,
    pub exact: String,
    pub value: f64,
    /// Rounding error of `value`.
    pub bound: f64,
}

impl CoeffRow {
    pub fn new((n, c): (usize, &QuadNum)) -> Self {
        let value = c.to_f64();
        CoeffRow {
            n,
            exact: c.to_string(),
            value,
            bound: value.abs() * f64::EPSILON / 2.0,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EvalRow {
    pub which: &'static str,
    pub z_re: f64,
    pub z_im: f64,
    pub re: f64,
    pub im: f64,
    pub bound: f64,
}

impl EvalRow {
    pub fn new(which: &'static str, z: Complex64, est: Estimate) -> Self {
        EvalRow {
            which,
            z_re: z.re,
            z_im: z.im,
            re: est.value.re,
            im: est.value.im,
            bound: est.bound,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ZeroRow {
    pub re: f64,
    pub im: f64,
    pub ring: i32,
    pub residual: f64,
    pub fprime: f64,
    pub sigma: String,
    /// Distance to the true zero.
    pub bound: f64,
}

impl From<&ZeroRecord> for ZeroRow {
    fn from(r: &ZeroRecord) -> Self {
        ZeroRow {
            re: r.value.re,
            im: r.value.im,
            ring: r.ring,
            residual: r.residual,
            fprime: r.derivative_magnitude,
            sigma: r.seq.to_string(),
            bound: r.location_bound + r.value.norm() * f64::EPSILON,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CloudRow {
    pub re: f64,
    pub im: f64,
    pub ring: i32,
    pub address: String,
    /// Rounding estimate for `(2φ)ⁿ(y − φ)` computed in double precision.
    pub bound: f64,
}

impl CloudRow {
    pub fn new(p: &CloudPoint, n: usize) -> Self {
        let scale = (2.0 * 1.618_033_988_749_895f64).powi(n as i32);
        CloudRow {
            re: p.z.re,
            im: p.z.im,
            ring: p.ring,
            address: p.address.to_string(),
            bound: scale * 4.0 * n as f64 * f64::EPSILON,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub suite: String,
    pub depth: usize,
    pub check: String,
    pub measured: f64,
    pub limit: f64,
    pub passed: bool,
}

impl VerifyRow {
    pub fn new(report: &SuiteReport, c: &Check) -> Self {
        VerifyRow {
            suite: report.suite.to_string(),
            depth: report.depth,
            check: c.name.clone(),
            measured: c.measured,
            limit: c.limit,
            passed: c.passed,
        }
    }
}
