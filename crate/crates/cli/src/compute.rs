use cullis_core::{cullis_minors, CullisMethod, IntegralDomain, Matrix};

use crate::input::AnyMatrix;
use crate::report::{format_value, run_method, MethodReport};

/// Default bound on `C(n,k)·k³` for running the minor-sum check.
pub const DEFAULT_VERIFY_CAP: f64 = 1e7;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Clone, Copy)]
pub struct ComputeOptions {
    pub method: CullisMethod,
    pub verify: bool,
    pub verify_cap: f64,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            method: CullisMethod::Auto,
            verify: false,
            verify_cap: DEFAULT_VERIFY_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComputeOutput {
    pub stdout: String,
    pub exit_code: u8,
    pub report: MethodReport,
}

/// Estimated cost `C(n,k)·k³` of the minor-sum oracle, with `n ≥ k` after
/// orienting the shape.
pub fn minors_cost(n: usize, k: usize) -> f64 {
    let (n, k) = if n >= k { (n, k) } else { (k, n) };
    let mut binom = 1.0f64;
    for i in 0..k {
        binom = binom * (n - i) as f64 / (i + 1) as f64;
    }
    binom * (k as f64).powi(3)
}

pub fn compute(matrix: &AnyMatrix, opts: &ComputeOptions) -> cullis_core::Result<ComputeOutput> {
    match matrix {
        AnyMatrix::Int(m) => compute_typed(m, opts),
        AnyMatrix::Rational(m) => compute_typed(m, opts),
        AnyMatrix::Float(m) => compute_typed(m, opts),
    }
}

fn compute_typed<T: IntegralDomain>(
    x: &Matrix<T>,
    opts: &ComputeOptions,
) -> cullis_core::Result<ComputeOutput> {
    let (result, report) = run_method(x, opts.method);
    let value = result?;
    let mut stdout = format_value(&value);
    stdout.push('\n');
    let mut exit_code = EXIT_OK;
    if opts.verify {
        let (n, k) = x.shape();
        let cost = minors_cost(n, k);
        if cost <= opts.verify_cap {
            let reference = cullis_minors(x)?;
            if reference.approx_eq(&value) {
                stdout.push_str("VERIFY: MATCH\n");
            } else {
                stdout.push_str(&format!(
                    "VERIFY: MISMATCH (minors = {})\n",
                    format_value(&reference)
                ));
                exit_code = EXIT_MISMATCH;
            }
        } else {
            stdout.push_str(&format!(
                "VERIFY: SKIPPED (minor-sum cost {cost:.3e} exceeds cap {:.3e})\n",
                opts.verify_cap
            ));
        }
    }
    Ok(ComputeOutput {
        stdout,
        exit_code,
        report,
    })
}
