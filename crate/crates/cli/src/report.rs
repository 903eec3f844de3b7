use std::time::Instant;

use cullis_core::{cullis_det, measure, ApproxReal, CullisMethod, Domain, IntegralDomain, Matrix};

/// Outcome of one engine run.
#[derive(Debug, Clone)]
pub struct MethodReport {
    /// Rendered value, absent when the run failed.
    pub value: Option<String>,
    pub method: CullisMethod,
    pub scalar_domain: Domain,
    pub mults: u64,
    pub adds: u64,
    pub wall_time: f64,
}

/// Runs `method` on `x` with operation counting and timing.
pub fn run_method<T: IntegralDomain>(
    x: &Matrix<T>,
    method: CullisMethod,
) -> (cullis_core::Result<T>, MethodReport) {
    let start = Instant::now();
    let (result, counts) = measure(|| cullis_det(x, method));
    let wall_time = start.elapsed().as_secs_f64();
    let report = MethodReport {
        value: result.as_ref().ok().map(format_value),
        method: method.resolve(),
        scalar_domain: T::DOMAIN,
        mults: counts.mults,
        adds: counts.adds,
        wall_time,
    };
    (result, report)
}

/// Exact text for exact domains, 12 significant digits for floats.
pub fn format_value<T: IntegralDomain>(v: &T) -> String {
    match T::DOMAIN {
        Domain::Float => {
            let f: f64 = v.to_string().parse().expect("float display round-trips");
            format_significant(f, 12)
        }
        _ => v.to_string(),
    }
}

/// `%.{digits}g`-style rendering with trailing zeros removed.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp < -5 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_owned()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Convenience for the float domain.
pub fn format_float(v: ApproxReal) -> String {
    format_significant(v.0, 12)
}
