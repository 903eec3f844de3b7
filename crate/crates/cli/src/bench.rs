//! Operation-count benchmark: fast Pfaffian route against the minor sum.

use std::io::Write;

use cullis_core::{
    ApproxReal, CullisMethod, Domain, ExactInteger, ExactRational, IntegralDomain, Matrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::compute::minors_cost;
use crate::report::run_method;

/// Sizes with `C(n,k)·k³` above this bound skip the minor-sum method.
pub const MINORS_CAP: f64 = 1e8;

pub const CSV_HEADER: &str = "n,k,method,domain,mults,adds,median_seconds";

/// One line of the benchmark table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub method: String,
    pub domain: String,
    pub mults: u64,
    pub adds: u64,
    pub median_seconds: f64,
}

/// Parses `8x4,16x8,...`.
pub fn parse_sizes(text: &str) -> Result<Vec<(usize, usize)>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (n, k) = s
                .split_once(['x', 'X'])
                .ok_or_else(|| format!("size {s:?} is not of the form NxK"))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| format!("bad row count in {s:?}"))?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| format!("bad column count in {s:?}"))?;
            if n == 0 || k == 0 {
                return Err(format!("size {s:?} must have positive dimensions"));
            }
            Ok((n, k))
        })
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| {
            if v.is_empty() {
                Err("no sizes given".to_owned())
            } else {
                Ok(v)
            }
        })
}

pub fn random_matrix<T: IntegralDomain>(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Matrix<T> {
    Matrix::from_fn(n, k, |_, _| T::from_i64(rng.gen_range(-9..=9)))
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    }
}

fn bench_size<T: IntegralDomain>(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    repeat: usize,
) -> cullis_core::Result<Vec<BenchRow>> {
    let x: Matrix<T> = random_matrix(rng, n, k);
    let mut methods = vec![CullisMethod::FastPfaffian];
    if minors_cost(n, k) <= MINORS_CAP {
        methods.push(CullisMethod::Minors);
    }
    let mut rows = Vec::new();
    for method in methods {
        let mut times = Vec::with_capacity(repeat);
        let mut counts = None;
        for _ in 0..repeat.max(1) {
            let (result, report) = run_method(&x, method);
            result?;
            times.push(report.wall_time);
            counts.get_or_insert((report.mults, report.adds));
        }
        let (mults, adds) = counts.expect("at least one repetition");
        rows.push(BenchRow {
            n,
            k,
            method: method.name().to_owned(),
            domain: T::DOMAIN.name().to_owned(),
            mults,
            adds,
            median_seconds: median(times),
        });
    }
    Ok(rows)
}

/// Runs every size under `domain`. Matrices are drawn from a generator
/// seeded with `seed`, entries uniform in `[-9, 9]`.
pub fn run_bench(
    sizes: &[(usize, usize)],
    repeat: usize,
    domain: Domain,
    seed: u64,
) -> cullis_core::Result<Vec<BenchRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for &(n, k) in sizes {
        rows.extend(match domain {
            Domain::Int => bench_size::<ExactInteger>(&mut rng, n, k, repeat)?,
            Domain::Rational => bench_size::<ExactRational>(&mut rng, n, k, repeat)?,
            Domain::Float => bench_size::<ApproxReal>(&mut rng, n, k, repeat)?,
        });
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a table produced by [`write_csv`], checking the header.
pub fn read_csv(text: &str) -> Result<Vec<BenchRow>, String> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| e.to_string())?;
    let header: Vec<&str> = header.iter().collect();
    if header.join(",") != CSV_HEADER {
        return Err(format!("unexpected header {header:?}"));
    }
    r.deserialize()
        .collect::<Result<Vec<BenchRow>, _>>()
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_sizes("8x4, 16x8").unwrap(), vec![(8, 4), (16, 8)]);
        assert!(parse_sizes("8by4").is_err());
        assert!(parse_sizes("0x3").is_err());
        assert!(parse_sizes("").is_err());
    }

    #[test]
    fn feasibility_and_round_trip() {
        let rows = run_bench(&[(8, 4), (16, 8), (32, 16)], 3, Domain::Int, 1).unwrap();
        let methods: Vec<_> = rows.iter().map(|r| (r.n, r.method.as_str())).collect();
        assert_eq!(
            methods,
            vec![
                (8, "fast"),
                (8, "minors"),
                (16, "fast"),
                (16, "minors"),
                (32, "fast")
            ]
        );
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(CSV_HEADER));
        assert_eq!(read_csv(&text).unwrap(), rows);
    }

    #[test]
    fn median_of_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
