//! Cullis determinants of rectangular matrices.
//!
//! For an `n×k` matrix with `n ≥ k`,
//!
//! ```text
//! det_{n k}(X) = (−1)^{1+…+k} Σ_{c₁<…<c_k} (−1)^{c₁+…+c_k} det X[c|·]
//! ```
//!
//! and `det_{n k}(X) = det_{k n}(Xᵗ)` when `n < k`. Three oracle engines
//! evaluate this by brute force; [`cullis_fast`] reduces it to a single
//! Pfaffian of a `(k or k+1)`-dimensional skew matrix in `O(n³)` operations.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{build_d_matrix, Matrix};
use crate::pfaffian::{pfaffian_with, PfaffianEngine, SkewMatrix};
use crate::scalar::{IntegralDomain, Ring};

/// Which engine computes a Cullis determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CullisMethod {
    Minors,
    Injections,
    LaplaceColumn,
    FastPfaffian,
    /// Same as [`CullisMethod::FastPfaffian`].
    Auto,
}

impl CullisMethod {
    pub fn resolve(self) -> CullisMethod {
        match self {
            CullisMethod::Auto => CullisMethod::FastPfaffian,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CullisMethod::Minors => "minors",
            CullisMethod::Injections => "injections",
            CullisMethod::LaplaceColumn => "laplace",
            CullisMethod::FastPfaffian => "fast",
            CullisMethod::Auto => "auto",
        }
    }
}

impl FromStr for CullisMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "minors" => Ok(CullisMethod::Minors),
            "injections" => Ok(CullisMethod::Injections),
            "laplace" => Ok(CullisMethod::LaplaceColumn),
            "fast" => Ok(CullisMethod::FastPfaffian),
            "auto" => Ok(CullisMethod::Auto),
            other => Err(format!(
                "unknown method {other:?} (expected fast, minors, injections, laplace or auto)"
            )),
        }
    }
}

/// `(−1)^{1+2+…+k}`, via the parity of `k(k+1)/2`.
pub fn triangular_sign(k: usize) -> i32 {
    if (k * (k + 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Alternating sum of all maximal minors, each by fraction-free
/// elimination. `Θ(C(n,k)·k³)` operations; accepts any shape.
pub fn cullis_minors<T: IntegralDomain>(x: &Matrix<T>) -> Result<T> {
    if x.rows() < x.cols() {
        return cullis_minors(&x.transpose());
    }
    let (n, k) = x.shape();
    let all_cols: Vec<usize> = (1..=k).collect();
    let mut rows: Vec<usize> = (1..=k).collect();
    let mut acc = T::zero();
    loop {
        let minor = x.submatrix_select(&rows, &all_cols)?.determinant()?;
        let row_sum: usize = rows.iter().sum();
        acc = if row_sum.is_multiple_of(2) {
            acc.add(&minor)
        } else {
            acc.sub(&minor)
        };
        // Next k-subset of [n] in lexicographic order.
        let Some(pos) = (0..k).rev().find(|&p| rows[p] < n - (k - 1 - p)) else {
            break;
        };
        rows[pos] += 1;
        for q in pos + 1..k {
            rows[q] = rows[q - 1] + 1;
        }
    }
    Ok(acc.scale_sign(triangular_sign(k)))
}

/// Sum over injections `σ: [k] → [n]` of `sgn_{n k}(σ) · Π_α x_{σ(α) α}`.
/// `Θ(n!/(n−k)! · k)` operations. Transposes first when `n < k`.
pub fn cullis_injections<T: Ring>(x: &Matrix<T>) -> T {
    if x.rows() < x.cols() {
        return cullis_injections(&x.transpose());
    }
    let mut used = vec![false; x.rows()];
    let mut chosen = Vec::with_capacity(x.cols());
    let mut acc = T::zero();
    injections_rec(x, &mut used, &mut chosen, None, false, &mut acc);
    acc
}

/// Depth-first walk over injections. `odd` tracks the parity of
/// `Σ (σ(α) − α)` plus the inversion count of the chosen prefix.
fn injections_rec<T: Ring>(
    x: &Matrix<T>,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    partial: Option<&T>,
    odd: bool,
    acc: &mut T,
) {
    let alpha = chosen.len();
    if alpha == x.cols() {
        let term = partial.expect("k >= 1");
        *acc = if odd { acc.sub(term) } else { acc.add(term) };
        return;
    }
    for row in 0..x.rows() {
        if used[row] {
            continue;
        }
        let entry = &x[(row, alpha)];
        if entry.is_zero() {
            continue;
        }
        let inversions = chosen.iter().filter(|&&c| c > row).count();
        // σ(α) − α has the parity of row − alpha in 0-based terms.
        let flip = (row + alpha + inversions) % 2 == 1;
        let next = match partial {
            None => entry.clone(),
            Some(p) => p.mul(entry),
        };
        used[row] = true;
        chosen.push(row);
        injections_rec(x, used, chosen, Some(&next), odd ^ flip, acc);
        chosen.pop();
        used[row] = false;
    }
}

/// Laplace expansion along column `col` (1-based), recursing on
/// `det_{(n−1)(k−1)}(X(i|col))` along the first column. For `k = 1` this is
/// `Σ_i (−1)^{i+1} x_{i1}`. When `n < k` the expansion runs on `Xᵗ`, so
/// `col` then names a column of the transpose.
pub fn cullis_laplace_column<T: Ring>(x: &Matrix<T>, col: usize) -> Result<T> {
    if x.rows() < x.cols() {
        return cullis_laplace_column(&x.transpose(), col);
    }
    if col == 0 || col > x.cols() {
        return Err(Error::IndexOutOfRange {
            index: col,
            bound: x.cols(),
        });
    }
    let rows: Vec<usize> = (0..x.rows()).collect();
    let cols: Vec<usize> = (0..x.cols()).collect();
    Ok(laplace_rec(x, &rows, &cols, col - 1))
}

fn laplace_rec<T: Ring>(x: &Matrix<T>, rows: &[usize], cols: &[usize], pivot: usize) -> T {
    let c = cols[pivot];
    if cols.len() == 1 {
        let mut acc = T::zero();
        for (pos, &r) in rows.iter().enumerate() {
            acc = if pos % 2 == 0 {
                acc.add(&x[(r, c)])
            } else {
                acc.sub(&x[(r, c)])
            };
        }
        return acc;
    }
    let rest_cols: Vec<usize> = cols
        .iter()
        .enumerate()
        .filter(|&(p, _)| p != pivot)
        .map(|(_, &v)| v)
        .collect();
    let mut acc = T::zero();
    for (pos, &r) in rows.iter().enumerate() {
        let entry = &x[(r, c)];
        if entry.is_zero() {
            continue;
        }
        let rest_rows: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &v)| v)
            .collect();
        let term = entry.mul(&laplace_rec(x, &rest_rows, &rest_cols, 0));
        acc = if (pos + pivot).is_multiple_of(2) {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// The skew matrix whose Pfaffian gives `det_{n k}(x)` (for `n ≥ k`),
/// together with the sign prefactor:
///
/// * `k` even: `Xᵗ D⁽ⁿ⁾ X`, sign `(−1)^{1+…+k}`;
/// * `k` odd, `n` even: `X'ᵗ D⁽ⁿ⁾ X'`, sign `(−1)^{1+…+(k+1)}`;
/// * `k` odd, `n` odd: `X''ᵗ D⁽ⁿ⁺¹⁾ X''`, sign `(−1)^{1+…+(k+1)}`.
pub fn pfaffian_reduction<T: Ring>(x: &Matrix<T>) -> Result<(i32, SkewMatrix<T>)> {
    let (n, k) = x.shape();
    if n < k {
        return Err(Error::TooFewRows { rows: n, cols: k });
    }
    let (sign, y) = if k % 2 == 0 {
        (triangular_sign(k), x.skew_congruence(&build_d_matrix(n))?)
    } else if n % 2 == 0 {
        let xp = x.augment_ones_column();
        (
            triangular_sign(k + 1),
            xp.skew_congruence(&build_d_matrix(n))?,
        )
    } else {
        let xpp = x.augment_ones_and_zero_row();
        (
            triangular_sign(k + 1),
            xpp.skew_congruence(&build_d_matrix(n + 1))?,
        )
    };
    Ok((sign, SkewMatrix::new_unchecked(y)))
}

/// `det_{n k}(x)` through a caller-supplied Pfaffian routine. Works over
/// any commutative ring.
pub fn cullis_fast_with<T: Ring>(
    x: &Matrix<T>,
    pfaffian: impl Fn(&SkewMatrix<T>) -> Result<T>,
) -> Result<T> {
    if x.rows() < x.cols() {
        return cullis_fast_with(&x.transpose(), pfaffian);
    }
    let (sign, y) = pfaffian_reduction(x)?;
    Ok(pfaffian(&y)?.scale_sign(sign))
}

/// `det_{n k}(x)` in `O(n³)` operations via one Pfaffian.
///
/// ```
/// use cullis_core::{cullis_fast, ExactInteger, Matrix, PfaffianEngine};
/// let x = Matrix::<ExactInteger>::from_i64_rows(&[[1], [2], [3]]);
/// assert_eq!(cullis_fast(&x, PfaffianEngine::Auto).unwrap(), ExactInteger::from(2));
/// ```
pub fn cullis_fast<T: IntegralDomain>(x: &Matrix<T>, engine: PfaffianEngine) -> Result<T> {
    cullis_fast_with(x, |y| pfaffian_with(y, engine))
}

/// Dispatches to the engine named by `method`.
pub fn cullis_det<T: IntegralDomain>(x: &Matrix<T>, method: CullisMethod) -> Result<T> {
    match method.resolve() {
        CullisMethod::Minors => cullis_minors(x),
        CullisMethod::Injections => Ok(cullis_injections(x)),
        CullisMethod::LaplaceColumn => cullis_laplace_column(x, 1),
        CullisMethod::FastPfaffian => cullis_fast(x, PfaffianEngine::Auto),
        CullisMethod::Auto => unreachable!("resolved above"),
    }
}

/// Checks, by the minor sum, that appending a column of ones gives
/// `det_{n,k+1}(X') = det_{n k}(X)` when `n + k` is odd and `0` when it is
/// even. Requires `n > k`.
pub fn append_ones_column_identity_check<T: IntegralDomain>(x: &Matrix<T>) -> Result<bool> {
    let (n, k) = x.shape();
    if n <= k {
        return Err(Error::NotTall { rows: n, cols: k });
    }
    let augmented = cullis_minors(&x.augment_ones_column())?;
    let expect = if (n + k) % 2 == 1 {
        cullis_minors(x)?
    } else {
        T::zero()
    };
    Ok(augmented.approx_eq(&expect))
}

/// Checks, by the minor sum, that appending a zero row leaves the Cullis
/// determinant unchanged. Requires `n ≥ k`.
pub fn append_zero_row_identity_check<T: IntegralDomain>(x: &Matrix<T>) -> Result<bool> {
    let (n, k) = x.shape();
    if n < k {
        return Err(Error::TooFewRows { rows: n, cols: k });
    }
    let padded = Matrix::from_fn(
        n + 1,
        k,
        |i, j| {
            if i < n {
                x[(i, j)].clone()
            } else {
                T::zero()
            }
        },
    );
    Ok(cullis_minors(&padded)?.approx_eq(&cullis_minors(x)?))
}
