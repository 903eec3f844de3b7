//! Pfaffians of skew-symmetric matrices.
//!
//! Four engines compute the same value:
//!
//! * [`pfaffian_definition`]: the signed sum over perfect matchings,
//!   `(2m−1)!!` terms. Works over any commutative ring.
//! * [`pfaffian_laplace`]: recursive expansion along one column. Also
//!   exponential, also ring-generic.
//! * [`pfaffian_eliminate`]: skew-symmetric Gaussian elimination with 2×2
//!   pivot blocks over a field, `O(m³)` operations.
//! * [`pfaffian_fraction_free`]: the division-free analogue over an integral
//!   domain. After `t` pivot blocks the working entry `(i, j)` holds the
//!   Pfaffian of the principal submatrix on the first `2t` indices plus
//!   `{i, j}`, so every division by the previous block pivot is exact.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{choose_pivot, Matrix};
use crate::scalar::{Field, IntegralDomain, Ring, Tier};
use crate::signs::enumerate_matchings;

/// A square matrix that is skew-symmetric with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<T>(Matrix<T>);

impl<T: Ring> SkewMatrix<T> {
    pub fn new(inner: Matrix<T>) -> Result<Self> {
        if !inner.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(SkewMatrix(inner))
    }

    /// Wraps a matrix already known to be skew-symmetric.
    pub(crate) fn new_unchecked(inner: Matrix<T>) -> Self {
        debug_assert!(inner.is_skew_symmetric());
        SkewMatrix(inner)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn inner(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix<T> {
        self.0
    }

    fn even_half(&self) -> Result<usize> {
        let n = self.dim();
        if !n.is_multiple_of(2) {
            return Err(Error::OddDimension(n));
        }
        Ok(n / 2)
    }
}

/// `pf(X) = Σ_{π ∈ Π₂ₘ} sgn(π) Π_l x_{π(2l−1) π(2l)}`.
pub fn pfaffian_definition<T: Ring>(a: &SkewMatrix<T>) -> Result<T> {
    let m = a.even_half()?;
    let x = a.inner();
    let mut acc = T::zero();
    for matching in enumerate_matchings(m) {
        let mut pairs = matching.pairs().iter();
        let &(p, q) = pairs.next().expect("m >= 1");
        let mut term = x[(p - 1, q - 1)].clone();
        for &(p, q) in pairs {
            term = term.mul(&x[(p - 1, q - 1)]);
        }
        acc = if matching.sign() > 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    Ok(acc)
}

/// Expansion along column `pivot_col` (1-based):
/// `pf(X) = Σ_{i<j} (−1)^{i+j−1} x_ij pf(X(i,j|i,j)) + Σ_{i>j} (−1)^{i+j} x_ij pf(X(i,j|i,j))`.
/// Sub-Pfaffians expand along their first column.
pub fn pfaffian_laplace<T: Ring>(a: &SkewMatrix<T>, pivot_col: usize) -> Result<T> {
    a.even_half()?;
    let n = a.dim();
    if pivot_col == 0 || pivot_col > n {
        return Err(Error::IndexOutOfRange {
            index: pivot_col,
            bound: n,
        });
    }
    let active: Vec<usize> = (0..n).collect();
    Ok(laplace_rec(a.inner(), &active, pivot_col - 1))
}

fn laplace_rec<T: Ring>(x: &Matrix<T>, active: &[usize], pivot: usize) -> T {
    let col = active[pivot];
    if active.len() == 2 {
        let other = active[1 - pivot];
        return x[(other, col)]
            .clone()
            .scale_sign(if pivot == 0 { -1 } else { 1 });
    }
    let mut acc = T::zero();
    let j = pivot + 1;
    for (pos, &row) in active.iter().enumerate() {
        if pos == pivot {
            continue;
        }
        let entry = &x[(row, col)];
        if entry.is_zero() {
            continue;
        }
        let i = pos + 1;
        let odd = if i < j {
            (i + j - 1) % 2 == 1
        } else {
            (i + j) % 2 == 1
        };
        let rest: Vec<usize> = active
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos && p != pivot)
            .map(|(_, &v)| v)
            .collect();
        let term = entry.mul(&laplace_rec(x, &rest, 0));
        acc = if odd { acc.sub(&term) } else { acc.add(&term) };
    }
    acc
}

/// Pfaffian by skew-symmetric elimination over a field.
///
/// Exact domains pivot on the first nonzero entry of the working column;
/// approximate ones on the largest in magnitude.
pub fn pfaffian_eliminate<T: Field>(a: &SkewMatrix<T>) -> Result<T> {
    eliminate_with(a, T::inv)
}

/// Pfaffian over an integral domain using only ring operations and exact
/// divisions, `O(m³)` operations.
pub fn pfaffian_fraction_free<T: IntegralDomain>(a: &SkewMatrix<T>) -> Result<T> {
    a.even_half()?;
    let n = a.dim();
    let mut w = WorkMatrix::new(a.inner());
    let mut negate = false;
    let mut prev: Option<T> = None;
    let mut k = 0;
    loop {
        if !w.pivot_into_place(k, &mut negate) {
            return Ok(T::zero());
        }
        let pivot = w.get(k, k + 1).clone();
        if k + 2 == n {
            return Ok(if negate { pivot.scale_sign(-1) } else { pivot });
        }
        for i in k + 2..n {
            for j in i + 1..n {
                let t = pivot
                    .mul(w.get(i, j))
                    .sub(&w.get(k, i).mul(w.get(k + 1, j)))
                    .add(&w.get(k, j).mul(w.get(k + 1, i)));
                let t = match &prev {
                    None => t,
                    Some(d) => t.exact_div(d).map_err(|e| Error::FractionFreeBreakdown {
                        step: k / 2 + 1,
                        source: Box::new(e),
                    })?,
                };
                w.set_skew(i, j, t);
            }
        }
        prev = Some(pivot);
        k += 2;
    }
}

fn eliminate_with<T: Ring>(a: &SkewMatrix<T>, invert: impl Fn(&T) -> Result<T>) -> Result<T> {
    a.even_half()?;
    let n = a.dim();
    let mut w = WorkMatrix::new(a.inner());
    let mut negate = false;
    let mut result: Option<T> = None;
    let mut k = 0;
    while k < n {
        if !w.pivot_into_place(k, &mut negate) {
            return Ok(T::zero());
        }
        let pivot = w.get(k, k + 1).clone();
        if k + 2 < n {
            let inv = invert(&pivot)?;
            // Schur complement of the leading 2×2 block:
            // S_ij = a_ij + (a_{k+1,i} a_kj − a_ki a_{k+1,j}) / pivot.
            for i in k + 2..n {
                let u = w.get(k + 1, i).mul(&inv);
                let v = w.get(k, i).mul(&inv);
                for j in i + 1..n {
                    let t = w
                        .get(i, j)
                        .add(&u.mul(w.get(k, j)))
                        .sub(&v.mul(w.get(k + 1, j)));
                    w.set_skew(i, j, t);
                }
            }
        }
        result = Some(match result {
            None => pivot,
            Some(r) => r.mul(&pivot),
        });
        k += 2;
    }
    let r = result.expect("dimension >= 2");
    Ok(if negate { r.scale_sign(-1) } else { r })
}

/// Full working copy used by the elimination engines. Updates write the
/// upper entry and mirror its negation below the diagonal.
struct WorkMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Ring> WorkMatrix<T> {
    fn new(a: &Matrix<T>) -> Self {
        WorkMatrix {
            n: a.rows(),
            data: a.clone().into_data(),
        }
    }

    fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    fn set_skew(&mut self, i: usize, j: usize, v: T) {
        self.data[j * self.n + i] = v.scale_sign(-1);
        self.data[i * self.n + j] = v;
    }

    /// Brings a nonzero entry of row `k` (right of the diagonal) to
    /// position `(k, k+1)` by a symmetric swap, flipping `negate` when a swap
    /// happens. Returns `false` if the whole row is zero.
    fn pivot_into_place(&mut self, k: usize, negate: &mut bool) -> bool {
        let n = self.n;
        let Some(offset) = choose_pivot((k + 1..n).map(|j| &self.data[k * n + j])) else {
            return false;
        };
        let p = k + 1 + offset;
        if p != k + 1 {
            self.swap_index(k + 1, p);
            *negate = !*negate;
        }
        true
    }

    fn swap_index(&mut self, a: usize, b: usize) {
        let n = self.n;
        for j in 0..n {
            self.data.swap(a * n + j, b * n + j);
        }
        for i in 0..n {
            self.data.swap(i * n + a, i * n + b);
        }
    }
}

/// Pfaffian engine selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PfaffianEngine {
    /// Field elimination for field domains, fraction-free otherwise.
    Auto,
    Definition,
    Laplace,
    Eliminate,
    FractionFree,
}

impl PfaffianEngine {
    pub fn resolve<T: Ring>(self) -> PfaffianEngine {
        match self {
            PfaffianEngine::Auto if T::TIER == Tier::Field => PfaffianEngine::Eliminate,
            PfaffianEngine::Auto => PfaffianEngine::FractionFree,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PfaffianEngine::Auto => "auto",
            PfaffianEngine::Definition => "definition",
            PfaffianEngine::Laplace => "laplace",
            PfaffianEngine::Eliminate => "eliminate",
            PfaffianEngine::FractionFree => "fraction-free",
        }
    }
}

impl FromStr for PfaffianEngine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(PfaffianEngine::Auto),
            "definition" => Ok(PfaffianEngine::Definition),
            "laplace" => Ok(PfaffianEngine::Laplace),
            "eliminate" => Ok(PfaffianEngine::Eliminate),
            "fraction-free" => Ok(PfaffianEngine::FractionFree),
            other => Err(format!("unknown Pfaffian engine {other:?}")),
        }
    }
}

/// Runs the selected engine. [`PfaffianEngine::Eliminate`] needs a field
/// domain and fails with [`Error::Unsupported`] otherwise.
pub fn pfaffian_with<T: IntegralDomain>(a: &SkewMatrix<T>, engine: PfaffianEngine) -> Result<T> {
    match engine.resolve::<T>() {
        PfaffianEngine::Definition => pfaffian_definition(a),
        PfaffianEngine::Laplace => pfaffian_laplace(a, 1),
        PfaffianEngine::FractionFree => pfaffian_fraction_free(a),
        PfaffianEngine::Eliminate => {
            if T::TIER != Tier::Field {
                return Err(Error::Unsupported {
                    engine: "eliminate",
                    required: "field",
                    domain: T::DOMAIN.name(),
                });
            }
            eliminate_with(a, |p| T::one().exact_div(p))
        }
        PfaffianEngine::Auto => unreachable!("resolved above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instrument::measure;
    use crate::matrix::build_d_matrix;
    use crate::scalar::{ApproxReal, ExactInteger, ExactRational};
    use crate::signs::sgn_matrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_skew<T: Ring>(rng: &mut ChaCha8Rng, n: usize, range: i64) -> SkewMatrix<T> {
        let mut m = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-range..=range);
                m[i * n + j] = T::from_i64(v);
                m[j * n + i] = T::from_i64(-v);
            }
        }
        SkewMatrix::new(Matrix::new(n, n, m).unwrap()).unwrap()
    }

    fn int_skew(rows: &[&[i64]]) -> SkewMatrix<ExactInteger> {
        SkewMatrix::new(Matrix::from_i64_rows(rows)).unwrap()
    }

    /// Symbolic 4×4 Pfaffian, from the three matchings of Π₄.
    fn pf4(a: &Matrix<ExactInteger>) -> ExactInteger {
        let e = |i: usize, j: usize| a[(i - 1, j - 1)].clone();
        e(1, 2)
            .mul(&e(3, 4))
            .sub(&e(1, 3).mul(&e(2, 4)))
            .add(&e(1, 4).mul(&e(2, 3)))
    }

    #[test]
    fn rejects_non_skew_and_odd() {
        assert_eq!(
            SkewMatrix::new(Matrix::<ExactInteger>::from_i64_rows(&[[0, 1], [1, 0]])),
            Err(Error::NotSkewSymmetric)
        );
        let odd = SkewMatrix::new(build_d_matrix::<ExactInteger>(3)).unwrap();
        assert_eq!(pfaffian_definition(&odd), Err(Error::OddDimension(3)));
        assert_eq!(pfaffian_laplace(&odd, 1), Err(Error::OddDimension(3)));
        assert_eq!(pfaffian_fraction_free(&odd), Err(Error::OddDimension(3)));
        let odd_q = SkewMatrix::new(build_d_matrix::<ExactRational>(3)).unwrap();
        assert_eq!(pfaffian_eliminate(&odd_q), Err(Error::OddDimension(3)));
    }

    #[test]
    fn two_by_two() {
        let a = int_skew(&[&[0, 3], &[-3, 0]]);
        assert_eq!(pfaffian_definition(&a).unwrap(), ExactInteger::from_i64(3));
        assert_eq!(pfaffian_laplace(&a, 1).unwrap(), ExactInteger::from_i64(3));
        assert_eq!(pfaffian_laplace(&a, 2).unwrap(), ExactInteger::from_i64(3));
        assert_eq!(
            pfaffian_fraction_free(&a).unwrap(),
            ExactInteger::from_i64(3)
        );
        let b = int_skew(&[&[0, 5], &[-5, 0]]);
        assert_eq!(pfaffian_laplace(&b, 1).unwrap(), ExactInteger::from_i64(5));
        let q =
            SkewMatrix::new(Matrix::<ExactRational>::from_i64_rows(&[[0, -7], [7, 0]])).unwrap();
        assert_eq!(pfaffian_eliminate(&q).unwrap(), ExactRational::from_i64(-7));
        assert_eq!(
            pfaffian_laplace(&b, 3),
            Err(Error::IndexOutOfRange { index: 3, bound: 2 })
        );
    }

    #[test]
    fn zero_matrix() {
        let z = SkewMatrix::new(Matrix::<ExactInteger>::zeros(6, 6)).unwrap();
        assert!(pfaffian_definition(&z).unwrap().is_zero());
        assert!(pfaffian_fraction_free(&z).unwrap().is_zero());
        let zq = SkewMatrix::new(Matrix::<ExactRational>::zeros(6, 6)).unwrap();
        assert!(pfaffian_eliminate(&zq).unwrap().is_zero());
    }

    #[test]
    fn four_by_four_matches_symbolic_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let a = random_skew::<ExactInteger>(&mut rng, 4, 9);
            let expect = pf4(a.inner());
            assert_eq!(pfaffian_definition(&a).unwrap(), expect);
            for col in 1..=4 {
                assert_eq!(pfaffian_laplace(&a, col).unwrap(), expect);
            }
            assert_eq!(pfaffian_fraction_free(&a).unwrap(), expect);
        }
    }

    #[test]
    fn rank_two_is_zero() {
        // u vᵗ − v uᵗ has rank 2.
        let u = [1i64, 2, -1, 3];
        let v = [0i64, 1, 4, -2];
        let m = Matrix::<ExactRational>::from_fn(4, 4, |i, j| {
            ExactRational::from_i64(u[i] * v[j] - v[i] * u[j])
        });
        let a = SkewMatrix::new(m).unwrap();
        assert!(pfaffian_eliminate(&a).unwrap().is_zero());
        assert!(pfaffian_definition(&a).unwrap().is_zero());
    }

    #[test]
    fn sign_matrix_of_identity_order_has_unit_pfaffian() {
        for m in 1..=5 {
            let g = SkewMatrix::new(sgn_matrix::<ExactInteger>(&(1..=2 * m).collect::<Vec<_>>()))
                .unwrap();
            assert_eq!(pfaffian_laplace(&g, 1).unwrap(), ExactInteger::one());
            assert_eq!(pfaffian_fraction_free(&g).unwrap(), ExactInteger::one());
        }
    }

    #[test]
    fn engines_agree_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xfaff);
        for _ in 0..500 {
            let n = 2 * rng.gen_range(1..=4);
            let a = random_skew::<ExactInteger>(&mut rng, n, 9);
            let expect = pfaffian_definition(&a).unwrap();
            assert_eq!(pfaffian_laplace(&a, rng.gen_range(1..=n)).unwrap(), expect);
            assert_eq!(pfaffian_fraction_free(&a).unwrap(), expect);
            let q = SkewMatrix::new(a.inner().map(|v| ExactRational::from(v.clone()))).unwrap();
            assert_eq!(pfaffian_eliminate(&q).unwrap(), ExactRational::from(expect));
        }
    }

    #[test]
    fn sparse_inputs_exercise_pivoting() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..300 {
            let n = 2 * rng.gen_range(1..=4);
            let mut a = random_skew::<ExactInteger>(&mut rng, n, 2)
                .into_inner()
                .into_data();
            // Zero out most entries so pivots are frequently missing.
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.6) {
                        a[i * n + j] = ExactInteger::zero();
                        a[j * n + i] = ExactInteger::zero();
                    }
                }
            }
            let a = SkewMatrix::new(Matrix::new(n, n, a).unwrap()).unwrap();
            let expect = pfaffian_definition(&a).unwrap();
            assert_eq!(pfaffian_fraction_free(&a).unwrap(), expect);
            let q = SkewMatrix::new(a.inner().map(|v| ExactRational::from(v.clone()))).unwrap();
            assert_eq!(pfaffian_eliminate(&q).unwrap(), ExactRational::from(expect));
        }
    }

    #[test]
    fn float_elimination_uses_partial_pivoting() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = random_skew::<ExactInteger>(&mut rng, 8, 9);
            let expect = pfaffian_definition(&a).unwrap();
            let f = SkewMatrix::new(
                a.inner()
                    .map(|v| ApproxReal(v.0.to_string().parse().unwrap())),
            )
            .unwrap();
            let got = pfaffian_eliminate(&f).unwrap();
            let want = ApproxReal(expect.0.to_string().parse().unwrap());
            assert!(got.approx_eq(&want), "{got} vs {want}");
        }
    }

    #[test]
    fn congruence_by_d_matches_laplace() {
        let mut rng = ChaCha8Rng::seed_from_u64(74);
        for _ in 0..50 {
            let x = Matrix::<ExactInteger>::from_fn(7, 4, |_, _| {
                ExactInteger::from_i64(rng.gen_range(-9..=9))
            });
            let y = SkewMatrix::new(x.skew_congruence(&build_d_matrix(7)).unwrap()).unwrap();
            assert_eq!(
                pfaffian_fraction_free(&y).unwrap(),
                pfaffian_laplace(&y, 1).unwrap()
            );
        }
    }

    #[test]
    fn eight_by_eight_integer_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let a = random_skew::<ExactInteger>(&mut rng, 8, 1000);
            assert_eq!(
                pfaffian_fraction_free(&a).unwrap(),
                pfaffian_definition(&a).unwrap()
            );
        }
    }

    #[test]
    fn engine_selection() {
        assert_eq!(
            PfaffianEngine::Auto.resolve::<ExactInteger>(),
            PfaffianEngine::FractionFree
        );
        assert_eq!(
            PfaffianEngine::Auto.resolve::<ExactRational>(),
            PfaffianEngine::Eliminate
        );
        assert_eq!(
            PfaffianEngine::Auto.resolve::<ApproxReal>(),
            PfaffianEngine::Eliminate
        );
        let a = int_skew(&[&[0, 3], &[-3, 0]]);
        assert!(matches!(
            pfaffian_with(&a, PfaffianEngine::Eliminate),
            Err(Error::Unsupported { .. })
        ));
        for engine in ["definition", "laplace", "fraction-free", "auto"] {
            let e: PfaffianEngine = engine.parse().unwrap();
            assert_eq!(pfaffian_with(&a, e).unwrap(), ExactInteger::from_i64(3));
        }
    }

    #[test]
    fn fraction_free_count_scales_cubically() {
        let mut rng = ChaCha8Rng::seed_from_u64(3232);
        let mut mults = |n| {
            let a = random_skew::<ExactInteger>(&mut rng, n, 9);
            measure(|| pfaffian_fraction_free(&a).unwrap()).1.mults
        };
        for m in [32usize, 64] {
            let small = mults(m);
            let large = mults(2 * m);
            let ratio = large as f64 / small as f64;
            assert!(
                (6.0..=10.0).contains(&ratio),
                "m={m}: {large}/{small} = {ratio}"
            );
        }
    }
}
