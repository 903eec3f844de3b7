//! Named identity suites executed by `cullis selftest`.
//!
//! Each suite draws from a generator seeded by the caller and reports either
//! the number of cases checked or the first counterexample.

use cullis_core::{
    append_ones_column_identity_check, append_zero_row_identity_check, build_d_matrix, cullis_fast,
    cullis_injections, cullis_laplace_column, cullis_minors, enumerate_matchings,
    matching_sum_sign, permutation_matrix, pfaffian_definition, pfaffian_eliminate,
    pfaffian_fraction_free, pfaffian_laplace, sgn_matrix, tuple_sign, ExactInteger, ExactRational,
    Matrix, Permutation, PfaffianEngine, Ring, SkewMatrix,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type IMat = Matrix<ExactInteger>;
type Outcome = Result<usize, String>;

pub struct Ctx {
    rng: ChaCha8Rng,
    /// Largest row/column count used by any sweep.
    cap: usize,
}

impl Ctx {
    pub fn new(seed: u64, cap: usize) -> Self {
        Ctx {
            rng: ChaCha8Rng::seed_from_u64(seed),
            cap: cap.max(1),
        }
    }

    fn int_matrix(&mut self, n: usize, k: usize) -> IMat {
        Matrix::from_fn(n, k, |_, _| {
            ExactInteger::from_i64(self.rng.gen_range(-9..=9))
        })
    }

    fn skew<T: Ring>(&mut self, n: usize) -> SkewMatrix<T> {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = self.rng.gen_range(-9..=9);
                data[i * n + j] = T::from_i64(v);
                data[j * n + i] = T::from_i64(-v);
            }
        }
        SkewMatrix::new(Matrix::new(n, n, data).expect("square")).expect("skew by construction")
    }

    fn permutation(&mut self, n: usize) -> Permutation {
        let mut v: Vec<usize> = (1..=n).collect();
        v.shuffle(&mut self.rng);
        Permutation::new(v).expect("shuffle of 1..=n")
    }

    /// A random tall shape `n ≥ k` with `n ≤ max_n`, `k ≤ max_k`.
    fn tall_shape(&mut self, max_n: usize, max_k: usize) -> (usize, usize) {
        let n = self.rng.gen_range(1..=max_n.min(self.cap));
        let k = self.rng.gen_range(1..=n.min(max_k));
        (n, k)
    }

    fn even_dims(&self, max: usize) -> impl Iterator<Item = usize> {
        (2..=max.min(self.cap.max(2))).step_by(2)
    }
}

pub struct Suite {
    pub name: &'static str,
    pub run: fn(&mut Ctx) -> Outcome,
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fmt_tuple(c: &[usize]) -> String {
    format!("{c:?}")
}

fn all_tuples(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (1..=max).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn to_rational(x: &IMat) -> Matrix<ExactRational> {
    x.map(|v| ExactRational::from(v.clone()))
}

fn replace_column(x: &IMat, col: usize, v: &[ExactInteger]) -> IMat {
    Matrix::from_fn(x.rows(), x.cols(), |i, j| {
        if j == col {
            v[i].clone()
        } else {
            x[(i, j)].clone()
        }
    })
}

fn fast(x: &IMat) -> Result<ExactInteger, String> {
    cullis_fast(x, PfaffianEngine::Auto).map_err(|e| e.to_string())
}

fn minors(x: &IMat) -> Result<ExactInteger, String> {
    cullis_minors(x).map_err(|e| e.to_string())
}

fn tuple_sign_permutation_rule(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..200 {
        let n = ctx.rng.gen_range(1..=ctx.cap.max(2));
        let p = ctx.permutation(n);
        let c: Vec<usize> = (0..n).map(|_| ctx.rng.gen_range(1..=9)).collect();
        let lhs = tuple_sign(&p.permute(&c));
        let rhs = p.sign() * tuple_sign(&c);
        check(lhs == rhs, || {
            format!("π={:?}, c={}", p.as_slice(), fmt_tuple(&c))
        })?;
        cases += 1;
    }
    Ok(cases)
}

fn pfaffian_of_sign_matrix(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for len in ctx.even_dims(6) {
        for c in all_tuples(len, 6) {
            let s = SkewMatrix::new(sgn_matrix::<ExactInteger>(&c)).map_err(|e| e.to_string())?;
            let pf = pfaffian_definition(&s).map_err(|e| e.to_string())?;
            let want = ExactInteger::from_i64(tuple_sign(&c).into());
            check(pf == want, || format!("c={}: pf={pf}", fmt_tuple(&c)))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn matching_sum_identity(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for len in ctx.even_dims(6) {
        for c in all_tuples(len, 6) {
            let sum = matching_sum_sign(&c).map_err(|e| e.to_string())?;
            check(sum == i64::from(tuple_sign(&c)), || {
                format!("c={}: sum={sum}", fmt_tuple(&c))
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn matching_enumeration(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for m in 1..=6.min(ctx.cap) {
        let expect: usize = (1..=m).map(|i| 2 * i - 1).product();
        let all: Vec<_> = enumerate_matchings(m).collect();
        check(all.len() == expect, || {
            format!("m={m}: {} matchings", all.len())
        })?;
        for mt in &all {
            check(mt.sign() == tuple_sign(&mt.flattened()), || {
                format!("sign of {:?}", mt.pairs())
            })?;
        }
        cases += all.len();
    }
    Ok(cases)
}

fn permutation_matrix_determinant(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for n in 1..=6.min(ctx.cap) {
        for p in Permutation::all(n) {
            let det = permutation_matrix::<ExactInteger>(&p)
                .determinant()
                .map_err(|e| e.to_string())?;
            check(det == ExactInteger::from_i64(p.sign().into()), || {
                format!("π={:?}: det={det}", p.as_slice())
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn permutation_conjugation(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..200 {
        let n = ctx.rng.gen_range(1..=6.min(ctx.cap));
        let p = ctx.permutation(n);
        let a = ctx.int_matrix(n, n);
        let pm = permutation_matrix::<ExactInteger>(&p);
        let conj = pm
            .multiply(&a)
            .and_then(|m| m.multiply(&pm.transpose()))
            .map_err(|e| e.to_string())?;
        let want = Matrix::from_fn(n, n, |k, l| {
            a[(p.image(k + 1) - 1, p.image(l + 1) - 1)].clone()
        });
        check(conj == want, || format!("π={:?}", p.as_slice()))?;

        let c: Vec<usize> = (0..n).map(|_| ctx.rng.gen_range(1..=6)).collect();
        let conj_sgn = pm
            .multiply(&sgn_matrix(&c))
            .and_then(|m| m.multiply(&pm.transpose()))
            .map_err(|e| e.to_string())?;
        check(conj_sgn == sgn_matrix(&p.permute(&c)), || {
            format!("SGN conjugation: π={:?}, c={}", p.as_slice(), fmt_tuple(&c))
        })?;
        cases += 1;
    }
    Ok(cases)
}

fn pfaffian_squared_is_determinant(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..200 {
        let dims: Vec<usize> = ctx.even_dims(8).collect();
        let n = *dims.choose(&mut ctx.rng).expect("at least 2");
        let a = ctx.skew::<ExactRational>(n);
        let pf = pfaffian_eliminate(&a).map_err(|e| e.to_string())?;
        let det = a.inner().determinant().map_err(|e| e.to_string())?;
        check(pf.mul(&pf) == det, || {
            format!("dim {n}: pf={pf}, det={det}")
        })?;
        cases += 1;
    }
    Ok(cases)
}

fn pfaffian_congruence_rule(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..200 {
        let dims: Vec<usize> = ctx.even_dims(6).collect();
        let n = *dims.choose(&mut ctx.rng).expect("at least 2");
        let a = ctx.skew::<ExactRational>(n);
        let b = Matrix::<ExactRational>::from_fn(n, n, |_, _| {
            ExactRational::new(ctx.rng.gen_range(-9..=9), ctx.rng.gen_range(1..=4))
                .expect("nonzero")
        });
        let bab = b
            .multiply(a.inner())
            .and_then(|m| m.multiply(&b.transpose()))
            .map_err(|e| e.to_string())?;
        let bab = SkewMatrix::new(bab).map_err(|e| e.to_string())?;
        let lhs = pfaffian_definition(&bab).map_err(|e| e.to_string())?;
        let det_b = b.determinant().map_err(|e| e.to_string())?;
        let rhs = det_b.mul(&pfaffian_definition(&a).map_err(|e| e.to_string())?);
        check(lhs == rhs, || format!("dim {n}: {lhs} vs {rhs}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn unit_pfaffian_of_ordered_signs(_ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for n in (2..=10).step_by(2) {
        let g = SkewMatrix::new(sgn_matrix::<ExactInteger>(&(1..=n).collect::<Vec<_>>()))
            .map_err(|e| e.to_string())?;
        for pf in [
            pfaffian_laplace(&g, 1),
            pfaffian_fraction_free(&g),
            pfaffian_definition(&g),
        ] {
            let pf = pf.map_err(|e| e.to_string())?;
            check(pf == ExactInteger::one(), || format!("dim {n}: pf={pf}"))?;
        }
        cases += 1;
    }
    Ok(cases)
}

fn pfaffian_column_expansion(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..100 {
        let dims: Vec<usize> = ctx.even_dims(6).collect();
        let n = *dims.choose(&mut ctx.rng).expect("at least 2");
        let a = ctx.skew::<ExactInteger>(n);
        let want = pfaffian_definition(&a).map_err(|e| e.to_string())?;
        for col in 1..=n {
            let got = pfaffian_laplace(&a, col).map_err(|e| e.to_string())?;
            check(got == want, || {
                format!("dim {n}, column {col}: {got} vs {want}")
            })?;
        }
        cases += 1;
    }
    Ok(cases)
}

fn pfaffian_engines_agree(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..500 {
        let dims: Vec<usize> = ctx.even_dims(8).collect();
        let n = *dims.choose(&mut ctx.rng).expect("at least 2");
        let a = ctx.skew::<ExactInteger>(n);
        let want = pfaffian_definition(&a).map_err(|e| e.to_string())?;
        let laplace = pfaffian_laplace(&a, 1).map_err(|e| e.to_string())?;
        let ff = pfaffian_fraction_free(&a).map_err(|e| e.to_string())?;
        let q = SkewMatrix::new(a.inner().map(|v| ExactRational::from(v.clone())))
            .map_err(|e| e.to_string())?;
        let elim = pfaffian_eliminate(&q).map_err(|e| e.to_string())?;
        check(
            laplace == want && ff == want && elim == ExactRational::from(want.clone()),
            || {
                format!("dim {n}: definition {want}, laplace {laplace}, fraction-free {ff}, eliminate {elim}")
            },
        )?;
        cases += 1;
    }
    Ok(cases)
}

fn injection_sum_formula(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..200 {
        let (n, k) = ctx.tall_shape(7, 7);
        let x = ctx.int_matrix(n, k);
        let inj = cullis_injections(&x);
        let want = minors(&x)?;
        check(inj == want, || format!("{n}x{k}: {inj} vs {want}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn theorem_agreement_sweep(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for n in 1..=7.min(ctx.cap) {
        for k in 1..=n {
            for _ in 0..200 {
                let x = ctx.int_matrix(n, k);
                let want = minors(&x)?;
                let f = fast(&x)?;
                let inj = cullis_injections(&x);
                let lap = cullis_laplace_column(&x, 1).map_err(|e| e.to_string())?;
                check(f == want && inj == want && lap == want, || {
                    format!("{n}x{k}: minors {want}, fast {f}, injections {inj}, laplace {lap}")
                })?;
                if n != k {
                    let xt = x.transpose();
                    let ft = fast(&xt)?;
                    let mt = minors(&xt)?;
                    check(ft == want && mt == want, || {
                        format!("{k}x{n} transpose: fast {ft}, minors {mt}, expected {want}")
                    })?;
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn multilinearity(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..100 {
        let (n, k) = ctx.tall_shape(6, 4);
        let x = ctx.int_matrix(n, k);
        let col = ctx.rng.gen_range(0..k);
        let u = ctx.int_matrix(n, 1).column(0);
        let v = ctx.int_matrix(n, 1).column(0);
        let alpha = ExactInteger::from_i64(ctx.rng.gen_range(-5..=5));
        let beta = ExactInteger::from_i64(ctx.rng.gen_range(-5..=5));
        let mixed: Vec<_> = u
            .iter()
            .zip(&v)
            .map(|(a, b)| alpha.mul(a).add(&beta.mul(b)))
            .collect();
        let lhs = fast(&replace_column(&x, col, &mixed))?;
        let rhs = alpha
            .mul(&fast(&replace_column(&x, col, &u))?)
            .add(&beta.mul(&fast(&replace_column(&x, col, &v))?));
        check(lhs == rhs, || format!("{n}x{k}, column {}", col + 1))?;
        cases += 1;
    }
    Ok(cases)
}

fn dependent_columns_vanish(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..100 {
        let n = ctx.rng.gen_range(2..=6.min(ctx.cap.max(2)));
        let k = ctx.rng.gen_range(2..=n.min(4));
        let x = ctx.int_matrix(n, k);
        let (a, b) = (0, ctx.rng.gen_range(1..k));
        let dup = replace_column(&x, b, &x.column(a));
        let d = fast(&dup)?;
        check(d.is_zero(), || format!("{n}x{k} duplicate column: {d}"))?;

        // Last column as an integer combination of the others.
        let combo: Vec<ExactInteger> = (0..n)
            .map(|i| {
                (0..k - 1).fold(ExactInteger::zero(), |acc, j| {
                    acc.add(&x[(i, j)].mul(&ExactInteger::from_i64((j as i64 % 3) - 1)))
                })
            })
            .collect();
        let dep = replace_column(&x, k - 1, &combo);
        let d = fast(&dep)?;
        check(d.is_zero(), || format!("{n}x{k} dependent column: {d}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn column_swap_negates(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..100 {
        let n = ctx.rng.gen_range(2..=6.min(ctx.cap.max(2)));
        let k = ctx.rng.gen_range(2..=n.min(5));
        let x = ctx.int_matrix(n, k);
        let a = ctx.rng.gen_range(0..k);
        let b = (a + ctx.rng.gen_range(1..k)) % k;
        let d = fast(&x)?;
        let s = fast(&x.swap_columns(a, b))?;
        check(s == d.neg(), || format!("{n}x{k} swap {a},{b}: {d} vs {s}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn column_shear_invariance(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..100 {
        let n = ctx.rng.gen_range(2..=6.min(ctx.cap.max(2)));
        let k = ctx.rng.gen_range(2..=n.min(5));
        let x = ctx.int_matrix(n, k);
        let target = ctx.rng.gen_range(0..k);
        let source = (target + ctx.rng.gen_range(1..k)) % k;
        let c = ExactInteger::from_i64(ctx.rng.gen_range(-5..=5));
        let sheared: Vec<_> = (0..n)
            .map(|i| x[(i, target)].add(&c.mul(&x[(i, source)])))
            .collect();
        let d = fast(&x)?;
        let s = fast(&replace_column(&x, target, &sheared))?;
        check(s == d, || format!("{n}x{k}: {d} vs {s}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn column_expansion_independence(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..100 {
        let (n, k) = ctx.tall_shape(6, 4);
        let x = ctx.int_matrix(n, k);
        let want = minors(&x)?;
        for col in 1..=k {
            let got = cullis_laplace_column(&x, col).map_err(|e| e.to_string())?;
            check(got == want, || {
                format!("{n}x{k}, column {col}: {got} vs {want}")
            })?;
        }
        cases += 1;
    }
    Ok(cases)
}

fn transpose_convention(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    while cases < 100 {
        let (k, n) = ctx.tall_shape(7, 6);
        if n == k {
            continue;
        }
        let x = ctx.int_matrix(n, k);
        let a = fast(&x)?;
        let b = fast(&x.transpose())?;
        check(a == b, || format!("{n}x{k}: {a} vs {b}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn ones_column_identity(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for i in 0..200 {
        let n = ctx.rng.gen_range(2..=6.min(ctx.cap.max(2)));
        // Alternate the parity of n + k.
        let k_choices: Vec<usize> = (1..n).filter(|k| (n + k) % 2 == i % 2).collect();
        let Some(&k) = k_choices.choose(&mut ctx.rng) else {
            continue;
        };
        let x = ctx.int_matrix(n, k);
        let ok = append_ones_column_identity_check(&x).map_err(|e| e.to_string())?;
        check(ok, || format!("{n}x{k}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn zero_row_identity(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for _ in 0..100 {
        let (n, k) = ctx.tall_shape(6, 6);
        let x = ctx.int_matrix(n, k);
        let ok = append_zero_row_identity_check(&x).map_err(|e| e.to_string())?;
        check(ok, || format!("{n}x{k}"))?;
        cases += 1;
    }
    Ok(cases)
}

/// The six-term expansion of `det_{3 2}` evaluated on every pair of
/// standard basis columns; with bilinearity this pins the polynomial.
fn three_by_two_expansion(_ctx: &mut Ctx) -> Outcome {
    let poly = |x: &IMat| -> ExactInteger {
        let e = |i: usize, j: usize| x[(i - 1, j - 1)].clone();
        e(1, 1)
            .mul(&e(2, 2))
            .sub(&e(1, 1).mul(&e(3, 2)))
            .sub(&e(1, 2).mul(&e(2, 1)))
            .add(&e(1, 2).mul(&e(3, 1)))
            .add(&e(2, 1).mul(&e(3, 2)))
            .sub(&e(2, 2).mul(&e(3, 1)))
    };
    let mut cases = 0;
    for i in 0..3 {
        for j in 0..3 {
            let x = IMat::from_fn(3, 2, |r, c| {
                let hot = if c == 0 { i } else { j };
                ExactInteger::from_i64((r == hot) as i64)
            });
            let f = fast(&x)?;
            let p = poly(&x);
            check(f == p, || {
                format!("basis pair (e{}, e{}): {f} vs {p}", i + 1, j + 1)
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn d_matrix_definition(ctx: &mut Ctx) -> Outcome {
    let mut cases = 0;
    for n in 1..=12.min(ctx.cap.max(3) * 2) {
        let d = build_d_matrix::<ExactInteger>(n);
        check(d.is_skew_symmetric(), || format!("D({n}) not skew"))?;
        for i in 1..=n {
            for j in 1..=n {
                let parity = if (i + j) % 2 == 0 { 1 } else { -1 };
                let want = ExactInteger::from_i64(parity * i64::from(tuple_sign(&[i, j])));
                check(d[(i - 1, j - 1)] == want, || format!("D({n})[{i},{j}]"))?;
            }
        }
        cases += 1;
    }
    let x = ctx.int_matrix(7, 4);
    let full = x
        .transpose()
        .multiply(&build_d_matrix(7))
        .and_then(|m| m.multiply(&x))
        .map_err(|e| e.to_string())?;
    check(full.is_skew_symmetric(), || "XᵗDX not skew".to_owned())?;
    let y = SkewMatrix::new(full).map_err(|e| e.to_string())?;
    let ff = pfaffian_fraction_free(&y).map_err(|e| e.to_string())?;
    let lap = pfaffian_laplace(&y, 1).map_err(|e| e.to_string())?;
    check(ff == lap, || format!("XᵗDX Pfaffian: {ff} vs {lap}"))?;
    let q = to_rational(&x);
    let viaq = cullis_fast(&q, PfaffianEngine::Eliminate).map_err(|e| e.to_string())?;
    check(viaq == ExactRational::from(minors(&x)?), || {
        "rational route".to_owned()
    })?;
    Ok(cases + 1)
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "tuple sign under permutation",
        run: tuple_sign_permutation_rule,
    },
    Suite {
        name: "matching enumeration and signs",
        run: matching_enumeration,
    },
    Suite {
        name: "Pfaffian of sign matrix is tuple sign",
        run: pfaffian_of_sign_matrix,
    },
    Suite {
        name: "matching-sum sign identity",
        run: matching_sum_identity,
    },
    Suite {
        name: "permutation matrix determinant",
        run: permutation_matrix_determinant,
    },
    Suite {
        name: "permutation conjugation reindexes",
        run: permutation_conjugation,
    },
    Suite {
        name: "Pfaffian squared is determinant",
        run: pfaffian_squared_is_determinant,
    },
    Suite {
        name: "Pfaffian congruence rule",
        run: pfaffian_congruence_rule,
    },
    Suite {
        name: "Pfaffian of ordered sign matrix is one",
        run: unit_pfaffian_of_ordered_signs,
    },
    Suite {
        name: "Pfaffian column expansion",
        run: pfaffian_column_expansion,
    },
    Suite {
        name: "Pfaffian engines agree",
        run: pfaffian_engines_agree,
    },
    Suite {
        name: "sign-difference matrix",
        run: d_matrix_definition,
    },
    Suite {
        name: "injection-sum formula",
        run: injection_sum_formula,
    },
    Suite {
        name: "Cullis-Pfaffian engine agreement sweep",
        run: theorem_agreement_sweep,
    },
    Suite {
        name: "3x2 six-term expansion",
        run: three_by_two_expansion,
    },
    Suite {
        name: "column multilinearity",
        run: multilinearity,
    },
    Suite {
        name: "dependent columns vanish",
        run: dependent_columns_vanish,
    },
    Suite {
        name: "column swap negates",
        run: column_swap_negates,
    },
    Suite {
        name: "column shear invariance",
        run: column_shear_invariance,
    },
    Suite {
        name: "column expansion independence",
        run: column_expansion_independence,
    },
    Suite {
        name: "transpose convention",
        run: transpose_convention,
    },
    Suite {
        name: "ones-column identity",
        run: ones_column_identity,
    },
    Suite {
        name: "zero-row identity",
        run: zero_row_identity,
    },
];

pub fn run_suites(suites: &[Suite], seed: u64, cap: usize) -> Vec<SuiteResult> {
    suites
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut ctx = Ctx::new(seed.wrapping_add(i as u64), cap);
            SuiteResult {
                name: s.name,
                outcome: (s.run)(&mut ctx),
            }
        })
        .collect()
}

pub fn run_selftest(seed: u64, cap: usize) -> Vec<SuiteResult> {
    run_suites(SUITES, seed, cap)
}
