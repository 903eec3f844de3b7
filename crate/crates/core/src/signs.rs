//! Tuple signs, permutations, injections and perfect matchings.
//!
//! All index values are 1-based, as in `[n] = {1, …, n}`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Ring;

/// `sgn(c₁, …, cₙ)`: 0 when two entries coincide, otherwise
/// `(−1)^{#inversions}`. Tuples of length 0 or 1 have sign +1.
pub fn tuple_sign(c: &[usize]) -> i32 {
    let mut odd = false;
    for (i, a) in c.iter().enumerate() {
        for b in &c[i + 1..] {
            if a == b {
                return 0;
            }
            if a > b {
                odd = !odd;
            }
        }
    }
    if odd {
        -1
    } else {
        1
    }
}

/// A bijection of `[n]`, stored as `(π(1), …, π(n))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n + 1];
        for &v in &mapping {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(mapping));
            }
            seen[v] = true;
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `π(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sign(&self) -> i32 {
        tuple_sign(&self.0)
    }

    /// `(c_{π(1)}, …, c_{π(n)})`.
    pub fn permute<T: Clone>(&self, c: &[T]) -> Vec<T> {
        assert_eq!(
            c.len(),
            self.len(),
            "tuple length must match permutation size"
        );
        self.0.iter().map(|&p| c[p - 1].clone()).collect()
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut p = current.clone();
            if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
                let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
                p.swap(i - 1, j);
                p[i..].reverse();
                next = Some(p);
            }
            Some(Permutation(current))
        })
    }
}

/// An injection `σ: [k] → [n]`, stored as `(σ(1), …, σ(k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Injection {
    mapping: Vec<usize>,
    ambient: usize,
}

impl Injection {
    pub fn new(mapping: Vec<usize>, ambient: usize) -> Result<Self> {
        let mut seen = vec![false; ambient + 1];
        for &v in &mapping {
            if v == 0 || v > ambient || seen[v] {
                return Err(Error::InvalidInjection { mapping, ambient });
            }
            seen[v] = true;
        }
        Ok(Injection { mapping, ambient })
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
}

/// `sgn_{n k}(σ) = (−1)^{Σ (σ(α) − α)} · sgn(σ(1), …, σ(k))`.
pub fn injection_sign(s: &Injection) -> i32 {
    let offset: usize = s.mapping.iter().enumerate().map(|(a, &v)| v + a + 1).sum();
    let parity = if offset.is_multiple_of(2) { 1 } else { -1 };
    parity * tuple_sign(&s.mapping)
}

/// `SGN(c)`: the matrix of pairwise signs `sgn(c_i, c_j)`.
pub fn sgn_matrix<T: Ring>(c: &[usize]) -> Matrix<T> {
    Matrix::from_fn(c.len(), c.len(), |i, j| {
        T::from_i64(i64::from(tuple_sign(&[c[i], c[j]])))
    })
}

/// `P^π = Σ E_{i π(i)}`.
pub fn permutation_matrix<T: Ring>(p: &Permutation) -> Matrix<T> {
    Matrix::from_fn(p.len(), p.len(), |i, j| {
        if p.image(i + 1) == j + 1 {
            T::one()
        } else {
            T::zero()
        }
    })
}

/// A perfect matching of `[2m]` in canonical form: `p_l < q_l` and
/// `p_1 < … < p_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
    sign: i32,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Sign of the flattened permutation `(p₁, q₁, …, pₘ, qₘ)`.
    pub fn sign(&self) -> i32 {
        self.sign
    }

    pub fn flattened(&self) -> Vec<usize> {
        self.pairs.iter().flat_map(|&(p, q)| [p, q]).collect()
    }
}

/// Enumerates `Π₂ₘ` in lexicographic order of the flattened pair sequence.
///
/// Each matching pairs the smallest free index with one of the remaining
/// ones; choosing the `j`-th remaining candidate (0-based) contributes
/// `(−1)^j` to the sign.
pub fn enumerate_matchings(m: usize) -> Matchings {
    Matchings {
        choice: Some(vec![0; m]),
    }
}

#[derive(Debug, Clone)]
pub struct Matchings {
    choice: Option<Vec<usize>>,
}

impl Matchings {
    fn decode(choice: &[usize]) -> Matching {
        let m = choice.len();
        let mut free: Vec<usize> = (1..=2 * m).collect();
        let mut pairs = Vec::with_capacity(m);
        let mut odd = false;
        for &c in choice {
            let first = free.remove(0);
            let partner = free.remove(c);
            pairs.push((first, partner));
            odd ^= c % 2 == 1;
        }
        Matching {
            pairs,
            sign: if odd { -1 } else { 1 },
        }
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        let choice = self.choice.as_mut()?;
        let out = Self::decode(choice);
        let m = choice.len();
        // Level l picks among 2m − 1 − 2l candidates.
        let mut advanced = false;
        for l in (0..m).rev() {
            if choice[l] + 1 < 2 * m - 1 - 2 * l {
                choice[l] += 1;
                choice[l + 1..].iter_mut().for_each(|c| *c = 0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.choice = None;
        }
        Some(out)
    }
}

/// `Σ_{π ∈ Π₂ₘ} sgn(π) · Π_l sgn(c_{π(2l−1)}, c_{π(2l)})`, which equals
/// `tuple_sign(c)`. Kept as an independent route for testing.
pub fn matching_sum_sign(c: &[usize]) -> Result<i64> {
    if !c.len().is_multiple_of(2) {
        return Err(Error::OddDimension(c.len()));
    }
    let total = enumerate_matchings(c.len() / 2)
        .map(|mt| {
            mt.pairs()
                .iter()
                .map(|&(p, q)| i64::from(tuple_sign(&[c[p - 1], c[q - 1]])))
                .product::<i64>()
                * i64::from(mt.sign())
        })
        .sum();
    Ok(total)
}
