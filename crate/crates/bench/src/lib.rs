//! Seeded inputs shared by the criterion benches.

use cullis_core::{Matrix, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An `n × k` matrix with entries uniform in `[-9, 9]`, reproducible from `seed`.
pub fn random_matrix<T: Ring>(n: usize, k: usize, seed: u64) -> Matrix<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::from_fn(n, k, |_, _| T::from_i64(rng.gen_range(-9..=9)))
}
