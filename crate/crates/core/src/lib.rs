//! Exact Cullis determinants of rectangular matrices.
//!
//! The Cullis determinant extends `det` to `n×k` matrices as a signed sum of
//! maximal minors. This crate evaluates it by three brute-force oracles and
//! by a cubic-time reduction to a single Pfaffian, over arbitrary-precision
//! integers, rationals, or binary64 floats.
//!
//! ```
//! use cullis_core::{cullis_fast, cullis_minors, ExactInteger, Matrix, PfaffianEngine};
//!
//! let x = Matrix::<ExactInteger>::from_i64_rows(&[[1, 4], [2, -1], [0, 3]]);
//! let fast = cullis_fast(&x, PfaffianEngine::Auto).unwrap();
//! assert_eq!(fast, cullis_minors(&x).unwrap());
//! ```

pub mod cullis;
pub mod error;
pub mod instrument;
pub mod matrix;
pub mod pfaffian;
pub mod scalar;
pub mod signs;

pub use cullis::{
    append_ones_column_identity_check, append_zero_row_identity_check, cullis_det, cullis_fast,
    cullis_fast_with, cullis_injections, cullis_laplace_column, cullis_minors, pfaffian_reduction,
    triangular_sign, CullisMethod,
};
pub use error::{Error, Result};
pub use instrument::{measure, OpCounts};
pub use matrix::{build_d_matrix, Matrix};
pub use pfaffian::{
    pfaffian_definition, pfaffian_eliminate, pfaffian_fraction_free, pfaffian_laplace,
    pfaffian_with, PfaffianEngine, SkewMatrix,
};
pub use scalar::{
    parse_scalar, ApproxReal, Domain, ExactInteger, ExactRational, Field, IntegralDomain, Ring,
    Scalar, Tier,
};
pub use signs::{
    enumerate_matchings, injection_sign, matching_sum_sign, permutation_matrix, sgn_matrix,
    tuple_sign, Injection, Matching, Matchings, Permutation,
};
