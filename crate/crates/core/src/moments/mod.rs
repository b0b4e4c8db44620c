//! Moments of the characteristic polynomial of a Haar-random `N x N` unitary.
//!
//! For integer `m, N >= 0` the moment `<|Z(U, theta)|^{2m}>` is an integer,
//! computed here exactly by the gamma-ratio product and by the sum of squared
//! tableau counts over bounded partitions.

mod diagnostics;
mod euler;

pub use diagnostics::{
    f_estimate, ratio_estimate, DiagnosticKind, LimitDiagnostic, LimitEntry, Trend,
};
pub use euler::{
    a_factor, a_factor_with, primes_up_to, Real, ZetaFactorEstimate, DEFAULT_PRECISION_BITS,
    DEFAULT_PRIME_CUTOFF, DEFAULT_SERIES_CUTOFF,
};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exec::Strategy;
use crate::partitions::{d_lambda, enumerate_partitions, PartitionBounds};
use crate::ExactCount;

/// Moment order `m` (also the alphabet size) and matrix dimension `n` (also
/// the bound on the longest weakly increasing subsequence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MomentQuery {
    pub m: u32,
    pub n: u64,
}

impl MomentQuery {
    pub fn new(m: u32, n: u64) -> Self {
        MomentQuery { m, n }
    }
}

/// `a! / b!` for `a >= b`, the product `(b+1)(b+2)...a`.
fn factorial_ratio(a: u64, b: u64) -> BigUint {
    debug_assert!(a >= b);
    (b + 1..=a).fold(BigUint::one(), |acc, k| acc * k)
}

/// `prod_{j=1}^{n} Gamma(j) Gamma(j+2m) / Gamma(j+m)^2` with `Gamma(k) = (k-1)!`.
///
/// The factor for `j` is `[(j+2m-1)! / (j+m-1)!] / [(j+m-1)! / (j-1)!]`. Every
/// partial product over `j <= J` is itself the moment for `N = J`, hence an
/// integer, so the running division is exact and is checked at each step.
pub fn moment_product(q: MomentQuery) -> ExactCount {
    let m = u64::from(q.m);
    let mut acc = BigUint::one();
    for j in 1..=q.n {
        acc *= factorial_ratio(j + 2 * m - 1, j + m - 1);
        let (quot, rem) = acc.div_rem(&factorial_ratio(j + m - 1, j - 1));
        assert!(
            rem.is_zero(),
            "moment_product: inexact division at j = {j} for m = {m}"
        );
        acc = quot;
    }
    ExactCount(acc)
}

/// `sum_K sum_{lambda |- K} d_lambda(m)^2` over partitions with at most `m`
/// parts, each at most `n`. No such partition weighs more than `m * n`, so the
/// sum over `K` stops there.
pub fn moment_partition_sum(q: MomentQuery) -> ExactCount {
    moment_partition_sum_with(q, Strategy::default())
}

pub fn moment_partition_sum_with(q: MomentQuery, strategy: Strategy) -> ExactCount {
    let bounds = PartitionBounds::new(q.m, q.n.try_into().expect("n fits in u32"));
    let weights: Vec<u64> = (0..=bounds.max_weight()).collect();
    strategy
        .map(weights, |k| {
            enumerate_partitions(k, bounds)
                .iter()
                .map(|lambda| {
                    let d = d_lambda(lambda, q.m);
                    &d * &d
                })
                .sum::<ExactCount>()
        })
        .into_iter()
        .sum()
}
