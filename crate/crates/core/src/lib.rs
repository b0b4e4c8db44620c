//! Exact counting kernels for two-rowed lexicographic arrays and the moments
//! of characteristic polynomials of CUE matrices.
//!
//! The moment `<|Z(U, theta)|^{2m}>` over `U(N)` is a nonnegative integer. It is
//! computed here four independent ways, which must agree exactly:
//!
//! - [`moments::moment_product`]: the gamma-ratio product over `j = 1..=N`.
//! - [`moments::moment_partition_sum`]: the sum of `d_lambda(m)^2` over partitions
//!   with at most `m` parts, each at most `N`.
//! - [`biwords::enumerate_biwords`]: brute-force enumeration of lexicographic
//!   biwords over `m` letters whose longest weakly increasing subsequence is at most `N`.
//! - [`lpp::count_matrices`]: brute-force count of `m x m` nonnegative integer
//!   matrices with last-passage time at most `N`.
//!
//! The [`rsk`] module carries the bijection that links the combinatorial routes to
//! the partition sum, and [`tableaux`] provides the enumeration oracle for `d_lambda`.
//!
//! Data-parallel kernels run on rayon when the `parallel` feature is enabled
//! (the default); see [`exec::Strategy`].

pub mod biwords;
pub mod count;
pub mod error;
pub mod exec;
pub mod lpp;
pub mod moments;
pub mod partitions;
pub mod rsk;
pub mod tableaux;

pub use count::ExactCount;
pub use error::{Error, Result};
pub use exec::Strategy;

/// Letters of the alphabet `{1, ..., m}`.
pub type Letter = u32;
