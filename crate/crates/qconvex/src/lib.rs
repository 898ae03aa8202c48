//! Exact verification of log-convexity and q-log-convexity for combinatorial
//! polynomial sequences.
//!
//! A sequence of polynomials `g_n(q) = sum_k a(n,k) u_k q^k` is built from a
//! triangular array `a(n,k)` and a weight sequence `u_k`. This crate checks,
//! in exact arbitrary-precision arithmetic:
//!
//! * log-convexity / log-concavity of integer sequences,
//! * q-log-convexity / q-log-concavity of polynomial sequences,
//! * self-reciprocity (palindromicity) of the generated polynomials,
//! * the two sufficient sign-pattern criteria (`criteria`) that transfer
//!   log-convexity of the weights to q-log-convexity of the sequence,
//! * a catalog of closed-form identities for the auxiliary polynomials that
//!   drive those criteria (`identities`), together with grid verification of
//!   the product factorizations and sign claims they rest on.
//!
//! No floating point is used anywhere; every comparison is exact.

pub mod arith;
pub mod cli;
pub mod convexity;
pub mod criteria;
mod error;
mod exec;
pub mod identities;
pub mod report;
pub mod sequences;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
