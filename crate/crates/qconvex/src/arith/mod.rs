//! Exact scalar and polynomial arithmetic.
//!
//! Integers and rationals are arbitrary precision (backed by `num`); rationals
//! are always kept in lowest terms with a positive denominator, which `num`
//! enforces at construction. [`Poly`] is a dense univariate polynomial over
//! the rationals, [`MultiPoly`] a sparse polynomial in the three formal
//! variables `n`, `t`, `x`.

mod multipoly;
mod poly;

use std::sync::{OnceLock, RwLock};

use num::{BigInt, BigRational, One, Zero};

pub use multipoly::{MultiPoly, Var};
pub use poly::Poly;

/// Exact arbitrary-precision integer.
pub type Int = BigInt;

/// Exact arbitrary-precision rational, canonical at construction.
pub type Rat = BigRational;

/// Shorthand constructor for an [`Int`].
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand constructor for a [`Rat`]; panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Formats a rational for reports: plain decimal when integral, `p/q` otherwise.
pub fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Process-wide Pascal table; rows are filled on demand and only the left
/// half of each row is stored.
static PASCAL: OnceLock<RwLock<Vec<Vec<Int>>>> = OnceLock::new();

fn pascal_entry(rows: &[Vec<Int>], n: usize, k: usize) -> &Int {
    &rows[n][k.min(n - k)]
}

/// Binomial coefficient `C(n, k)`.
///
/// Returns 0 when `k < 0` or `k > n`; panics when `n < 0`.
pub fn binomial(n: i64, k: i64) -> Int {
    assert!(n >= 0, "binomial: negative upper index n={n}");
    if k < 0 || k > n {
        return Int::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let table = PASCAL.get_or_init(|| RwLock::new(vec![vec![Int::one()]]));
    {
        let rows = table.read().unwrap();
        if n < rows.len() {
            return pascal_entry(&rows, n, k).clone();
        }
    }
    let mut rows = table.write().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m / 2 + 1);
        row.push(Int::one());
        for j in 1..=m / 2 {
            let left = &prev[(j - 1).min((m - 1) - (j - 1))];
            let right = &prev[j.min((m - 1) - j)];
            row.push(left + right);
        }
        rows.push(row);
    }
    pascal_entry(&rows, n, k).clone()
}
