//! Exhaustive integer-grid verification connecting the catalog polynomials to
//! the `l_mod` operator and checking the scalar sign claims they were built
//! to certify.

use super::catalog;
use crate::arith::{binomial, rat, Int, MultiPoly, Rat, Var};
use crate::criteria::l_mod;
use crate::exec::map_ordered;
use crate::sequences::Triangle;
use num::{Signed, Zero};

/// Which factorization of `l_mod` to verify on the full grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorizationGrid {
    /// `l_mod` on the binomial triangle against the `phi` quadratic.
    Binomial,
    /// `l_mod` on the `sun_a` triangle against the `psi` sextic.
    SunA,
}

impl FactorizationGrid {
    pub fn id(self) -> &'static str {
        match self {
            FactorizationGrid::Binomial => "factorization-binomial",
            FactorizationGrid::SunA => "factorization-sun-a",
        }
    }

    pub fn triangle(self) -> Triangle {
        let name = match self {
            FactorizationGrid::Binomial => "binomial",
            FactorizationGrid::SunA => "sun_a",
        };
        Triangle::builtin(name).expect("builtin triangle")
    }

    fn factor_poly(self) -> MultiPoly {
        match self {
            FactorizationGrid::Binomial => catalog::phi(),
            FactorizationGrid::SunA => catalog::psi(),
        }
    }

    fn t_upto(self, n: i64) -> i64 {
        match self {
            FactorizationGrid::Binomial => 2 * n,
            FactorizationGrid::SunA => n,
        }
    }
}

/// One failing grid point, with both exact values rendered.
#[derive(Clone, Debug)]
pub struct GridPoint {
    pub n: i64,
    pub t: i64,
    pub k: Option<i64>,
    pub detail: String,
}

/// Outcome of scanning one grid or one sign claim.
#[derive(Clone, Debug)]
pub struct GridReport {
    pub id: &'static str,
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<GridPoint>,
    pub notes: Vec<String>,
}

impl GridReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn point_sides(
    which: FactorizationGrid,
    tri: &Triangle,
    factor: &MultiPoly,
    n: i64,
    t: i64,
    k: i64,
) -> Option<(Rat, Rat)> {
    let lhs = Rat::from(l_mod(tri, n, t, k));
    let (numer, denom): (Int, Int) = match which {
        FactorizationGrid::Binomial => (
            binomial(n, k) * binomial(n + 1, t - k),
            Int::from(n) * Int::from(n + 1) * Int::from(n - k + 1),
        ),
        FactorizationGrid::SunA => (
            binomial(n, k)
                * binomial(2 * n - 2 * k, n - k)
                * binomial(n, t - k)
                * binomial(2 * n - 2 * t + 2 * k, n - t + k),
            Int::from(n)
                * Int::from(n - k + 1).pow(2)
                * Int::from(n - t + k + 1).pow(2)
                * Int::from(2 * n - 2 * k - 1)
                * Int::from(2 * n - 2 * t + 2 * k - 1),
        ),
    };
    if denom.is_zero() {
        return None;
    }
    let rhs = Rat::from(numer) * factor.eval_int(n, t, k) / Rat::from(denom);
    Some((lhs, rhs))
}

/// Both sides of the factorization at a single grid point, or `None` when the
/// rational prefactor is undefined there.
pub fn factorization_sides(which: FactorizationGrid, n: i64, t: i64, k: i64) -> Option<(Rat, Rat)> {
    point_sides(which, &which.triangle(), &which.factor_poly(), n, t, k)
}

/// Verifies the chosen factorization of `l_mod` at every grid point with
/// `1 <= n <= n_max`, `0 <= t <= t_upto(n)`, `0 <= k <= t/2`.
pub fn grid_verify_factorization(
    which: FactorizationGrid,
    n_max: i64,
    parallel: bool,
) -> GridReport {
    let tri = which.triangle();
    let factor = which.factor_poly();
    let per_n = map_ordered((1..=n_max).collect(), parallel, |n| {
        let mut checked = 0u64;
        let mut skipped = 0u64;
        let mut failures = Vec::new();
        let mut notes = Vec::new();
        for t in 0..=which.t_upto(n) {
            for k in 0..=t / 2 {
                match point_sides(which, &tri, &factor, n, t, k) {
                    None => {
                        skipped += 1;
                        notes.push(format!("skipped n={n} t={t} k={k}: zero denominator"));
                    }
                    Some((lhs, rhs)) => {
                        checked += 1;
                        if lhs != rhs {
                            failures.push(GridPoint {
                                n,
                                t,
                                k: Some(k),
                                detail: format!("operator value {lhs} != factored form {rhs}"),
                            });
                        }
                    }
                }
            }
        }
        (checked, skipped, failures, notes)
    });
    merge(which.id(), per_n)
}

fn merge(
    id: &'static str,
    parts: Vec<(u64, u64, Vec<GridPoint>, Vec<String>)>,
) -> GridReport {
    let mut report = GridReport {
        id,
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
        notes: Vec::new(),
    };
    for (checked, skipped, failures, notes) in parts {
        report.checked += checked;
        report.skipped += skipped;
        report.failures.extend(failures);
        report.notes.extend(notes);
    }
    report
}

fn scan_sign<F>(
    id: &'static str,
    poly: &MultiPoly,
    n_min: i64,
    n_max: i64,
    parallel: bool,
    t_range: F,
    expect_positive: bool,
) -> GridReport
where
    F: Fn(i64) -> std::ops::RangeInclusive<i64> + Sync,
{
    let per_n = map_ordered((n_min..=n_max).collect(), parallel, |n| {
        let mut checked = 0u64;
        let mut failures = Vec::new();
        for t in t_range(n) {
            checked += 1;
            let value = poly.eval_int(n, t, 0);
            let ok = if expect_positive {
                value.is_positive()
            } else {
                value.is_negative()
            };
            if !ok {
                failures.push(GridPoint {
                    n,
                    t,
                    k: None,
                    detail: format!(
                        "value {value} is not strictly {}",
                        if expect_positive { "positive" } else { "negative" }
                    ),
                });
            }
        }
        (checked, 0u64, failures, Vec::new())
    });
    merge(id, per_n)
}

/// Verifies every scalar sign claim the split polynomials are used for, on
/// integer grids up to `n_max`. Midpoint arguments are substituted
/// symbolically first, so each point is a single exact evaluation.
pub fn grid_verify_sign_claims(n_max: i64, parallel: bool) -> Vec<GridReport> {
    let sub = |p: &MultiPoly, v: MultiPoly| p.substitute(Var::X, &v);
    let half = MultiPoly::constant(rat(1, 2));
    let nv = MultiPoly::var(Var::N);
    let tv = MultiPoly::var(Var::T);

    let theta_at_t = sub(&catalog::theta(), tv.clone());
    let theta_at_n = sub(&catalog::theta(), nv.clone());
    let psi1_mid = sub(&catalog::psi1(), half.clone() * tv.clone());
    let psi2_mid = sub(&catalog::psi2(), half.clone() * tv);
    let psi_nn_at_1 = sub(&catalog::psi_nn(), MultiPoly::from_int(1));
    let psi_nn_mid = sub(&catalog::psi_nn(), half * nv);
    let xi = catalog::xi();
    let eta = catalog::eta();

    vec![
        scan_sign(
            "sign-theta-positive-below-diagonal",
            &theta_at_t,
            5,
            n_max,
            parallel,
            |n| 0..=n - 1,
            true,
        ),
        scan_sign(
            "sign-theta-negative-at-n",
            &theta_at_n,
            5,
            n_max,
            parallel,
            |_| 0..=0,
            false,
        ),
        scan_sign(
            "sign-psi1-positive-at-midpoint",
            &psi1_mid,
            2,
            n_max,
            parallel,
            |n| 0..=n - 1,
            true,
        ),
        scan_sign(
            "sign-psi2-negative-at-midpoint",
            &psi2_mid,
            1,
            n_max,
            parallel,
            |n| 0..=n - 1,
            false,
        ),
        scan_sign(
            "sign-psi-nn-positive-at-1",
            &psi_nn_at_1,
            2,
            n_max,
            parallel,
            |_| 0..=0,
            true,
        ),
        scan_sign(
            "sign-psi-nn-negative-at-midpoint",
            &psi_nn_mid,
            3,
            n_max,
            parallel,
            |_| 0..=0,
            false,
        ),
        scan_sign(
            "sign-xi-negative-upper-range",
            &xi,
            4,
            n_max,
            parallel,
            |n| (3 * n + 3) / 4..=n - 1,
            false,
        ),
        scan_sign(
            "sign-eta-negative-lower-range",
            &eta,
            1,
            n_max,
            parallel,
            |n| 0..=3 * n / 4,
            false,
        ),
    ]
}
