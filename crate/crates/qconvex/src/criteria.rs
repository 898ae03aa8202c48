//! The `L̃`/`L` operators on triangles, single-sign-change detection, and the
//! two q-log-convexity criteria built on them.
//!
//! For a triangle `a(n,k)` with row polynomials `f_n(q) = Σ_k a(n,k) q^k`,
//! the coefficient of `q^t` in `f_(n+1) f_(n-1) - f_n^2` splits into a sum of
//! bilinear terms over `0 <= k <= t/2` (pairing `k` with `t-k`). [`l_tilde`]
//! is that summand; [`l_mod`] is the symmetric variant that keeps the
//! two-sided formula at the diagonal `k = t/2`, where it equals twice
//! [`l_tilde`]. Only signs matter to the criteria, so the factor of two is
//! harmless, but reports always record which operator produced a grid.
//!
//! Both criteria ask the same shape of question: for each `(n, t)` cell, the
//! operator values for `k = 0..⌊t/2⌋` must be nonnegative up to some split
//! index and nonpositive after it ([`sign_pattern`]). The Liu–Wang form
//! ([`check_liu_wang`]) scans `0 <= t <= 2n` with `l_tilde`; the
//! self-reciprocal form ([`check_self_reciprocal`]) additionally requires
//! palindromic weighted rows (condition C1) and in exchange only needs the
//! grid on `0 <= t <= n` with `l_mod` (condition C2), the rest following by
//! symmetry.

use num::Signed;

use crate::arith::Int;
use crate::convexity::is_self_reciprocal;
use crate::exec::map_ordered;
use crate::sequences::{ensure_rows, PolySeqSpec, Triangle};
use crate::Result;

fn check_ntk(n: i64, t: i64, k: i64) {
    assert!(n >= 1, "operator requires n >= 1, got n={n}");
    assert!((0..=2 * n).contains(&t), "operator requires 0 <= t <= 2n, got n={n} t={t}");
    assert!(k >= 0 && 2 * k <= t, "operator requires 0 <= k <= t/2, got t={t} k={k}");
}

/// Summand of the coefficient of `q^t` in `f_(n+1) f_(n-1) - f_n^2` after
/// pairing `k` with `t-k`: the cross expression below the diagonal, the
/// single-product expression `a(n+1,k)a(n-1,k) - a(n,k)^2` at `k = t/2`.
pub fn l_tilde(tri: &Triangle, n: i64, t: i64, k: i64) -> Int {
    check_ntk(n, t, k);
    if 2 * k == t {
        tri.value(n + 1, k) * tri.value(n - 1, k) - tri.value(n, k) * tri.value(n, k)
    } else {
        tri.value(n + 1, k) * tri.value(n - 1, t - k) + tri.value(n - 1, k) * tri.value(n + 1, t - k)
            - tri.value(n, k) * tri.value(n, t - k) * 2
    }
}

/// Symmetrized variant of [`l_tilde`]: the cross expression for every
/// `0 <= k <= t/2`, hence twice [`l_tilde`] at the diagonal `k = t/2`.
/// Same sign everywhere, which is all the criteria consume.
pub fn l_mod(tri: &Triangle, n: i64, t: i64, k: i64) -> Int {
    check_ntk(n, t, k);
    tri.value(n + 1, k) * tri.value(n - 1, t - k) + tri.value(n - 1, k) * tri.value(n + 1, t - k)
        - tri.value(n, k) * tri.value(n, t - k) * 2
}

/// First strictly negative value followed by a strictly positive one — the
/// exact pair that rules out a nonneg-then-nonpos split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignViolation {
    pub neg_index: usize,
    pub neg_value: Int,
    pub pos_index: usize,
    pub pos_value: Int,
}

/// Outcome of [`sign_pattern`]. Zeros are wildcards; `split_index` is the
/// largest `k'` such that entries `0..=k'` are all `>= 0` and the rest are
/// all `<= 0` (`-1` when already the first entry is negative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPatternResult {
    pub admissible: bool,
    pub split_index: Option<i64>,
    pub violation: Option<SignViolation>,
}

/// Decides whether `values` reads as a nonnegative prefix followed by a
/// nonpositive suffix, treating zeros as belonging to either side.
pub fn sign_pattern(values: &[Int]) -> SignPatternResult {
    assert!(!values.is_empty(), "sign_pattern on empty slice");
    let first_negative = values.iter().position(|v| v.is_negative());
    match first_negative {
        None => SignPatternResult {
            admissible: true,
            split_index: Some(values.len() as i64 - 1),
            violation: None,
        },
        Some(i) => match values[i..].iter().position(|v| v.is_positive()) {
            None => SignPatternResult {
                admissible: true,
                split_index: Some(i as i64 - 1),
                violation: None,
            },
            Some(off) => SignPatternResult {
                admissible: false,
                split_index: None,
                violation: Some(SignViolation {
                    neg_index: i,
                    neg_value: values[i].clone(),
                    pos_index: i + off,
                    pos_value: values[i + off].clone(),
                }),
            },
        },
    }
}

/// Which sufficient criterion a report was produced by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    /// Sign-pattern grid of `l_tilde` over `0 <= t <= 2n`, no symmetry
    /// assumption.
    LiuWang,
    /// Palindromic weighted rows (C1) plus the sign-pattern grid of `l_mod`
    /// restricted to `0 <= t <= n` (C2).
    SelfReciprocal,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::LiuWang => "liu-wang",
            Criterion::SelfReciprocal => "self-reciprocal",
        }
    }

    /// Name of the operator whose values fill this criterion's grid.
    pub fn operator(self) -> &'static str {
        match self {
            Criterion::LiuWang => "l-tilde",
            Criterion::SelfReciprocal => "l-mod",
        }
    }
}

/// Sign-pattern verdict for one `(n, t)` grid cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridOutcome {
    pub n: i64,
    pub t: i64,
    pub result: SignPatternResult,
}

/// Outcome of scanning `g_n(q)` for palindromic coefficients over
/// `0 <= n <= n_upto`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfReciprocalScan {
    pub n_upto: i64,
    pub checked: u64,
    pub first_failure: Option<i64>,
    pub ok: bool,
}

/// Full result of one criterion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub triangle: String,
    pub weights: Option<String>,
    pub n_max: i64,
    /// Palindromy scan, present only for [`Criterion::SelfReciprocal`].
    pub c1: Option<SelfReciprocalScan>,
    pub outcomes: Vec<GridOutcome>,
    pub overall: bool,
}

impl CriterionReport {
    pub fn violations(&self) -> impl Iterator<Item = &GridOutcome> {
        self.outcomes.iter().filter(|o| !o.result.admissible)
    }

    pub fn first_violation(&self) -> Option<&GridOutcome> {
        self.violations().next()
    }
}

fn sign_pattern_grid(
    tri: &Triangle,
    n_max: i64,
    parallel: bool,
    t_upto: impl Fn(i64) -> i64 + Sync,
    op: impl Fn(&Triangle, i64, i64, i64) -> Int + Sync,
) -> Vec<GridOutcome> {
    map_ordered((1..=n_max).collect(), parallel, |n| {
        (0..=t_upto(n))
            .map(|t| {
                let values: Vec<Int> = (0..=t / 2).map(|k| op(tri, n, t, k)).collect();
                GridOutcome {
                    n,
                    t,
                    result: sign_pattern(&values),
                }
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Checks the Liu–Wang hypothesis on `tri`: every cell `1 <= n <= n_max`,
/// `0 <= t <= 2n` must have an admissible [`sign_pattern`] of
/// `[l_tilde(tri,n,t,k)]` over `k = 0..⌊t/2⌋`.
///
/// Needs triangle rows up to `n_max + 1`; refuses to run a file-backed
/// triangle past its stored rows rather than silently checking zeros.
pub fn check_liu_wang(tri: &Triangle, n_max: i64, parallel: bool) -> Result<CriterionReport> {
    assert!(n_max >= 1, "n_max must be at least 1");
    ensure_rows(tri, n_max + 1)?;
    let outcomes = sign_pattern_grid(tri, n_max, parallel, |n| 2 * n, l_tilde);
    let overall = outcomes.iter().all(|o| o.result.admissible);
    Ok(CriterionReport {
        criterion: Criterion::LiuWang,
        triangle: tri.name().to_string(),
        weights: None,
        n_max,
        c1: None,
        outcomes,
        overall,
    })
}

/// Scans `g_0 .. g_(n_upto)` for self-reciprocity of degree `n`.
pub fn self_reciprocal_scan(
    spec: &PolySeqSpec,
    n_upto: i64,
    parallel: bool,
) -> Result<SelfReciprocalScan> {
    assert!(n_upto >= 0, "n_upto must be nonnegative");
    ensure_rows(&spec.triangle, n_upto)?;
    let per_n = map_ordered((0..=n_upto).collect(), parallel, |n| {
        is_self_reciprocal(&spec.gen_poly(n), n)
    });
    let first_failure = per_n.iter().position(|ok| !ok).map(|i| i as i64);
    Ok(SelfReciprocalScan {
        n_upto,
        checked: per_n.len() as u64,
        ok: first_failure.is_none(),
        first_failure,
    })
}

/// Checks the self-reciprocal criterion on `spec`: C1 (palindromic `g_n` for
/// `0 <= n <= n_max + 1`) and C2 (admissible [`sign_pattern`] of
/// `[l_mod(tri,n,t,k)]` for `1 <= n <= n_max`, `0 <= t <= n` only — under C1
/// the upper half `n < t <= 2n` mirrors the lower half).
pub fn check_self_reciprocal(
    spec: &PolySeqSpec,
    n_max: i64,
    parallel: bool,
) -> Result<CriterionReport> {
    assert!(n_max >= 1, "n_max must be at least 1");
    ensure_rows(&spec.triangle, n_max + 1)?;
    let c1 = self_reciprocal_scan(spec, n_max + 1, parallel)?;
    let outcomes = sign_pattern_grid(&spec.triangle, n_max, parallel, |n| n, l_mod);
    let overall = c1.ok && outcomes.iter().all(|o| o.result.admissible);
    Ok(CriterionReport {
        criterion: Criterion::SelfReciprocal,
        triangle: spec.triangle.name().to_string(),
        weights: Some(spec.weights.name().to_string()),
        n_max,
        c1: Some(c1),
        outcomes,
        overall,
    })
}

/// Hand-checked values of `l_mod(sun_a, n, t, 0)` for `n = 1..4`,
/// `0 <= t <= n`, kept as a regression anchor for the operator definitions.
pub const GOLDEN_L_VALUES: [(i64, i64, i64); 14] = [
    (1, 0, 4),
    (1, 1, 0),
    (2, 0, 8),
    (2, 1, 8),
    (2, 2, 0),
    (3, 0, 40),
    (3, 1, 40),
    (3, 2, 46),
    (3, 3, 8),
    (4, 0, 280),
    (4, 1, 336),
    (4, 2, 472),
    (4, 3, 332),
    (4, 4, 60),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenEntry {
    pub n: i64,
    pub t: i64,
    pub expected: Int,
    pub computed: Int,
}

impl GoldenEntry {
    pub fn ok(&self) -> bool {
        self.expected == self.computed
    }
}

/// Recomputes every entry of [`GOLDEN_L_VALUES`] on the builtin `sun_a`
/// triangle.
pub fn golden_table() -> Vec<GoldenEntry> {
    let tri = Triangle::builtin("sun_a").expect("builtin");
    GOLDEN_L_VALUES
        .iter()
        .map(|&(n, t, expected)| GoldenEntry {
            n,
            t,
            expected: Int::from(expected),
            computed: l_mod(&tri, n, t, 0),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::convexity::qlc_difference;
    use crate::sequences::WeightSeq;
    use num::Zero;

    fn ints(values: &[i64]) -> Vec<Int> {
        values.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn l_tilde_small_values() {
        let b = Triangle::builtin("binomial").unwrap();
        let s = Triangle::builtin("sun_a").unwrap();
        // Diagonal: C(3,1)C(1,1) - C(2,1)^2 = 3 - 4.
        assert_eq!(l_tilde(&b, 2, 2, 1), int(-1));
        // Cross: C(3,0)C(1,2) + C(1,0)C(3,2) - 2 C(2,0)C(2,2) = 0 + 3 - 2.
        assert_eq!(l_tilde(&b, 2, 2, 0), int(1));
        // a(2,0)a(0,0) - a(1,0)^2 = 6 - 4.
        assert_eq!(l_tilde(&s, 1, 0, 0), int(2));
    }

    #[test]
    fn l_mod_small_values() {
        let s = Triangle::builtin("sun_a").unwrap();
        assert_eq!(l_mod(&s, 1, 0, 0), int(4));
        assert_eq!(l_mod(&s, 1, 1, 0), int(0));
        assert_eq!(l_mod(&s, 4, 4, 0), int(60));
    }

    #[test]
    #[should_panic(expected = "0 <= k <= t/2")]
    fn operators_reject_k_past_the_diagonal() {
        let b = Triangle::builtin("binomial").unwrap();
        l_tilde(&b, 2, 2, 2);
    }

    #[test]
    #[should_panic(expected = "0 <= t <= 2n")]
    fn operators_reject_t_out_of_range() {
        let b = Triangle::builtin("binomial").unwrap();
        l_mod(&b, 2, 5, 0);
    }

    #[test]
    fn golden_table_reproduced_exactly() {
        let table = golden_table();
        assert_eq!(table.len(), 14);
        for e in &table {
            assert!(e.ok(), "l_mod(sun_a,{},{},0) = {}, want {}", e.n, e.t, e.computed, e.expected);
        }
    }

    #[test]
    fn diagonal_relation_between_the_operators() {
        for tri in [Triangle::builtin("binomial").unwrap(), Triangle::builtin("sun_a").unwrap()] {
            for n in 1..=30i64 {
                for s in 0..=n {
                    let t = 2 * s;
                    assert_eq!(
                        l_mod(&tri, n, t, s),
                        l_tilde(&tri, n, t, s) * 2,
                        "{} n={n} t={t}",
                        tri.name()
                    );
                }
            }
        }
    }

    #[test]
    fn summing_l_tilde_reconstructs_the_product_difference() {
        for tri in [Triangle::builtin("binomial").unwrap(), Triangle::builtin("sun_a").unwrap()] {
            let spec = PolySeqSpec::new(tri.clone(), WeightSeq::builtin("ones").unwrap());
            for n in 1..=30i64 {
                let diff = qlc_difference(
                    &spec.gen_poly(n - 1),
                    &spec.gen_poly(n),
                    &spec.gen_poly(n + 1),
                );
                for t in 0..=2 * n {
                    let mut sum = Int::zero();
                    for k in 0..=t / 2 {
                        sum += l_tilde(&tri, n, t, k);
                    }
                    let direct = diff.coeff(t as usize);
                    assert!(direct.is_integer());
                    assert_eq!(sum, direct.to_integer(), "{} n={n} t={t}", tri.name());
                }
            }
        }
    }

    #[test]
    fn sign_pattern_cases() {
        let r = sign_pattern(&ints(&[5, 3, -2, -7]));
        assert!(r.admissible);
        assert_eq!(r.split_index, Some(1));

        let r = sign_pattern(&ints(&[1, -1, 2]));
        assert!(!r.admissible);
        let v = r.violation.unwrap();
        assert_eq!((v.neg_index, v.pos_index), (1, 2));
        assert_eq!((v.neg_value, v.pos_value), (int(-1), int(2)));

        // Zeros are wildcards: an all-zero row splits anywhere; report the top.
        let r = sign_pattern(&ints(&[0, 0]));
        assert!(r.admissible);
        assert_eq!(r.split_index, Some(1));

        // All-nonpositive rows are admissible with an empty prefix.
        let r = sign_pattern(&ints(&[-1, -2]));
        assert!(r.admissible);
        assert_eq!(r.split_index, Some(-1));

        let r = sign_pattern(&ints(&[0, 0, -1, 0]));
        assert!(r.admissible);
        assert_eq!(r.split_index, Some(1));

        let r = sign_pattern(&ints(&[7]));
        assert_eq!(r.split_index, Some(0));
    }

    #[test]
    fn reported_split_really_splits() {
        // Independent restatement of the invariant on assorted inputs.
        for values in [
            ints(&[5, 3, -2, -7]),
            ints(&[0, 0]),
            ints(&[-1, -2]),
            ints(&[3, 0, 0, -1]),
            ints(&[1, 2, 3]),
            ints(&[0, -1, 0, -2, 0]),
        ] {
            let r = sign_pattern(&values);
            assert!(r.admissible);
            let split = r.split_index.unwrap();
            for (i, v) in values.iter().enumerate() {
                if (i as i64) <= split {
                    assert!(!v.is_negative(), "{values:?} at {i}");
                } else {
                    assert!(!v.is_positive(), "{values:?} at {i}");
                }
            }
            // Largest valid split: one step further must break the prefix.
            if ((split + 1) as usize) < values.len() {
                assert!(values[(split + 1) as usize].is_negative());
            }
        }
    }

    #[test]
    #[should_panic(expected = "empty")]
    fn sign_pattern_rejects_empty_input() {
        sign_pattern(&[]);
    }

    #[test]
    fn liu_wang_grid_on_builtin_triangles() {
        let b = check_liu_wang(&Triangle::builtin("binomial").unwrap(), 20, false).unwrap();
        assert!(b.overall);
        assert_eq!(b.criterion.operator(), "l-tilde");
        // 1 + 2n cells per n.
        assert_eq!(b.outcomes.len() as i64, (1..=20).map(|n| 2 * n + 1).sum::<i64>());

        let s = check_liu_wang(&Triangle::builtin("sun_a").unwrap(), 20, false).unwrap();
        assert!(s.overall);

        let ones = Triangle::from_rule("all-ones", |_, _| int(1));
        let r = check_liu_wang(&ones, 5, false).unwrap();
        assert!(r.overall);
        // Interior rows (t < n) are identically zero; boundary rows pick up
        // out-of-range zeros and are nonzero but still single-signed.
        for o in &r.outcomes {
            if o.t < o.n {
                assert_eq!(o.result.split_index, Some(o.t / 2), "n={} t={}", o.n, o.t);
            }
        }
    }

    #[test]
    fn self_reciprocal_criterion_on_builtin_specs() {
        let sun = PolySeqSpec::new(
            Triangle::builtin("sun_a").unwrap(),
            WeightSeq::builtin("central_binomial").unwrap(),
        );
        let r = check_self_reciprocal(&sun, 20, false).unwrap();
        assert!(r.overall);
        let c1 = r.c1.as_ref().unwrap();
        assert!(c1.ok && c1.n_upto == 21 && c1.checked == 22);
        assert_eq!(r.outcomes.len() as i64, (1..=20).map(|n| n + 1).sum::<i64>());

        let pascal = PolySeqSpec::new(
            Triangle::builtin("binomial").unwrap(),
            WeightSeq::builtin("ones").unwrap(),
        );
        assert!(check_self_reciprocal(&pascal, 10, false).unwrap().overall);
    }

    #[test]
    fn unweighted_sun_rows_fail_the_palindromy_condition() {
        let spec = PolySeqSpec::new(
            Triangle::builtin("sun_a").unwrap(),
            WeightSeq::builtin("ones").unwrap(),
        );
        let r = check_self_reciprocal(&spec, 20, false).unwrap();
        assert!(!r.overall);
        let c1 = r.c1.unwrap();
        assert!(!c1.ok);
        // f_1 = 2 + q is the first non-palindromic row.
        assert_eq!(c1.first_failure, Some(1));
    }

    #[test]
    fn file_triangles_refuse_to_run_past_stored_rows() {
        let entries: Vec<((i64, i64), Int)> = (0..=3)
            .flat_map(|n| (0..=n).map(move |k| ((n, k), crate::arith::binomial(n, k))))
            .collect();
        let tri = Triangle::from_entries("small", entries);
        assert!(check_liu_wang(&tri, 2, false).unwrap().overall);
        let err = check_liu_wang(&tri, 3, false).unwrap_err();
        assert!(err.to_string().contains("rows up to n=4"), "{err}");
    }

    #[test]
    fn parallel_and_sequential_reports_are_identical() {
        let tri = Triangle::builtin("sun_a").unwrap();
        assert_eq!(
            check_liu_wang(&tri, 12, true).unwrap(),
            check_liu_wang(&tri, 12, false).unwrap()
        );
        let spec = PolySeqSpec::new(tri, WeightSeq::builtin("central_binomial").unwrap());
        assert_eq!(
            check_self_reciprocal(&spec, 12, true).unwrap(),
            check_self_reciprocal(&spec, 12, false).unwrap()
        );
    }

    #[test]
    fn criterion_alone_does_not_force_q_log_convexity() {
        // The criterion certifies the step from q-log-convex unweighted rows
        // to the weighted sequence; it is not a standalone q-log-convexity
        // test. This triangle passes C1 and C2 up to n_max = 3 with the unit
        // weights, yet its row polynomials dip negative at n = 2.
        let rows: [&[i64]; 5] = [
            &[2],
            &[1, 1],
            &[1, 3, 1],
            &[6, 1, 1, 6],
            &[100, 72, 1, 72, 100],
        ];
        let entries = rows.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .map(move |(k, &v)| ((n as i64, k as i64), int(v)))
        });
        let tri = Triangle::from_entries("crafted", entries);
        let spec = PolySeqSpec::new(tri, WeightSeq::builtin("ones").unwrap());
        let report = check_self_reciprocal(&spec, 3, false).unwrap();
        assert!(report.overall, "criterion holds on the crafted rows");
        let verdict = crate::convexity::is_q_log_convex_upto(&spec, 3, false);
        let w = verdict.witness.expect("rows are not q-log-convex");
        assert_eq!((w.n, w.t), (2, 2));
        assert_eq!(w.coefficient, crate::arith::rat(-9, 1));
    }
}
