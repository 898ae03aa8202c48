//! Acceptance suite: ten end-to-end criteria, one test and one printed
//! PASS/FAIL line each. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines and timings.

use std::panic::AssertUnwindSafe;
use std::time::Instant;

use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qconvex::arith::{int, Int, Rat};
use qconvex::convexity::{coeff_a, coeff_b, is_log_convex, is_q_log_convex_upto, qlc_difference};
use qconvex::criteria::{
    check_liu_wang, check_self_reciprocal, golden_table, self_reciprocal_scan,
};
use qconvex::identities::{
    grid_verify_factorization, grid_verify_sign_claims, verify_all, FactorizationGrid,
};
use qconvex::report::{
    section_golden_table, section_grid, section_qlc, sections_criterion, Report,
};
use qconvex::sequences::{PolySeqSpec, Triangle, WeightSeq};

fn criterion<T>(label: &str, budget_ms: Option<u128>, body: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed().as_millis();
    let in_budget = budget_ms.is_none_or(|b| elapsed < b);
    let pass = outcome.is_ok() && in_budget;
    println!(
        "ACCEPTANCE {label}: {} ({elapsed} ms)",
        if pass { "PASS" } else { "FAIL" }
    );
    match outcome {
        Ok(value) => {
            if let Some(budget) = budget_ms {
                assert!(
                    in_budget,
                    "{label}: {elapsed} ms exceeds the {budget} ms budget"
                );
            }
            value
        }
        Err(panic) => std::panic::resume_unwind(panic),
    }
}

fn sun_spec(weights: &str) -> PolySeqSpec {
    PolySeqSpec::new(
        Triangle::builtin("sun_a").unwrap(),
        WeightSeq::builtin(weights).unwrap(),
    )
}

#[test]
fn a01_golden_table_values_reproduce_exactly() {
    criterion("01 golden-table", Some(1_000), || {
        let entries = golden_table();
        assert_eq!(entries.len(), 14);
        for e in &entries {
            assert!(e.ok(), "L_{}(a({},0)) = {} != {}", e.t, e.n, e.computed, e.expected);
        }
    });
}

#[test]
fn a02_weighted_family_is_q_log_convex_to_one_hundred() {
    criterion("02 weighted-q-log-convexity", Some(120_000), || {
        let verdict = is_q_log_convex_upto(&sun_spec("central_binomial"), 100, false);
        assert!(verdict.holds, "witness: {:?}", verdict.witness);
        // 2n + 1 coefficients at each 1 <= n <= 99.
        assert_eq!(verdict.checked_coefficients, 9_999);
    });
}

#[test]
fn a03_unweighted_family_is_q_log_convex_to_one_hundred() {
    criterion("03 unweighted-q-log-convexity", None, || {
        let verdict = is_q_log_convex_upto(&sun_spec("ones"), 100, false);
        assert!(verdict.holds, "witness: {:?}", verdict.witness);
        assert_eq!(verdict.checked_coefficients, 9_999);
    });
}

#[test]
fn a04_generated_polynomials_are_palindromic_to_two_hundred() {
    criterion("04 self-reciprocal-c1", Some(5_000), || {
        let scan = self_reciprocal_scan(&sun_spec("central_binomial"), 200, false).unwrap();
        assert!(scan.ok, "first failure at n = {:?}", scan.first_failure);
        assert_eq!(scan.checked, 201);
    });
}

#[test]
fn a05_sign_pattern_grids_admissible_to_fifty() {
    criterion("05 sign-pattern-grids", None, || {
        let c2 = check_self_reciprocal(&sun_spec("central_binomial"), 50, false).unwrap();
        assert!(c2.overall);
        assert_eq!(c2.violations().count(), 0);
        // One cell for each 1 <= n <= 50, 0 <= t <= n.
        assert_eq!(c2.outcomes.len(), 1_325);

        let lw = check_liu_wang(&Triangle::builtin("binomial").unwrap(), 50, false).unwrap();
        assert!(lw.overall);
        assert_eq!(lw.violations().count(), 0);
        // One cell for each 1 <= n <= 50, 0 <= t <= 2n.
        assert_eq!(lw.outcomes.len(), 2_600);
    });
}

#[test]
fn a06_identity_catalog_passes_exactly() {
    criterion("06 identity-catalog", Some(5_000), || {
        let checks = verify_all();
        assert_eq!(checks.len(), 46);
        for check in &checks {
            assert!(
                check.pass,
                "{}: {} != {} ({})",
                check.id,
                check.lhs,
                check.rhs,
                check.difference.clone().unwrap_or_default()
            );
        }
    });
}

#[test]
fn a07_factorization_grids_hold_to_fifty() {
    criterion("07 factorization-grids", None, || {
        for which in [FactorizationGrid::Binomial, FactorizationGrid::SunA] {
            let report = grid_verify_factorization(which, 50, false);
            assert!(
                report.ok(),
                "{}: first failure {:?}",
                report.id,
                report.failures.first()
            );
            assert_eq!(report.skipped, 0, "{}: unexpected skips", report.id);
            assert!(report.checked > 0);
        }
    });
}

#[test]
fn a08_operator_sums_match_direct_expansion_to_fifty() {
    criterion("08 coefficient-oracles", None, || {
        let unweighted = sun_spec("ones");
        let weighted = sun_spec("central_binomial");
        let tri = &unweighted.triangle;
        for n in 1..=50i64 {
            let diff_f = qlc_difference(
                &unweighted.gen_poly(n - 1),
                &unweighted.gen_poly(n),
                &unweighted.gen_poly(n + 1),
            );
            let diff_g = qlc_difference(
                &weighted.gen_poly(n - 1),
                &weighted.gen_poly(n),
                &weighted.gen_poly(n + 1),
            );
            for t in 0..=2 * n {
                let a = coeff_a(tri, n, t);
                assert_eq!(
                    Rat::from(a),
                    diff_f.coeff(t as usize),
                    "coeff_a(sun_a,{n},{t})"
                );
                let b = coeff_b(&weighted, n, t);
                assert!(b.denom().is_one(), "coeff_b({n},{t}) not an integer");
                assert_eq!(b, diff_g.coeff(t as usize), "coeff_b({n},{t})");
                assert_eq!(
                    b,
                    coeff_b(&weighted, n, 2 * n - t),
                    "coeff_b symmetry at ({n},{t})"
                );
            }
        }
    });
}

enum CorpusKind {
    Plain,
    Palindromic,
    CentralTwisted,
}

fn random_triangle(rng: &mut ChaCha8Rng, kind: &CorpusKind, max_n: i64) -> Vec<((i64, i64), Int)> {
    let mut entries = Vec::new();
    for n in 0..=max_n {
        let row: Vec<Int> = match kind {
            CorpusKind::Plain => (0..=n).map(|_| int(rng.random_range(1..=30))).collect(),
            CorpusKind::Palindromic => {
                let mut row: Vec<Int> = (0..=n).map(|_| int(0)).collect();
                for k in 0..=(n as usize) / 2 {
                    let v = int(rng.random_range(1..=30));
                    row[n as usize - k] = v.clone();
                    row[k] = v;
                }
                row
            }
            // Palindromic core times the reversed central-binomial weights:
            // with the central_binomial weight sequence these rows generate
            // palindromic polynomials, exercising C1-true instances.
            CorpusKind::CentralTwisted => {
                let mut core: Vec<Int> = (0..=n).map(|_| int(0)).collect();
                for k in 0..=(n as usize) / 2 {
                    let v = int(rng.random_range(1..=9));
                    core[n as usize - k] = v.clone();
                    core[k] = v;
                }
                (0..=n)
                    .map(|k| {
                        core[k as usize].clone()
                            * qconvex::arith::binomial(2 * (n - k), n - k)
                    })
                    .collect()
            }
        };
        for (k, v) in row.into_iter().enumerate() {
            entries.push(((n, k as i64), v));
        }
    }
    entries
}

#[test]
fn a09_criterion_soundness_on_builtin_and_random_specs() {
    criterion("09 criterion-soundness", None, || {
        let max_n = 12i64;
        let dir = tempfile::tempdir().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(20_260_814);

        let mut triangles = Vec::new();
        for kind in [
            CorpusKind::Plain,
            CorpusKind::Palindromic,
            CorpusKind::CentralTwisted,
        ] {
            for i in 0..8 {
                let entries = random_triangle(&mut rng, &kind, max_n);
                let tri = Triangle::from_entries(format!("random-{i}"), entries);
                // The corpus goes through the CSV path end to end.
                let path = dir.path().join(format!("{}-{i}.csv", triangles.len()));
                std::fs::write(&path, tri.to_csv(max_n)).unwrap();
                triangles.push(Triangle::load_csv(&path).unwrap());
            }
        }
        assert!(triangles.len() >= 20);
        for name in Triangle::builtin_names() {
            triangles.push(Triangle::builtin(name).unwrap());
        }

        let mut instances = 0u32;
        let mut antecedent_hits = 0u32;
        for tri in &triangles {
            for weights in WeightSeq::builtin_names() {
                let spec = PolySeqSpec::new(
                    tri.clone(),
                    WeightSeq::builtin(weights).unwrap(),
                );
                instances += 1;
                let crit = check_self_reciprocal(&spec, max_n - 1, false).unwrap();
                let weights_ok = is_log_convex(&spec.weights.prefix(max_n), true)
                    .unwrap()
                    .holds;
                let weighted = is_q_log_convex_upto(&spec, max_n, false);
                if crit.overall && weights_ok {
                    antecedent_hits += 1;
                    // The full hypothesis set: criterion + log-convex weights
                    // + q-log-convex unweighted rows forces the conclusion.
                    let unweighted = is_q_log_convex_upto(
                        &PolySeqSpec::new(tri.clone(), WeightSeq::builtin("ones").unwrap()),
                        max_n,
                        false,
                    );
                    if unweighted.holds {
                        assert!(
                            weighted.holds,
                            "transfer failed on {} + {}: {:?}",
                            tri.name(),
                            weights,
                            weighted.witness
                        );
                    }
                    // The stronger reading (no unweighted hypothesis) as the
                    // acceptance property states it.
                    assert!(
                        weighted.holds,
                        "criterion passed but q-log-convexity failed on {} + {}: {:?}",
                        tri.name(),
                        weights,
                        weighted.witness
                    );
                }
            }
        }
        assert!(instances >= 78, "corpus too small: {instances}");
        assert!(
            antecedent_hits >= 2,
            "corpus never exercised the criterion: {antecedent_hits}"
        );
    });
}

#[test]
fn a10_parallel_and_sequential_reports_are_identical() {
    criterion("10 determinism", None, || {
        let build = |parallel: bool| {
            let spec = sun_spec("central_binomial");
            let mut report = Report::new([
                ("command".to_string(), "acceptance-10".to_string()),
                ("n-max".to_string(), "mixed".to_string()),
            ]);
            report.push(section_golden_table(&golden_table()));
            report.push(section_qlc(&is_q_log_convex_upto(&spec, 100, parallel)));
            for s in sections_criterion(&check_self_reciprocal(&spec, 50, parallel).unwrap()) {
                report.push(s);
            }
            for s in sections_criterion(
                &check_liu_wang(&Triangle::builtin("binomial").unwrap(), 50, parallel).unwrap(),
            ) {
                report.push(s);
            }
            for which in [FactorizationGrid::Binomial, FactorizationGrid::SunA] {
                report.push(section_grid(&grid_verify_factorization(which, 50, parallel)));
            }
            for grid in grid_verify_sign_claims(60, parallel) {
                report.push(section_grid(&grid));
            }
            report.finish();
            report.without_timestamps()
        };
        let sequential = build(false);
        let parallel = build(true);
        assert!(sequential.passed());
        assert_eq!(sequential, parallel);
        assert_eq!(sequential.to_json(), parallel.to_json());
    });
}
