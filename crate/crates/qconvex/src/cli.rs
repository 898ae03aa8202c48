//! Command-line front end: argument parsing, check orchestration, report
//! printing and persistence.
//!
//! Exit codes: 0 when every section passes, 1 when any check fails, 2 for
//! usage or configuration errors (including unreadable inputs and unwritable
//! outputs).

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::convexity::is_q_log_convex_upto;
use crate::criteria::{check_liu_wang, check_self_reciprocal, golden_table, self_reciprocal_scan};
use crate::identities::{
    grid_verify_factorization, grid_verify_sign_claims, verify_all, FactorizationGrid,
};
use crate::report::{
    section_c1, section_golden_table, section_grid, section_identities, section_qlc,
    sections_criterion, Counts, Report, Section, Status,
};
use crate::sequences::{ensure_rows, resolve_triangle, PolySeqSpec, WeightSeq};
use crate::Result;

/// Environment variable naming the worker count used by `--parallel` runs.
pub const THREADS_ENV: &str = "QCONVEX_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "qconvex",
    version,
    about = "Exact checkers for log-convexity and q-log-convexity of combinatorial triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct SpecArgs {
    /// Builtin triangle name or path to a CSV triangle file.
    #[arg(long, default_value = "sun_a")]
    triangle: String,
    /// Builtin weight sequence applied as `u_k q^k` across each row.
    #[arg(long, default_value = "central_binomial")]
    weights: String,
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    /// Run grid scans across worker threads (QCONVEX_THREADS sets the count).
    #[arg(long)]
    parallel: bool,
    /// Write the JSON report here in addition to the printed summary.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full check of the central-binomial-weighted `sun_a` family: reference
    /// operator values, palindromicity, and q-log-convexity.
    VerifySun {
        /// Largest generated polynomial index.
        #[arg(long = "max-n", default_value_t = 100, value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Palindromicity of every generated polynomial `g_0 .. g_max-n`.
    CheckC1 {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest generated polynomial index.
        #[arg(long = "max-n", default_value_t = 50, value_parser = clap::value_parser!(i64).range(0..))]
        max_n: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Self-reciprocal criterion: palindromicity plus admissible sign
    /// patterns of the halved-diagonal operator on `0 <= t <= n`.
    CheckC2 {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest row index scanned by the grid.
        #[arg(long = "max-n", default_value_t = 50, value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Liu-Wang criterion: admissible sign patterns of the split operator on
    /// the full range `0 <= t <= 2n`.
    CheckLiuWang {
        /// Builtin triangle name or path to a CSV triangle file.
        #[arg(long, default_value = "binomial")]
        triangle: String,
        /// Largest row index scanned by the grid.
        #[arg(long = "max-n", default_value_t = 50, value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Symbolic identity catalog plus factorization and sign-claim grids.
    Identities {
        /// Largest row index for the factorization grids.
        #[arg(long = "max-n", default_value_t = 50, value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        /// Largest row index for the scalar sign-claim grids.
        #[arg(long = "sign-max-n", default_value_t = 200, value_parser = clap::value_parser!(i64).range(5..))]
        sign_max_n: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Coefficientwise q-log-convexity of the generated polynomials.
    Qlc {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest generated polynomial index.
        #[arg(long = "max-n", default_value_t = 100, value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print the generated polynomials `g_0 .. g_max-n`.
    Seq {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest generated polynomial index.
        #[arg(long = "max-n", default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        max_n: i64,
        /// Write the JSON report here in addition to the printed polynomials.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses arguments, runs the selected checks, prints a summary, and maps the
/// outcome onto the exit-code contract.
pub fn run_cli<I: IntoIterator<Item = String>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn configure_threads(parallel: bool) {
    if !parallel {
        return;
    }
    if let Ok(value) = std::env::var(THREADS_ENV) {
        match value.parse::<usize>() {
            Ok(threads) if threads >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
            _ => eprintln!("warning: ignoring {THREADS_ENV}={value} (want a positive integer)"),
        }
    }
}

fn config_echo(
    command: &str,
    entries: impl IntoIterator<Item = (&'static str, String)>,
) -> BTreeMap<String, String> {
    let mut map = BTreeMap::from([("command".to_string(), command.to_string())]);
    for (key, value) in entries {
        map.insert(key.to_string(), value);
    }
    map
}

fn resolve_spec(args: &SpecArgs) -> Result<PolySeqSpec> {
    Ok(PolySeqSpec::new(
        resolve_triangle(&args.triangle)?,
        WeightSeq::builtin(&args.weights)?,
    ))
}

fn run_command(command: Command) -> Result<i32> {
    let (report, extra_lines, run) = build_report(command)?;
    for line in &extra_lines {
        println!("{line}");
    }
    for section in &report.sections {
        println!("{}", section.human_line());
    }
    println!("overall: {}", report.overall.as_str());
    if let Some(path) = run {
        report.write_to(&path)?;
        println!("report written to {}", path.display());
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn build_report(command: Command) -> Result<(Report, Vec<String>, Option<PathBuf>)> {
    match command {
        Command::VerifySun { max_n, run } => {
            configure_threads(run.parallel);
            let spec = PolySeqSpec::new(
                resolve_triangle("sun_a")?,
                WeightSeq::builtin("central_binomial")?,
            );
            let mut report = Report::new(config_echo(
                "verify-sun",
                [
                    ("n-max", max_n.to_string()),
                    ("parallel", run.parallel.to_string()),
                    ("triangle", "sun_a".to_string()),
                    ("weights", "central_binomial".to_string()),
                ],
            ));
            report.push(section_golden_table(&golden_table()));
            report.push(section_c1(&self_reciprocal_scan(
                &spec,
                max_n,
                run.parallel,
            )?));
            report.push(section_qlc(&is_q_log_convex_upto(
                &spec,
                max_n,
                run.parallel,
            )));
            report.finish();
            Ok((report, Vec::new(), run.out))
        }
        Command::CheckC1 { spec, max_n, run } => {
            configure_threads(run.parallel);
            let seq_spec = resolve_spec(&spec)?;
            let mut report = Report::new(config_echo(
                "check-c1",
                [
                    ("n-max", max_n.to_string()),
                    ("parallel", run.parallel.to_string()),
                    ("triangle", spec.triangle.clone()),
                    ("weights", spec.weights.clone()),
                ],
            ));
            report.push(section_c1(&self_reciprocal_scan(
                &seq_spec,
                max_n,
                run.parallel,
            )?));
            report.finish();
            Ok((report, Vec::new(), run.out))
        }
        Command::CheckC2 { spec, max_n, run } => {
            configure_threads(run.parallel);
            let seq_spec = resolve_spec(&spec)?;
            let mut report = Report::new(config_echo(
                "check-c2",
                [
                    ("n-max", max_n.to_string()),
                    ("parallel", run.parallel.to_string()),
                    ("triangle", spec.triangle.clone()),
                    ("weights", spec.weights.clone()),
                ],
            ));
            for section in sections_criterion(&check_self_reciprocal(
                &seq_spec,
                max_n,
                run.parallel,
            )?) {
                report.push(section);
            }
            report.finish();
            Ok((report, Vec::new(), run.out))
        }
        Command::CheckLiuWang {
            triangle,
            max_n,
            run,
        } => {
            configure_threads(run.parallel);
            let tri = resolve_triangle(&triangle)?;
            let mut report = Report::new(config_echo(
                "check-liu-wang",
                [
                    ("n-max", max_n.to_string()),
                    ("parallel", run.parallel.to_string()),
                    ("triangle", triangle.clone()),
                ],
            ));
            for section in sections_criterion(&check_liu_wang(&tri, max_n, run.parallel)?) {
                report.push(section);
            }
            report.finish();
            Ok((report, Vec::new(), run.out))
        }
        Command::Identities {
            max_n,
            sign_max_n,
            run,
        } => {
            configure_threads(run.parallel);
            let mut report = Report::new(config_echo(
                "identities",
                [
                    ("n-max", max_n.to_string()),
                    ("parallel", run.parallel.to_string()),
                    ("sign-max-n", sign_max_n.to_string()),
                ],
            ));
            report.push(section_identities(&verify_all()));
            for which in [FactorizationGrid::Binomial, FactorizationGrid::SunA] {
                report.push(section_grid(&grid_verify_factorization(
                    which,
                    max_n,
                    run.parallel,
                )));
            }
            for grid in grid_verify_sign_claims(sign_max_n, run.parallel) {
                report.push(section_grid(&grid));
            }
            report.finish();
            Ok((report, Vec::new(), run.out))
        }
        Command::Qlc { spec, max_n, run } => {
            configure_threads(run.parallel);
            let seq_spec = resolve_spec(&spec)?;
            ensure_rows(&seq_spec.triangle, max_n)?;
            let mut report = Report::new(config_echo(
                "qlc",
                [
                    ("n-max", max_n.to_string()),
                    ("parallel", run.parallel.to_string()),
                    ("triangle", spec.triangle.clone()),
                    ("weights", spec.weights.clone()),
                ],
            ));
            report.push(section_qlc(&is_q_log_convex_upto(
                &seq_spec,
                max_n,
                run.parallel,
            )));
            report.finish();
            Ok((report, Vec::new(), run.out))
        }
        Command::Seq { spec, max_n, out } => {
            let seq_spec = resolve_spec(&spec)?;
            ensure_rows(&seq_spec.triangle, max_n)?;
            let mut report = Report::new(config_echo(
                "seq",
                [
                    ("n-max", max_n.to_string()),
                    ("triangle", spec.triangle.clone()),
                    ("weights", spec.weights.clone()),
                ],
            ));
            let mut lines = Vec::new();
            let mut details = BTreeMap::new();
            for n in 0..=max_n {
                let poly = seq_spec.gen_poly(n);
                lines.push(format!("g_{n} = {poly}"));
                details.insert(format!("g_{n}"), poly.to_string());
            }
            report.push(Section {
                check_id: "sequence-values".to_string(),
                status: Status::Pass,
                witness: None,
                counts: Counts::new((max_n + 1) as u64, 0),
                details: Some(details),
            });
            report.finish();
            Ok((report, lines, out))
        }
    }
}
