//! Triangular arrays, weight sequences, and the polynomial sequences they
//! generate.
//!
//! A [`Triangle`] is a nonnegative array `a(n,k)` indexed by `n >= 0`,
//! `0 <= k <= n`, with `a(n,k) = 0` outside that range by convention. A
//! [`WeightSeq`] is a positive sequence `u_k`. Together they generate
//! `g_n(q) = sum_k a(n,k) u_k q^k` via [`PolySeqSpec::gen_poly`].
//!
//! Rule-based triangles memoize computed entries; the memo tables tolerate
//! concurrent readers and concurrent idempotent fills, so grid checks can run
//! on a thread pool.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use dashmap::DashMap;
use num::{Signed, Zero};

use crate::arith::{binomial, Int, Poly, Rat};
use crate::{Error, Result};

enum TriangleSource {
    Rule(Box<dyn Fn(i64, i64) -> Int + Send + Sync>),
    Table {
        entries: HashMap<(i64, i64), Int>,
        max_n: i64,
    },
}

struct TriangleInner {
    name: String,
    source: TriangleSource,
    cache: DashMap<(i64, i64), Int>,
}

/// Triangular integer array with out-of-range entries equal to zero.
#[derive(Clone)]
pub struct Triangle {
    inner: Arc<TriangleInner>,
}

impl Triangle {
    /// Wraps a closed-form rule; entries are memoized on first use.
    pub fn from_rule(
        name: impl Into<String>,
        rule: impl Fn(i64, i64) -> Int + Send + Sync + 'static,
    ) -> Self {
        Triangle {
            inner: Arc::new(TriangleInner {
                name: name.into(),
                source: TriangleSource::Rule(Box::new(rule)),
                cache: DashMap::new(),
            }),
        }
    }

    /// Wraps an explicit table of entries; `max_n` is the largest stored row
    /// (−1 when empty).
    pub fn from_entries(
        name: impl Into<String>,
        entries: impl IntoIterator<Item = ((i64, i64), Int)>,
    ) -> Self {
        let entries: HashMap<(i64, i64), Int> = entries.into_iter().collect();
        let max_n = entries.keys().map(|&(n, _)| n).max().unwrap_or(-1);
        Triangle {
            inner: Arc::new(TriangleInner {
                name: name.into(),
                source: TriangleSource::Table { entries, max_n },
                cache: DashMap::new(),
            }),
        }
    }

    /// Looks up a builtin triangle by name.
    pub fn builtin(name: &str) -> Result<Triangle> {
        match name {
            "binomial" => Ok(Triangle::from_rule("binomial", binomial)),
            "sun_a" => Ok(Triangle::from_rule("sun_a", |n, k| {
                binomial(n, k) * binomial(2 * (n - k), n - k)
            })),
            other => Err(Error::UnknownTriangle(other.to_string())),
        }
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["binomial", "sun_a"]
    }

    /// Loads a triangle from a CSV file with rows `n,k,value`.
    ///
    /// An optional `n,k,value` header is skipped. Entries not listed are zero.
    /// Rows outside `0 <= k <= n` are rejected unless their value is zero;
    /// duplicate rows are rejected when their values conflict.
    pub fn load_csv(path: impl AsRef<Path>) -> Result<Triangle> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let mut entries: HashMap<(i64, i64), Int> = HashMap::new();
        let mut lines_seen = 0usize;
        let fail = |line: usize, msg: String| Error::CsvFormat {
            path: path.to_path_buf(),
            line,
            msg,
        };
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            lines_seen += 1;
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if lines_seen == 1 && fields == ["n", "k", "value"] {
                continue;
            }
            if fields.len() != 3 {
                return Err(fail(
                    line_no,
                    format!("expected 3 comma-separated fields, found {}", fields.len()),
                ));
            }
            let n: i64 = fields[0]
                .parse()
                .map_err(|e| fail(line_no, format!("bad n `{}`: {e}", fields[0])))?;
            let k: i64 = fields[1]
                .parse()
                .map_err(|e| fail(line_no, format!("bad k `{}`: {e}", fields[1])))?;
            let value: Int = fields[2]
                .parse()
                .map_err(|e| fail(line_no, format!("bad value `{}`: {e}", fields[2])))?;
            if n < 0 || k < 0 || k > n {
                if value.is_zero() {
                    continue;
                }
                return Err(fail(
                    line_no,
                    format!("nonzero entry ({n},{k}) outside 0 <= k <= n"),
                ));
            }
            if let Some(existing) = entries.get(&(n, k)) {
                if *existing != value {
                    return Err(Error::CsvConflict {
                        path: path.to_path_buf(),
                        line: line_no,
                        n,
                        k,
                        existing: existing.to_string(),
                        new: value.to_string(),
                    });
                }
                continue;
            }
            entries.insert((n, k), value);
        }
        Ok(Triangle::from_entries(name, entries))
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    /// Largest stored row for table-backed triangles; `None` when unbounded.
    pub fn max_n(&self) -> Option<i64> {
        match &self.inner.source {
            TriangleSource::Rule(_) => None,
            TriangleSource::Table { max_n, .. } => Some(*max_n),
        }
    }

    /// Entry `a(n,k)`; zero outside `0 <= k <= n`. Panics when `n < 0`.
    pub fn value(&self, n: i64, k: i64) -> Int {
        assert!(n >= 0, "triangle `{}` queried at n={n}", self.inner.name);
        if k < 0 || k > n {
            return Int::zero();
        }
        match &self.inner.source {
            TriangleSource::Table { entries, .. } => {
                entries.get(&(n, k)).cloned().unwrap_or_else(Int::zero)
            }
            TriangleSource::Rule(rule) => self
                .inner
                .cache
                .entry((n, k))
                .or_insert_with(|| rule(n, k))
                .clone(),
        }
    }

    /// Serializes rows `0..=max_n` in CSV form (with header).
    pub fn to_csv(&self, max_n: i64) -> String {
        let mut out = String::from("n,k,value\n");
        for n in 0..=max_n {
            for k in 0..=n {
                writeln!(out, "{n},{k},{}", self.value(n, k)).unwrap();
            }
        }
        out
    }
}

impl std::fmt::Debug for Triangle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Triangle")
            .field("name", &self.inner.name)
            .field("max_n", &self.max_n())
            .finish()
    }
}

struct WeightInner {
    name: String,
    rule: Box<dyn Fn(i64) -> Int + Send + Sync>,
    cache: DashMap<i64, Int>,
}

/// Positive weight sequence `u_k`, memoized like [`Triangle`].
#[derive(Clone)]
pub struct WeightSeq {
    inner: Arc<WeightInner>,
}

impl WeightSeq {
    pub fn from_rule(
        name: impl Into<String>,
        rule: impl Fn(i64) -> Int + Send + Sync + 'static,
    ) -> Self {
        WeightSeq {
            inner: Arc::new(WeightInner {
                name: name.into(),
                rule: Box::new(rule),
                cache: DashMap::new(),
            }),
        }
    }

    /// Looks up a builtin weight sequence by name.
    pub fn builtin(name: &str) -> Result<WeightSeq> {
        match name {
            "central_binomial" => Ok(WeightSeq::from_rule("central_binomial", |k| {
                binomial(2 * k, k)
            })),
            "catalan" => Ok(WeightSeq::from_rule("catalan", |k| {
                binomial(2 * k, k) / Int::from(k + 1)
            })),
            "ones" => Ok(WeightSeq::from_rule("ones", |_| Int::from(1))),
            other => Err(Error::UnknownWeights(other.to_string())),
        }
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["central_binomial", "catalan", "ones"]
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    /// Weight `u_k`; panics when `k < 0` or the rule produces a non-positive
    /// value (weights are positive in every use here).
    pub fn value(&self, k: i64) -> Int {
        assert!(k >= 0, "weights `{}` queried at k={k}", self.inner.name);
        let v = self
            .inner
            .cache
            .entry(k)
            .or_insert_with(|| (self.inner.rule)(k))
            .clone();
        assert!(
            v.is_positive(),
            "weights `{}` not positive at k={k}: {v}",
            self.inner.name
        );
        v
    }

    /// Weights `u_0..=u_max` as a vector.
    pub fn prefix(&self, max: i64) -> Vec<Int> {
        (0..=max).map(|k| self.value(k)).collect()
    }
}

impl std::fmt::Debug for WeightSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WeightSeq")
            .field("name", &self.inner.name)
            .finish()
    }
}

/// A triangle together with weights: the data generating `g_n(q)`.
#[derive(Clone, Debug)]
pub struct PolySeqSpec {
    pub triangle: Triangle,
    pub weights: WeightSeq,
}

impl PolySeqSpec {
    pub fn new(triangle: Triangle, weights: WeightSeq) -> Self {
        PolySeqSpec { triangle, weights }
    }

    /// The generated polynomial `g_n(q) = sum_k a(n,k) u_k q^k`.
    pub fn gen_poly(&self, n: i64) -> Poly {
        assert!(n >= 0, "gen_poly: negative index n={n}");
        let coeffs = (0..=n)
            .map(|k| Rat::from_integer(self.triangle.value(n, k) * self.weights.value(k)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Storage bound inherited from a table-backed triangle, if any.
    pub fn max_n(&self) -> Option<i64> {
        self.triangle.max_n()
    }
}

/// Guards table-backed triangles against silently checking zero rows: errors
/// unless `tri` can answer queries for every row up to `needed`.
pub fn ensure_rows(tri: &Triangle, needed: i64) -> Result<()> {
    if let Some(stored) = tri.max_n() {
        if stored < needed {
            return Err(Error::TriangleTooSmall {
                name: tri.name().to_string(),
                stored,
                needed,
            });
        }
    }
    Ok(())
}

/// Resolves a builtin triangle name or a path to a CSV file.
pub fn resolve_triangle(name_or_path: &str) -> Result<Triangle> {
    if Triangle::builtin_names().contains(&name_or_path) {
        return Triangle::builtin(name_or_path);
    }
    let path = PathBuf::from(name_or_path);
    if path.exists()
        || name_or_path.contains(std::path::MAIN_SEPARATOR)
        || name_or_path.ends_with(".csv")
    {
        return Triangle::load_csv(&path);
    }
    Err(Error::UnknownTriangle(name_or_path.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use std::io::Write;

    #[test]
    fn builtin_triangle_values() {
        let b = Triangle::builtin("binomial").unwrap();
        assert_eq!(b.value(5, 2), int(10));
        let a = Triangle::builtin("sun_a").unwrap();
        assert_eq!(a.value(2, 0), int(6));
        assert_eq!(a.value(2, 1), int(4));
        assert_eq!(a.value(0, 1), int(0));
        assert_eq!(a.value(4, 0), int(70));
    }

    #[test]
    #[should_panic(expected = "queried at n=-1")]
    fn negative_row_panics() {
        Triangle::builtin("binomial").unwrap().value(-1, 0);
    }

    #[test]
    fn builtin_weights() {
        let u = WeightSeq::builtin("central_binomial").unwrap();
        assert_eq!(u.prefix(4), vec![int(1), int(2), int(6), int(20), int(70)]);
        let c = WeightSeq::builtin("catalan").unwrap();
        assert_eq!(c.prefix(5), vec![int(1), int(1), int(2), int(5), int(14), int(42)]);
        let o = WeightSeq::builtin("ones").unwrap();
        assert_eq!(o.value(17), int(1));
    }

    #[test]
    fn unknown_names_error() {
        assert!(Triangle::builtin("nope").is_err());
        assert!(WeightSeq::builtin("nope").is_err());
    }

    fn sun_spec() -> PolySeqSpec {
        PolySeqSpec::new(
            Triangle::builtin("sun_a").unwrap(),
            WeightSeq::builtin("central_binomial").unwrap(),
        )
    }

    #[test]
    fn generated_polynomials_match_direct_expansion() {
        let spec = sun_spec();
        assert_eq!(spec.gen_poly(0), Poly::from_ints(&[1]));
        assert_eq!(spec.gen_poly(1), Poly::from_ints(&[2, 2]));
        assert_eq!(spec.gen_poly(2), Poly::from_ints(&[6, 8, 6]));
        // Row 3 by hand: C(3,k)*C(2k,k)*C(6-2k,3-k) for k = 0..3.
        assert_eq!(spec.gen_poly(3), Poly::from_ints(&[20, 36, 36, 20]));

        let f = PolySeqSpec::new(
            Triangle::builtin("sun_a").unwrap(),
            WeightSeq::builtin("ones").unwrap(),
        );
        assert_eq!(f.gen_poly(2), Poly::from_ints(&[6, 4, 1]));
    }

    #[test]
    fn binomial_with_ones_gives_powers_of_one_plus_q() {
        let spec = PolySeqSpec::new(
            Triangle::builtin("binomial").unwrap(),
            WeightSeq::builtin("ones").unwrap(),
        );
        let one_plus_q = Poly::from_ints(&[1, 1]);
        let mut power = Poly::from_ints(&[1]);
        for n in 0..=30 {
            assert_eq!(spec.gen_poly(n), power, "n={n}");
            power = &power * &one_plus_q;
        }
    }

    #[test]
    fn weighted_sun_rows_are_symmetric() {
        let spec = sun_spec();
        for n in 0..=100i64 {
            for k in 0..=n {
                let left = spec.triangle.value(n, k) * spec.weights.value(k);
                let right = spec.triangle.value(n, n - k) * spec.weights.value(n - k);
                assert_eq!(left, right, "n={n} k={k}");
            }
        }
    }

    fn write_temp_csv(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f.flush().unwrap();
        f
    }

    #[test]
    fn csv_roundtrip_preserves_all_values() {
        let sun = Triangle::builtin("sun_a").unwrap();
        let file = write_temp_csv(&sun.to_csv(10));
        let loaded = Triangle::load_csv(file.path()).unwrap();
        assert_eq!(loaded.max_n(), Some(10));
        for n in 0..=10 {
            for k in -1..=n + 1 {
                assert_eq!(loaded.value(n, k), sun.value(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn csv_small_example_and_zero_extension() {
        let file = write_temp_csv("0,0,1\n1,0,2\n1,1,1\n");
        let tri = Triangle::load_csv(file.path()).unwrap();
        assert_eq!(tri.value(1, 0), int(2));
        assert_eq!(tri.value(1, 1), int(1));
        assert_eq!(tri.value(5, 3), int(0));
        assert_eq!(tri.max_n(), Some(1));
    }

    #[test]
    fn csv_header_is_optional() {
        let with = write_temp_csv("n,k,value\n0,0,7\n");
        let without = write_temp_csv("0,0,7\n");
        assert_eq!(
            Triangle::load_csv(with.path()).unwrap().value(0, 0),
            Triangle::load_csv(without.path()).unwrap().value(0, 0)
        );
    }

    #[test]
    fn csv_empty_file_is_the_zero_triangle() {
        let file = write_temp_csv("");
        let tri = Triangle::load_csv(file.path()).unwrap();
        assert_eq!(tri.max_n(), Some(-1));
        assert_eq!(tri.value(3, 1), int(0));
    }

    #[test]
    fn csv_errors_carry_line_numbers() {
        let file = write_temp_csv("0,0,1\n1,2\n");
        let err = Triangle::load_csv(file.path()).unwrap_err();
        assert!(err.to_string().contains(":2:"), "{err}");

        let file = write_temp_csv("0,0,1\n0,0,2\n");
        let err = Triangle::load_csv(file.path()).unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");

        let file = write_temp_csv("1,5,3\n");
        let err = Triangle::load_csv(file.path()).unwrap_err();
        assert!(err.to_string().contains("outside"), "{err}");

        // A duplicate with the same value and out-of-range zeros are fine.
        let file = write_temp_csv("0,0,1\n0,0,1\n2,7,0\n");
        assert!(Triangle::load_csv(file.path()).is_ok());
    }

    #[test]
    fn csv_accepts_values_beyond_u64() {
        let file = write_temp_csv("0,0,123456789012345678901234567890\n");
        let tri = Triangle::load_csv(file.path()).unwrap();
        assert_eq!(
            tri.value(0, 0).to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn resolve_prefers_builtins_then_paths() {
        assert_eq!(resolve_triangle("sun_a").unwrap().name(), "sun_a");
        let file = write_temp_csv("0,0,1\n");
        let tri = resolve_triangle(file.path().to_str().unwrap()).unwrap();
        assert_eq!(tri.max_n(), Some(0));
        assert!(resolve_triangle("not_a_builtin").is_err());
    }
}
