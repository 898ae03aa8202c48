//! JSON run reports: deterministic, exact, and round-trip stable.
//!
//! Every numeric value is serialized as a decimal string so downstream
//! consumers can never corrupt exact integers or rationals through float
//! parsing. Key order is fixed (struct order plus sorted maps), which makes
//! reports byte-comparable once timestamps are stripped.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::rat_str;
use crate::convexity::QlcVerdict;
use crate::criteria::{Criterion, CriterionReport, GoldenEntry, SelfReciprocalScan};
use crate::identities::{GridReport, IdentityCheck};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Checked/failed/skipped tallies, as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Counts {
    pub checked: String,
    pub failed: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl Counts {
    pub fn new(checked: u64, failed: u64) -> Counts {
        Counts {
            checked: checked.to_string(),
            failed: failed.to_string(),
            skipped: None,
        }
    }

    pub fn with_skipped(mut self, skipped: u64) -> Counts {
        self.skipped = Some(skipped.to_string());
        self
    }
}

/// One named check inside a report. The witness pins the first failure with
/// exact values; details carry check-specific exact data even on success.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Section {
    pub check_id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
    pub counts: Counts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<BTreeMap<String, String>>,
}

impl Section {
    pub fn human_line(&self) -> String {
        let mut line = format!(
            "{}: {} (checked {}, failed {}",
            self.check_id,
            self.status.as_str(),
            self.counts.checked,
            self.counts.failed
        );
        if let Some(skipped) = &self.counts.skipped {
            line.push_str(&format!(", skipped {skipped}"));
        }
        line.push(')');
        if let Some(witness) = &self.witness {
            let rendered: Vec<String> =
                witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
            line.push_str(&format!(" witness: {}", rendered.join(" ")));
        }
        line
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Report {
    pub tool_version: String,
    pub config: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub started: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finished: Option<String>,
    pub overall: Status,
    pub sections: Vec<Section>,
}

fn now_rfc3339() -> String {
    chrono::Utc::now().to_rfc3339()
}

impl Report {
    pub fn new(config: impl IntoIterator<Item = (String, String)>) -> Report {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config: config.into_iter().collect(),
            started: Some(now_rfc3339()),
            finished: None,
            overall: Status::Pass,
            sections: Vec::new(),
        }
    }

    /// Appends a section, keeping `overall` the conjunction of section
    /// statuses.
    pub fn push(&mut self, section: Section) {
        if section.status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.sections.push(section);
    }

    pub fn finish(&mut self) {
        self.finished = Some(now_rfc3339());
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    /// The same report with both timestamps removed, for determinism
    /// comparisons between runs.
    pub fn without_timestamps(&self) -> Report {
        Report {
            started: None,
            finished: None,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Report> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write_to(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// Fixed reference values of the operator on the `sun_a` zero column,
/// `n = 1..4`: every value is listed in the details map and any mismatch
/// becomes the witness.
pub fn section_golden_table(entries: &[GoldenEntry]) -> Section {
    let mut details = BTreeMap::new();
    for e in entries {
        details.insert(format!("L_{}(a({},0))", e.t, e.n), e.computed.to_string());
    }
    let failed = entries.iter().filter(|e| !e.ok()).count() as u64;
    let witness = entries.iter().find(|e| !e.ok()).map(|e| {
        BTreeMap::from([
            ("n".to_string(), e.n.to_string()),
            ("t".to_string(), e.t.to_string()),
            ("expected".to_string(), e.expected.to_string()),
            ("computed".to_string(), e.computed.to_string()),
        ])
    });
    Section {
        check_id: "golden-table".to_string(),
        status: Status::of(failed == 0),
        witness,
        counts: Counts::new(entries.len() as u64, failed),
        details: Some(details),
    }
}

/// Palindromicity scan (condition C1) over `0 <= n <= n_upto`.
pub fn section_c1(scan: &SelfReciprocalScan) -> Section {
    let witness = scan
        .first_failure
        .map(|n| BTreeMap::from([("n".to_string(), n.to_string())]));
    Section {
        check_id: "self-reciprocal-c1".to_string(),
        status: Status::of(scan.ok),
        witness,
        counts: Counts::new(scan.checked, u64::from(!scan.ok)),
        details: Some(BTreeMap::from([(
            "n-upto".to_string(),
            scan.n_upto.to_string(),
        )])),
    }
}

/// Sign-pattern grid of a criterion run; the embedded C1 scan, when present,
/// is reported separately via [`section_c1`].
pub fn section_criterion_grid(report: &CriterionReport) -> Section {
    let check_id = match report.criterion {
        Criterion::LiuWang => "liu-wang",
        Criterion::SelfReciprocal => "self-reciprocal-c2",
    };
    let failed = report.violations().count() as u64;
    let witness = report.first_violation().map(|outcome| {
        let mut map = BTreeMap::from([
            ("n".to_string(), outcome.n.to_string()),
            ("t".to_string(), outcome.t.to_string()),
        ]);
        if let Some(v) = &outcome.result.violation {
            map.insert("neg-index".to_string(), v.neg_index.to_string());
            map.insert("neg-value".to_string(), v.neg_value.to_string());
            map.insert("pos-index".to_string(), v.pos_index.to_string());
            map.insert("pos-value".to_string(), v.pos_value.to_string());
        }
        map
    });
    let mut details = BTreeMap::from([
        ("operator".to_string(), report.criterion.operator().to_string()),
        ("triangle".to_string(), report.triangle.clone()),
        ("n-max".to_string(), report.n_max.to_string()),
    ]);
    if let Some(weights) = &report.weights {
        details.insert("weights".to_string(), weights.clone());
    }
    Section {
        check_id: check_id.to_string(),
        status: Status::of(failed == 0),
        witness,
        counts: Counts::new(report.outcomes.len() as u64, failed),
        details: Some(details),
    }
}

/// Both sections of a criterion run, C1 first when the criterion has one.
pub fn sections_criterion(report: &CriterionReport) -> Vec<Section> {
    let mut sections = Vec::new();
    if let Some(scan) = &report.c1 {
        sections.push(section_c1(scan));
    }
    sections.push(section_criterion_grid(report));
    sections
}

/// Coefficientwise q-log-convexity scan.
pub fn section_qlc(verdict: &QlcVerdict) -> Section {
    let witness = verdict.witness.as_ref().map(|w| {
        BTreeMap::from([
            ("n".to_string(), w.n.to_string()),
            ("t".to_string(), w.t.to_string()),
            ("coefficient".to_string(), rat_str(&w.coefficient)),
        ])
    });
    Section {
        check_id: "q-log-convexity".to_string(),
        status: Status::of(verdict.holds),
        witness,
        counts: Counts::new(verdict.checked_coefficients, u64::from(!verdict.holds)),
        details: None,
    }
}

/// The symbolic identity catalog, one pass/fail per identity.
pub fn section_identities(checks: &[IdentityCheck]) -> Section {
    let failed = checks.iter().filter(|c| !c.pass).count() as u64;
    let witness = checks.iter().find(|c| !c.pass).map(|c| {
        BTreeMap::from([
            ("id".to_string(), c.id.to_string()),
            ("lhs".to_string(), c.lhs.to_string()),
            ("rhs".to_string(), c.rhs.to_string()),
            (
                "difference".to_string(),
                c.difference.clone().unwrap_or_default(),
            ),
        ])
    });
    let details = checks
        .iter()
        .map(|c| {
            (
                c.id.to_string(),
                if c.pass { "pass" } else { "fail" }.to_string(),
            )
        })
        .collect();
    Section {
        check_id: "identity-catalog".to_string(),
        status: Status::of(failed == 0),
        witness,
        counts: Counts::new(checks.len() as u64, failed),
        details: Some(details),
    }
}

/// A factorization or sign-claim grid scan.
pub fn section_grid(report: &GridReport) -> Section {
    let witness = report.failures.first().map(|p| {
        let mut map = BTreeMap::from([
            ("n".to_string(), p.n.to_string()),
            ("t".to_string(), p.t.to_string()),
            ("detail".to_string(), p.detail.clone()),
        ]);
        if let Some(k) = p.k {
            map.insert("k".to_string(), k.to_string());
        }
        map
    });
    let details = if report.notes.is_empty() {
        None
    } else {
        Some(BTreeMap::from([(
            "notes".to_string(),
            report.notes.join("; "),
        )]))
    };
    Section {
        check_id: report.id.to_string(),
        status: Status::of(report.ok()),
        witness,
        counts: Counts::new(report.checked, report.failures.len() as u64)
            .with_skipped(report.skipped),
        details,
    }
}
