//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::ser::Serializer;
use serde::Serialize;

use crate::quadrature::Orientation;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Residual of a single case. Exact checks report `"exact-zero"` or the
/// nonzero residual rendered as text; float checks report a number.
#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    ExactZero,
    ExactNonzero(String),
    Float(f64),
    None,
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Residual::ExactZero => s.serialize_str("exact-zero"),
            Residual::ExactNonzero(r) => s.serialize_str(r),
            Residual::Float(x) if x.is_finite() => s.serialize_f64(*x),
            Residual::Float(x) => s.serialize_str(&x.to_string()),
            Residual::None => s.serialize_none(),
        }
    }
}

impl Residual {
    pub fn exact(zero: bool, render: impl FnOnce() -> String) -> Self {
        if zero {
            Residual::ExactZero
        } else {
            Residual::ExactNonzero(render())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub check_id: String,
    pub paper_anchor: &'static str,
    pub n: Option<usize>,
    pub status: Status,
    pub residual: Residual,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Orientation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    pub fn new(check_id: impl Into<String>, paper_anchor: &'static str, n: Option<usize>) -> Self {
        Case {
            check_id: check_id.into(),
            paper_anchor,
            n,
            status: Status::Skipped,
            residual: Residual::None,
            verdict: None,
            note: None,
        }
    }

    pub fn pass_if(mut self, ok: bool, residual: Residual) -> Self {
        self.status = if ok { Status::Pass } else { Status::Fail };
        self.residual = residual;
        self
    }

    pub fn skipped(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.note = Some(why.into());
        self
    }

    pub fn failed(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.note = Some(why.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_verdict(mut self, v: Orientation) -> Self {
        self.verdict = Some(v);
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub report_version: u32,
    pub version: &'static str,
    pub suite: String,
    pub family: String,
    pub backend: &'static str,
    pub params: BTreeMap<String, String>,
    pub tol: f64,
    pub cases: Vec<Case>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl VerificationReport {
    pub fn new(
        suite: &str,
        family: &str,
        backend: &'static str,
        params: BTreeMap<String, String>,
        tol: f64,
        cases: Vec<Case>,
    ) -> Self {
        let mut summary = Summary::default();
        for c in &cases {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            report_version: REPORT_VERSION,
            version: env!("CARGO_PKG_VERSION"),
            suite: suite.to_string(),
            family: family.to_string(),
            backend,
            params,
            tol,
            cases,
            summary,
            timestamp: None,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per case plus a totals line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let n = c.n.map(|n| format!(" n={n}")).unwrap_or_default();
            let res = match &c.residual {
                Residual::ExactZero => " exact-zero".to_string(),
                Residual::ExactNonzero(r) => format!(" residual={r}"),
                Residual::Float(x) => format!(" residual={x:.3e}"),
                Residual::None => String::new(),
            };
            let note = c.note.as_deref().map(|s| format!(" ({s})")).unwrap_or_default();
            out.push_str(&format!("{status} {}{n}{res}{note}\n", c.check_id));
        }
        out.push_str(&format!(
            "{} {}: {} pass, {} fail, {} skipped\n",
            self.suite, self.family, self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }

    /// `check_id,n,status,residual,note` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check_id,paper_anchor,n,status,residual,note\n");
        for c in &self.cases {
            let status = serde_json::to_value(c.status).unwrap();
            let res = match &c.residual {
                Residual::ExactZero => "exact-zero".to_string(),
                Residual::ExactNonzero(r) => r.clone(),
                Residual::Float(x) => x.to_string(),
                Residual::None => String::new(),
            };
            let n = c.n.map(|n| n.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                c.check_id,
                c.paper_anchor,
                n,
                status.as_str().unwrap_or_default(),
                quote(&res),
                quote(c.note.as_deref().unwrap_or(""))
            ));
        }
        out
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
