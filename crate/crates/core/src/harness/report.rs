use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CheckOutcome, Params, Status, Value};
use crate::error::HarnessError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    /// Outcomes whose deletion set was sampled rather than enumerated.
    pub sampled: usize,
}

impl Summary {
    fn of(outcomes: &[CheckOutcome]) -> Summary {
        let mut s = Summary {
            total: outcomes.len(),
            ..Summary::default()
        };
        for o in outcomes {
            match o.status {
                Status::Holds => s.holds += 1,
                Status::Fails => s.fails += 1,
                Status::NotApplicable => s.not_applicable += 1,
            }
            s.sampled += o.sampled as usize;
        }
        s
    }
}

/// A depth value that depends on the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub check_id: String,
    pub graph_id: String,
    #[serde(skip_serializing_if = "Params::is_empty", default)]
    pub params: Params,
    /// `(characteristic, value)` pairs.
    pub values: Vec<(String, Value)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Description of the corpus.
    pub corpus: String,
    /// `"2"`, `"0"` or `"both"`.
    pub field_char: String,
    pub seed: u64,
    pub summary: Summary,
    pub findings: Vec<Finding>,
    /// The run stopped early because of a budget.
    pub truncated: bool,
    pub outcomes: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn new(
        corpus: String,
        field_char: String,
        seed: u64,
        outcomes: Vec<CheckOutcome>,
        findings: Vec<Finding>,
        truncated: bool,
    ) -> Self {
        VerificationReport {
            corpus,
            field_char,
            seed,
            summary: Summary::of(&outcomes),
            findings,
            truncated,
            outcomes,
        }
    }

    /// Keeps the outcomes matching `keep` and recomputes the summary.
    pub fn retain<F: FnMut(&CheckOutcome) -> bool>(&mut self, mut keep: F) {
        self.outcomes.retain(|o| keep(o));
        self.findings
            .retain(|f| self.outcomes.iter().any(|o| o.check_id == f.check_id));
        self.summary = Summary::of(&self.outcomes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| o.fails())
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fails > 0
    }

    /// Sets every timing to zero, making reports of identical runs
    /// byte-identical.
    pub fn zero_timings(&mut self) {
        for o in &mut self.outcomes {
            o.elapsed_ms = 0.0;
        }
    }

    pub fn to_json(&self) -> Result<String, HarnessError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        Ok(serde_json::from_str(text)?)
    }

    /// One row per outcome.
    pub fn to_csv(&self) -> Result<String, HarnessError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "check_id",
            "graph_id",
            "status",
            "lhs",
            "rhs",
            "edge",
            "a",
            "triangle",
            "field_char",
            "sampled",
            "elapsed_ms",
            "witness",
        ])?;
        for o in &self.outcomes {
            let show = |v: &Option<Value>| v.as_ref().map(Value::to_string).unwrap_or_default();
            let witness = match &o.witness {
                Some(wt) => serde_json::to_string(wt)?,
                None => String::new(),
            };
            w.write_record([
                o.check_id.clone(),
                o.graph_id.clone(),
                status_name(o.status).to_string(),
                show(&o.lhs),
                show(&o.rhs),
                o.params.edge.as_ref().map(|e| e.join("")).unwrap_or_default(),
                o.params.a.as_ref().map(|a| a.join(" ")).unwrap_or_default(),
                o.params.triangle.as_ref().map(|t| t.join(" ")).unwrap_or_default(),
                o.field_char.map(|f| f.to_string()).unwrap_or_default(),
                o.sampled.to_string(),
                format!("{:.3}", o.elapsed_ms),
                witness,
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Summary line plus one line per failure and per field-dependent value.
    pub fn to_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "corpus: {}\nfield: {} seed: {}\ntotal={} holds={} fails={} not_applicable={} sampled={}{}\n",
            self.corpus,
            self.field_char,
            self.seed,
            s.total,
            s.holds,
            s.fails,
            s.not_applicable,
            s.sampled,
            if self.truncated { " (truncated)" } else { "" },
        );
        for o in self.failures() {
            let _ = write!(out, "FAIL {} {}", o.check_id, o.graph_id);
            if !o.params.is_empty() {
                let _ = write!(out, " [{}]", o.params.key());
            }
            if let Some(f) = o.field_char {
                let _ = write!(out, " char={f}");
            }
            let show = |v: &Option<Value>| v.as_ref().map(Value::to_string).unwrap_or_default();
            let _ = write!(out, " lhs={} rhs={}", show(&o.lhs), show(&o.rhs));
            if let Some(w) = &o.witness {
                if let Some(c) = &w.centers {
                    let _ = write!(out, " centers={{{}}}", c.join(","));
                }
                if let Some(g) = &w.generator {
                    let _ = write!(out, " generator={g}");
                }
                if let Some(n) = &w.note {
                    let _ = write!(out, " note=\"{n}\"");
                }
            }
            out.push('\n');
        }
        for f in &self.findings {
            let vals: Vec<String> = f.values.iter().map(|(c, v)| format!("char {c}: {v}")).collect();
            let _ = writeln!(out, "FIELD {} {} {}", f.check_id, f.graph_id, vals.join(", "));
        }
        out
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::Fails => "fails",
        Status::NotApplicable => "not_applicable",
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory,
/// so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), HarnessError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
