use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Refused;
use crate::graph::{emit_edge_list, emit_graph6, Graph};

/// Three-valued check result; refusals are neither passes nor failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Violation { detail: String },
    Refused { detail: String },
}

impl Outcome {
    pub fn check(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Violation { detail: detail() }
        }
    }

    pub fn refused(r: &Refused) -> Self {
        Outcome::Refused { detail: r.to_string() }
    }

    /// `Pass`/`Violation` from a fallible check.
    pub fn from_result(r: Result<bool, Refused>, detail: impl FnOnce() -> String) -> Self {
        match r {
            Ok(ok) => Outcome::check(ok, detail),
            Err(e) => Outcome::refused(&e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

/// One instance. Violation rows always carry the instance in replayable
/// form (`graph6`, or an edge list beyond 62 vertices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRow {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub omega: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tw: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub member: Option<bool>,
    pub checks: Vec<CheckResult>,
}

impl InstanceRow {
    pub fn new(index: usize, g: &Graph) -> Self {
        InstanceRow {
            index,
            graph6: encode(g),
            n: g.n(),
            seed: None,
            omega: None,
            tw: None,
            eta: None,
            member: None,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: impl Into<String>, outcome: Outcome) {
        self.checks.push(CheckResult {
            check: check.into(),
            outcome,
        });
    }
}

fn encode(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| emit_edge_list(g).replace('\n', " ").trim().to_string())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub passes: usize,
    pub violations: usize,
    pub refusals: usize,
    /// Largest treewidth seen for each clique number.
    pub max_tw_per_omega: BTreeMap<usize, usize>,
    /// Observations recorded but not asserted.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub name: String,
    pub rows: Vec<InstanceRow>,
    pub summary: Summary,
}

impl ExperimentReport {
    pub fn from_rows(name: impl Into<String>, rows: Vec<InstanceRow>) -> Self {
        let mut summary = Summary {
            instances: rows.len(),
            ..Summary::default()
        };
        for r in &rows {
            for c in &r.checks {
                match c.outcome {
                    Outcome::Pass => summary.passes += 1,
                    Outcome::Violation { .. } => summary.violations += 1,
                    Outcome::Refused { .. } => summary.refusals += 1,
                }
            }
            if let (Some(w), Some(t)) = (r.omega, r.tw) {
                let e = summary.max_tw_per_omega.entry(w).or_insert(t);
                *e = (*e).max(t);
            }
        }
        ExperimentReport {
            name: name.into(),
            rows,
            summary,
        }
    }

    /// Concatenates reports, renumbering rows.
    pub fn merge(name: impl Into<String>, parts: Vec<ExperimentReport>) -> Self {
        let mut rows = Vec::new();
        let mut notes = Vec::new();
        for p in parts {
            for mut r in p.rows {
                for c in &mut r.checks {
                    c.check = format!("{}/{}", p.name, c.check);
                }
                r.index = rows.len();
                rows.push(r);
            }
            notes.extend(p.summary.notes.into_iter().map(|n| format!("{}: {n}", p.name)));
        }
        let mut out = ExperimentReport::from_rows(name, rows);
        out.summary.notes = notes;
        out
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.summary.notes.push(note.into());
        self
    }

    /// No violations, and no refusals unless they are allowed.
    pub fn passed(&self, allow_refusals: bool) -> bool {
        self.summary.violations == 0 && (allow_refusals || self.summary.refusals == 0)
    }

    pub fn violations(&self) -> impl Iterator<Item = (&InstanceRow, &CheckResult)> {
        self.rows.iter().flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| matches!(c.outcome, Outcome::Violation { .. }))
                .map(move |c| (r, c))
        })
    }

    /// One JSON object per row.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&serde_json::to_string(r).expect("rows serialize"));
            out.push('\n');
        }
        out
    }

    /// Per-check pass/violation/refusal counts.
    pub fn to_csv_summary(&self) -> String {
        let mut counts: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
        for r in &self.rows {
            for c in &r.checks {
                let e = counts.entry(c.check.as_str()).or_default();
                match c.outcome {
                    Outcome::Pass => e[0] += 1,
                    Outcome::Violation { .. } => e[1] += 1,
                    Outcome::Refused { .. } => e[2] += 1,
                }
            }
        }
        let mut out = String::from("suite,check,passes,violations,refusals\n");
        for (check, [p, v, r]) in counts {
            let _ = writeln!(out, "{},{check},{p},{v},{r}", self.name);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    #[test]
    fn accounting() {
        let mut a = InstanceRow::new(0, &complete(3));
        a.omega = Some(3);
        a.tw = Some(2);
        a.push("x", Outcome::Pass);
        a.push("y", Outcome::Refused { detail: "r".into() });
        let mut b = InstanceRow::new(1, &complete(2));
        b.omega = Some(3);
        b.tw = Some(5);
        b.push("x", Outcome::Violation { detail: "v".into() });
        let rep = ExperimentReport::from_rows("t", vec![a, b]);
        assert_eq!((rep.summary.passes, rep.summary.violations, rep.summary.refusals), (1, 1, 1));
        assert_eq!(rep.summary.max_tw_per_omega[&3], 5);
        assert!(!rep.passed(true));
        assert_eq!(rep.violations().count(), 1);
        assert_eq!(rep.rows[0].graph6, "Bw");
        assert!(rep.to_csv_summary().contains("t,x,1,1,0"));
        let line = rep.to_json_lines();
        let back: InstanceRow = serde_json::from_str(line.lines().nth(1).unwrap()).unwrap();
        assert_eq!(back, rep.rows[1]);
    }
}
