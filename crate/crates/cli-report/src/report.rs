use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::Skip => f.write_str("skip"),
        }
    }
}

/// One named check with its verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub detail: String,
}

/// A suite run. Checks are sorted by id, so two runs with the same flags
/// produce identical reports except for the `timing` block, which is the
/// only field that varies between runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    /// Report format version.
    pub schema: &'static str,
    pub suite: String,
    pub checks: Vec<Check>,
    /// Wall time per check id, in microseconds.
    pub timing: BTreeMap<String, u64>,
}

impl Report {
    /// True when no check failed; skips do not count against a run.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// (passed, failed, skipped) counts.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for check in &self.checks {
            match check.status {
                Status::Pass => counts.0 += 1,
                Status::Fail => counts.1 += 1,
                Status::Skip => counts.2 += 1,
            }
        }
        counts
    }

    /// One-line verdict such as "42/42 pass" or "40/42 pass, 2 fail".
    pub fn summary_line(&self) -> String {
        let (pass, fail, skip) = self.counts();
        let mut line = format!("{pass}/{} pass", self.checks.len());
        if fail > 0 {
            line.push_str(&format!(", {fail} fail"));
        }
        if skip > 0 {
            line.push_str(&format!(", {skip} skip"));
        }
        line
    }
}

/// The report as versioned JSON, trailing newline included.
pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

fn escape_cell(text: &str) -> String {
    text.replace('|', "\\|")
}

/// The report as a markdown document carrying exactly the checks of the
/// JSON rendering, one table row per check.
///
/// The table for the weight-system suite is reshaped into the columns of
/// the source tables (weights, ring, expected and computed verdicts); every
/// other suite gets the generic check table.
pub fn render_markdown(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("# geocheck: {}\n\n{}\n\n", report.suite, report.summary_line()));
    if report.suite == "dm-tables" {
        render_weight_table(&mut out, &report.checks);
    } else {
        render_check_table(&mut out, &report.checks);
        if report.suite == "all" {
            let dm: Vec<Check> =
                report.checks.iter().filter(|c| c.id.starts_with("dm/")).cloned().collect();
            if !dm.is_empty() {
                out.push_str("\n## weight systems\n\n");
                render_weight_table(&mut out, &dm);
            }
        }
    }
    out
}

fn render_check_table(out: &mut String, checks: &[Check]) {
    out.push_str("| check | status | description | detail |\n");
    out.push_str("|---|---|---|---|\n");
    for check in checks {
        out.push_str(&format!(
            "| `{}` | {} | {} | {} |\n",
            check.id,
            check.status,
            escape_cell(&check.description),
            escape_cell(&check.detail),
        ));
    }
}

/// Weight-system checks reshaped into the layout of the verdict tables.
/// The description is "<weights> over <ring>" and the detail is
/// "expected <verdict>, got <verdict>"; both are produced by this crate,
/// so the split is total.
fn render_weight_table(out: &mut String, checks: &[Check]) {
    out.push_str("| check | weights | ring | expected | got | status |\n");
    out.push_str("|---|---|---|---|---|---|\n");
    for check in checks {
        let (weights, ring) = check.description.rsplit_once(" over ").unwrap_or((check.description.as_str(), ""));
        let (expected, got) = check
            .detail
            .strip_prefix("expected ")
            .and_then(|rest| rest.split_once(", got "))
            .unwrap_or(("", check.detail.as_str()));
        out.push_str(&format!(
            "| `{}` | `{}` | {} | {} | {} | {} |\n",
            check.id,
            escape_cell(weights),
            ring,
            escape_cell(expected),
            escape_cell(got),
            check.status,
        ));
    }
}
