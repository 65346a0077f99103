//! Rendering law reports for humans and machines.

use rcwb_core::rescat::{LawReport, LawStatus};

/// Aligned text: one line per law, counterexamples indented below.
pub fn render_text(reports: &[LawReport]) -> String {
    let suite_w = reports.iter().map(|r| r.suite.len()).max().unwrap_or(5).max(5);
    let law_w = reports.iter().map(|r| r.law.len()).max().unwrap_or(3).max(3);
    let mut out = String::new();
    out.push_str(&format!(
        "{:suite_w$}  {:law_w$}  {:7}  {:>9}  {}\n",
        "suite", "law", "status", "checked", "notes"
    ));
    for r in reports {
        let status = match r.status {
            LawStatus::Pass => "pass",
            LawStatus::Fail => "FAIL",
            LawStatus::Skipped => "skipped",
        };
        let mut notes = Vec::new();
        if r.sampled {
            notes.push(format!("sampled (seed {})", r.seed));
        }
        if let Some(n) = &r.note {
            notes.push(n.clone());
        }
        out.push_str(&format!(
            "{:suite_w$}  {:law_w$}  {:7}  {:>9}  {}\n",
            r.suite,
            r.law,
            status,
            r.checked,
            notes.join("; ")
        ));
        if let Some(cex) = &r.counterexample {
            out.push_str(&format!("{:suite_w$}  counterexample: {}\n", "", cex));
        }
    }
    let failed = reports.iter().filter(|r| r.status == LawStatus::Fail).count();
    let skipped = reports.iter().filter(|r| r.status == LawStatus::Skipped).count();
    out.push_str(&format!(
        "{} laws: {} passed, {} failed, {} skipped\n",
        reports.len(),
        reports.len() - failed - skipped,
        failed,
        skipped
    ));
    out
}

/// Line-delimited records, one JSON object per law.
pub fn render_records(reports: &[LawReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    out
}
