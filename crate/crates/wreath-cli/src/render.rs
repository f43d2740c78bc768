//! Text and JSON renderings of a verification report.
//!
//! The JSON form is deterministic: `serde_json` serializes maps with sorted
//! keys, so the same report and seed produce byte-identical output except
//! for the `runtime_ms` field.

use serde_json::{json, Value};
use wreath_core::report::Report;

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("subject: {}\n", report.subject));
    out.push_str(&format!("spec: {}\n", report.spec));
    let name_width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &report.checks {
        out.push_str(&format!(
            "[{:<11}] {:<name_width$}  expected: {}  observed: {}\n",
            c.status.as_str(),
            c.name,
            c.expected,
            c.observed,
        ));
    }
    out.push_str(&format!("result: {}", report.worst_status().as_str()));
    out
}

pub fn json(report: &Report, seed: u64, runtime_ms: u64) -> String {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "expected": c.expected,
                "observed": c.observed,
                "status": c.status.as_str(),
            })
        })
        .collect();
    let doc = json!({
        "subject": report.subject,
        "spec": report.spec,
        "checks": checks,
        "result": report.worst_status().as_str(),
        "seed": seed,
        "runtime_ms": runtime_ms,
        "tool_version": env!("CARGO_PKG_VERSION"),
    });
    serde_json::to_string_pretty(&doc).expect("report serializes")
}
