use serde::Serialize;

use crate::models::{Report, ReportEntry, Summary};

pub const REPORT_SCHEMA: &str = "t2/1";

#[derive(Serialize)]
struct Document<'a> {
    schema: &'static str,
    entries: &'a [ReportEntry],
    summary: &'a Summary,
}

/// Compact JSON with a fixed field order.
pub fn export_report_json(report: &Report) -> Vec<u8> {
    let doc = Document {
        schema: REPORT_SCHEMA,
        entries: &report.entries,
        summary: &report.summary,
    };
    serde_json::to_vec(&doc).expect("report serializes")
}
