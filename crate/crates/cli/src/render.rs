//! Trace and result rendering: aligned tables for humans, JSON for scripts.
//!
//! Every arbitrary-precision value is rendered as a decimal string in JSON;
//! consumers in other languages must never receive a numeric field that can
//! exceed 2^53.

use exroot::TraceRow;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceFormat {
    Table,
    Json,
}

/// Render trace rows with the fixed column order
/// `Step | Block | Scaled Δ' | Trial x | Φ | New Δ | R`.
/// JSON uses the stable field names `step`, `block`, `scaled_remainder`,
/// `digit`, `increment`, `remainder`, `root`.
pub fn render_trace(rows: &[TraceRow], format: TraceFormat) -> Result<String, String> {
    if rows.is_empty() {
        return Err("cannot render an empty trace".into());
    }
    match format {
        TraceFormat::Table => Ok(trace_table(rows)),
        TraceFormat::Json => serde_json::to_string_pretty(&trace_json(rows))
            .map_err(|e| format!("trace serialization failed: {e}")),
    }
}

pub fn trace_json(rows: &[TraceRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "step": r.step,
                    "block": r.block.to_string(),
                    "scaled_remainder": r.scaled_remainder.to_string(),
                    "digit": r.chosen_digit,
                    "increment": r.increment.to_string(),
                    "remainder": r.new_remainder.to_string(),
                    "root": r.new_root.to_string(),
                })
            })
            .collect(),
    )
}

fn trace_table(rows: &[TraceRow]) -> String {
    const HEADERS: [&str; 7] = ["Step", "Block", "Scaled Δ'", "Trial x", "Φ", "New Δ", "R"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.step.to_string(),
                r.block.to_string(),
                r.scaled_remainder.to_string(),
                r.chosen_digit.to_string(),
                r.increment.to_string(),
                r.new_remainder.to_string(),
                r.new_root.to_string(),
            ]
        })
        .collect();

    // Column widths in characters, not bytes: two headers are non-ascii.
    let mut widths: Vec<usize> = HEADERS.iter().map(|h| h.chars().count()).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.chars().count());
        }
    }

    let mut out = String::new();
    let render_row = |fields: &[String]| -> String {
        let mut line = String::new();
        for (i, (field, width)) in fields.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = width - field.chars().count();
            for _ in 0..pad {
                line.push(' ');
            }
            line.push_str(field);
        }
        line.push('\n');
        line
    };

    let headers: Vec<String> = HEADERS.iter().map(|h| h.to_string()).collect();
    out.push_str(&render_row(&headers));
    for row in &cells {
        out.push_str(&render_row(row));
    }
    out
}
