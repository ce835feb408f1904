use std::io::{self, Write};

use serde::Serialize;

use crate::config::OutputFormat;
use crate::record::{Status, VerificationRecord};

pub const CSV_HEADER: [&str; 8] = ["id", "lhs", "rhs", "abs_residual", "rel_residual", "tol", "status", "runtime_ms"];

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    lhs: f64,
    rhs: f64,
    abs_residual: f64,
    rel_residual: f64,
    tol: f64,
    status: Status,
    runtime_ms: u64,
}

impl<'a> From<&'a VerificationRecord> for CsvRow<'a> {
    fn from(r: &'a VerificationRecord) -> Self {
        Self {
            id: &r.id,
            lhs: r.lhs,
            rhs: r.rhs,
            abs_residual: r.abs_residual,
            rel_residual: r.rel_residual,
            tol: r.tol,
            status: r.status,
            runtime_ms: r.runtime_ms,
        }
    }
}

/// Records followed by their localization records, depth first.
fn flatten(records: &[VerificationRecord]) -> Vec<&VerificationRecord> {
    let mut out = Vec::new();
    for r in records {
        out.push(r);
        out.extend(flatten(&r.localization));
    }
    out
}

pub fn emit_report(records: &[VerificationRecord], format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *out);
            w.write_record(CSV_HEADER)?;
            for r in flatten(records) {
                w.serialize(CsvRow::from(r))?;
            }
            w.flush()
        }
        OutputFormat::Markdown => write_markdown(records, out),
    }
}

pub fn emit_report_string(records: &[VerificationRecord], format: OutputFormat) -> String {
    let mut buf = Vec::new();
    emit_report(records, format, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("reports are UTF-8")
}

fn write_markdown(records: &[VerificationRecord], out: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<[String; 8]> = flatten(records)
        .into_iter()
        .map(|r| {
            [
                r.id.clone(),
                format!("{:.12e}", r.lhs),
                format!("{:.12e}", r.rhs),
                format!("{:.3e}", r.abs_residual),
                format!("{:.3e}", r.rel_residual),
                format!("{:.0e}", r.tol),
                r.status.to_string(),
                r.runtime_ms.to_string(),
            ]
        })
        .collect();
    let mut widths = CSV_HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[&str]| -> String {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("| {} |", padded.join(" | "))
    };
    writeln!(out, "{}", line(&CSV_HEADER))?;
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(out, "|-{}-|", rule.join("-|-"))?;
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&cells))?;
    }
    Ok(())
}

/// 0 iff no top-level record failed.
pub fn exit_code(records: &[VerificationRecord]) -> i32 {
    i32::from(records.iter().any(|r| r.status == Status::Fail))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<VerificationRecord> {
        let mut a = VerificationRecord::compare("A", 1.0, 1.0, 1e-9);
        a.localization.push(VerificationRecord::compare("A/SUB", 2.0, 1.0, 1e-9));
        vec![a, VerificationRecord::compare("B", 0.5, 0.25, 1e-3)]
    }

    #[test]
    fn empty_reports() {
        assert_eq!(emit_report_string(&[], OutputFormat::Json).trim(), "[]");
        assert_eq!(emit_report_string(&[], OutputFormat::Csv), format!("{}\n", CSV_HEADER.join(",")));
        assert_eq!(exit_code(&[]), 0);
    }

    #[test]
    fn csv_includes_nested_rows() {
        let text = emit_report_string(&sample(), OutputFormat::Csv);
        let ids: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
        assert_eq!(ids, ["A", "A/SUB", "B"]);
    }

    #[test]
    fn markdown_columns_align() {
        let text = emit_report_string(&sample(), OutputFormat::Markdown);
        let lens: Vec<usize> = text.lines().map(|l| l.chars().count()).collect();
        assert_eq!(lens.len(), 5);
        assert!(lens.iter().all(|&n| n == lens[0]));
    }

    #[test]
    fn exit_code_ignores_localization() {
        let records = sample();
        assert_eq!(exit_code(&records[..1]), 0);
        assert_eq!(exit_code(&records), 1);
    }
}
