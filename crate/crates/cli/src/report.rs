//! Deterministic report emission. JSON and CSV bytes depend only on the
//! configuration and seed, never on thread count or wall clock; timings go
//! to stderr.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use crate::checks::CheckResult;
use crate::config::OutputFormat;

#[derive(Serialize)]
pub struct VerifyReport<'a> {
    pub op: &'static str,
    pub bounds: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: &'a [CheckResult],
}

pub fn write_verify_report(
    out: &mut impl Write,
    format: OutputFormat,
    report: &VerifyReport<'_>,
) -> Result<()> {
    match format {
        OutputFormat::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(report)?)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["id", "passed", "name", "operation", "bounds", "details"])?;
            for c in report.checks {
                w.write_record([
                    c.id,
                    if c.passed { "true" } else { "false" },
                    c.name,
                    c.operation,
                    &c.bounds,
                    &c.details.join("; "),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Text => {
            for c in report.checks {
                writeln!(
                    out,
                    "{}: {} [{}]",
                    c.id,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.bounds
                )?;
                for d in c.details.iter().filter(|d| d.starts_with("FAIL")) {
                    writeln!(out, "  {d}")?;
                }
            }
            writeln!(
                out,
                "{}: {} of {} checks passed",
                if report.passed { "PASS" } else { "FAIL" },
                report.checks.iter().filter(|c| c.passed).count(),
                report.checks.len()
            )?;
        }
    }
    Ok(())
}

/// Emits a JSON value already assembled by a command handler.
pub fn write_json(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

/// Emits a uniform CSV table.
pub fn write_csv_rows(
    out: &mut impl Write,
    header: &[&str],
    rows: &[Vec<String>],
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
