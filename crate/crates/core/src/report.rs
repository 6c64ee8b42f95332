//! Report emission: JSON-lines and CSV for machines, aligned table for eyes.
//!
//! Machine formats are byte-deterministic: fixed key order, no floats, and
//! the timing column pinned to 0 so reruns diff clean.

use std::io::{self, Write};

use crate::checks::CheckRecord;
use crate::harness::{OutputFormat, RunReport, RunSummary};

/// One JSONL record with a fixed key order.
pub fn jsonl_line(r: &CheckRecord) -> String {
    format!(
        "{{\"schema\":1,\"p\":{},\"check\":\"{}\",\"params\":{},\"modulus\":{},\"lhs\":{},\"rhs\":{},\"pass\":{},\"status\":\"{}\",\"engine\":\"{}\",\"us\":0}}",
        r.p,
        r.check_id,
        r.params.to_json(),
        r.modulus,
        r.lhs,
        r.rhs,
        r.pass,
        r.status,
        r.engine.as_str(),
    )
}

pub fn write_jsonl<W: Write>(w: &mut W, report: &RunReport) -> io::Result<()> {
    for r in &report.records {
        writeln!(w, "{}", jsonl_line(r))?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(w: &mut W, report: &RunReport) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record([
        "schema", "p", "check", "params", "modulus", "lhs", "rhs", "pass", "status",
        "engine", "us",
    ])?;
    for r in &report.records {
        out.write_record([
            "1".to_string(),
            r.p.to_string(),
            r.check_id.to_string(),
            r.params.to_json(),
            r.modulus.to_string(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.pass.to_string(),
            r.status.to_string(),
            r.engine.as_str().to_string(),
            "0".to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_table<W: Write>(w: &mut W, report: &RunReport) -> io::Result<()> {
    let headers = [
        "p", "check", "params", "modulus", "lhs", "rhs", "pass", "status", "engine", "us",
    ];
    let rows: Vec<[String; 10]> = report
        .records
        .iter()
        .map(|r| {
            [
                r.p.to_string(),
                r.check_id.to_string(),
                r.params.to_json(),
                r.modulus.to_string(),
                r.lhs.to_string(),
                r.rhs.to_string(),
                if r.pass { "ok".into() } else { "FAIL".into() },
                r.status.to_string(),
                r.engine.as_str().to_string(),
                r.elapsed_us.to_string(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let render = |w: &mut W, cells: &[String]| -> io::Result<()> {
        let line = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:>width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ");
        writeln!(w, "{}", line.trim_end())
    };
    render(
        w,
        &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
    )?;
    for row in &rows {
        render(w, row)?;
    }
    writeln!(w, "{}", summary_line(&report.summary))?;
    Ok(())
}

pub fn summary_line(s: &RunSummary) -> String {
    format!(
        "{} records over {} primes: {} passed, {} proved-check failures, {} conjecture failures, {} engine mismatches ({} ms)",
        s.records,
        s.primes,
        s.passed,
        s.failed_proved,
        s.failed_conjecture,
        s.engine_mismatches,
        s.elapsed_us / 1000,
    )
}

pub fn write_report<W: Write>(
    w: &mut W,
    report: &RunReport,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Table => write_table(w, report),
        OutputFormat::Csv => write_csv(w, report),
        OutputFormat::Jsonl => write_jsonl(w, report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{verify_range, CheckSelection};

    fn sample_report() -> RunReport {
        verify_range(3, 10, CheckSelection::Ids(vec!["thm1.1-eq1.1".into()])).unwrap()
    }

    #[test]
    fn jsonl_shape_is_stable() {
        let report = sample_report();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &report).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(
            first,
            "{\"schema\":1,\"p\":3,\"check\":\"thm1.1-eq1.1\",\"params\":{},\"modulus\":3,\"lhs\":1,\"rhs\":1,\"pass\":true,\"status\":\"theorem\",\"engine\":\"dp\",\"us\":0}"
        );
        assert_eq!(text.lines().count(), report.records.len());
    }

    #[test]
    fn machine_formats_are_deterministic() {
        let a = sample_report();
        let b = sample_report();
        for fmt in [OutputFormat::Jsonl, OutputFormat::Csv] {
            let mut ba = Vec::new();
            let mut bb = Vec::new();
            write_report(&mut ba, &a, fmt).unwrap();
            write_report(&mut bb, &b, fmt).unwrap();
            assert_eq!(ba, bb);
        }
    }

    #[test]
    fn csv_has_header_and_rows() {
        let report = sample_report();
        let mut buf = Vec::new();
        write_csv(&mut buf, &report).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "schema,p,check,params,modulus,lhs,rhs,pass,status,engine,us"
        );
        let first = lines.next().unwrap();
        assert!(first.starts_with("1,3,thm1.1-eq1.1,"), "{first}");
        assert!(first.ends_with(",true,theorem,dp,0"), "{first}");
    }

    #[test]
    fn table_lists_every_record() {
        let report = sample_report();
        let mut buf = Vec::new();
        write_table(&mut buf, &report).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // header + records + summary
        assert_eq!(text.lines().count(), report.records.len() + 2);
        assert!(text.contains("passed"));
    }
}
