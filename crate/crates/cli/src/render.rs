//! Rendering for the table and audit subcommands.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use betticone_core::resolution::{audit_chain, parse_chain, Verdict};
use betticone_core::table1::{diff_table1, recompute_row, TABLE1};

use crate::{open_output, Format};

pub fn run_table1(format: Format, out: &Option<PathBuf>) -> Result<ExitCode, String> {
    let diffs = diff_table1();
    let mut w = open_output(out)?;
    match format {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct JsonOut {
                rows: Vec<betticone_core::table1::RecomputedRow>,
                diffs: Vec<betticone_core::table1::CellDiff>,
                reproduced: bool,
            }
            let rows: Vec<_> = TABLE1
                .iter()
                .map(|r| recompute_row(r.alphas).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let payload = JsonOut { rows, diffs: diffs.clone(), reproduced: diffs.is_empty() };
            serde_json::to_writer_pretty(&mut w, &payload).map_err(|e| e.to_string())?;
            writeln!(w).map_err(|e| e.to_string())?;
        }
        Format::Csv => {
            writeln!(w, "row,alpha21,alpha1,alpha2,alpha3,alpha4,n1,n2,n3,n4,beta0,beta1,beta2,beta3,case")
                .map_err(|e| e.to_string())?;
            for (i, row) in TABLE1.iter().enumerate() {
                let re = recompute_row(row.alphas).map_err(|e| e.to_string())?;
                let b = re.betti.unwrap_or([0; 4]);
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    i + 1,
                    row.alphas[0], row.alphas[1], row.alphas[2], row.alphas[3], row.alphas[4],
                    re.n[0], re.n[1], re.n[2], re.n[3],
                    b[0], b[1], b[2], b[3],
                    re.case
                )
                .map_err(|e| e.to_string())?;
            }
        }
        Format::Text => {
            writeln!(w, "row  alphas           n                    beta          case")
                .map_err(|e| e.to_string())?;
            for (i, row) in TABLE1.iter().enumerate() {
                let re = recompute_row(row.alphas).map_err(|e| e.to_string())?;
                let beta = re
                    .betti
                    .map(|b| format!("({},{},{},{})", b[0], b[1], b[2], b[3]))
                    .unwrap_or_else(|| "-".into());
                writeln!(
                    w,
                    "{:<4} {:<16} {:<20} {:<13} {}",
                    i + 1,
                    format!("{:?}", row.alphas),
                    format!("{:?}", re.n),
                    beta,
                    re.case
                )
                .map_err(|e| e.to_string())?;
            }
            if diffs.is_empty() {
                writeln!(w, "all 8 rows reproduce the embedded table exactly")
                    .map_err(|e| e.to_string())?;
            } else {
                writeln!(w, "MISMATCHES:").map_err(|e| e.to_string())?;
                for d in &diffs {
                    writeln!(
                        w,
                        "  row {} cell {}: expected {}, computed {}",
                        d.row, d.cell, d.expected, d.computed
                    )
                    .map_err(|e| e.to_string())?;
                }
            }
        }
    }
    Ok(if diffs.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

pub fn run_audit(file: &Path, format: Format, out: &Option<PathBuf>) -> Result<ExitCode, String> {
    if format == Format::Csv {
        return Err("the audit report has no CSV form; use text or json".into());
    }
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    let chain = parse_chain(&text).map_err(|e| e.to_string())?;
    let report = audit_chain(&chain);
    let mut w = open_output(out)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &report).map_err(|e| e.to_string())?;
            writeln!(w).map_err(|e| e.to_string())?;
        }
        _ => {
            writeln!(
                w,
                "chain: {} maps over {} variables, free ranks {:?}",
                chain.maps.len(),
                chain.nvars,
                chain.ranks
            )
            .map_err(|e| e.to_string())?;
            if !report.complex.is_complex() {
                writeln!(w, "complex check FAILED: {}", report.complex.describe_failure())
                    .map_err(|e| e.to_string())?;
            } else {
                writeln!(w, "complex check: all products vanish").map_err(|e| e.to_string())?;
            }
            writeln!(w, "map ranks: {:?}", report.map_ranks).map_err(|e| e.to_string())?;
            for c in &report.rank_conditions {
                writeln!(w, "  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.description)
                    .map_err(|e| e.to_string())?;
            }
            for c in &report.certificates {
                match (&c.certificate, &c.note) {
                    (Some(cert), _) => writeln!(
                        w,
                        "  depth {} certificate for I(phi{}): {:?} at indices {:?}",
                        c.required_length, c.map_index, cert.kind, cert.indices
                    )
                    .map_err(|e| e.to_string())?,
                    (None, Some(note)) => writeln!(
                        w,
                        "  depth {} certificate for I(phi{}): {}",
                        c.required_length, c.map_index, note
                    )
                    .map_err(|e| e.to_string())?,
                    (None, None) => {}
                }
            }
            writeln!(w, "verdict: {:?}", report.verdict).map_err(|e| e.to_string())?;
        }
    }
    Ok(if report.verdict == Verdict::Exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}
