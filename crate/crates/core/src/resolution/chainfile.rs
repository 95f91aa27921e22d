//! The matrix-chain file format for the generic exactness audit.
//!
//! ```text
//! vars 3
//! matrix 1x5
//! x1^4; x1^2*x4; x3^2; x4^5; x1^3*x3
//! matrix 5x7
//! 0; x4; 0; 0; x3; 0; 0
//! ...
//! ```
//!
//! Each `matrix RxC` header is followed by R lines of C entries in the
//! polynomial text format, separated by semicolons.

use thiserror::Error;

use super::verify::MatrixChain;
use crate::poly::text::{parse_polynomial, ParseError};
use crate::poly::{PolyMatrix, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainParseError {
    #[error("line {line}: expected `vars K` header")]
    MissingVarsHeader { line: usize },
    #[error("line {line}: malformed matrix header (expected `matrix RxC`)")]
    BadMatrixHeader { line: usize },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongEntryCount { line: usize, expected: usize, found: usize },
    #[error("line {line}, entry {column}: {source}")]
    Entry { line: usize, column: usize, source: ParseError },
    #[error("line {line}: unexpected end of file inside a matrix block")]
    UnexpectedEof { line: usize },
    #[error("matrix {index} has {rows} rows but the previous matrix has {expected} columns")]
    ShapeMismatch { index: usize, rows: usize, expected: usize },
    #[error("no matrices in file")]
    Empty,
}

pub fn parse_chain(input: &str) -> Result<MatrixChain, ChainParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(ChainParseError::MissingVarsHeader { line: 1 })?;
    let nvars: usize = header
        .strip_prefix("vars")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or(ChainParseError::MissingVarsHeader { line })?;

    let mut maps: Vec<PolyMatrix> = Vec::new();
    while let Some((line, header)) = lines.next() {
        let mut last_line = line;
        let dims = header
            .strip_prefix("matrix")
            .map(str::trim)
            .and_then(|s| {
                let (r, c) = s.split_once('x')?;
                Some((r.trim().parse::<usize>().ok()?, c.trim().parse::<usize>().ok()?))
            })
            .ok_or(ChainParseError::BadMatrixHeader { line })?;
        let (rows, cols) = dims;
        let mut entries: Vec<Polynomial> = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let Some((line, row_text)) = lines.next() else {
                return Err(ChainParseError::UnexpectedEof { line: last_line });
            };
            last_line = line;
            let cells: Vec<&str> = row_text.split(';').map(str::trim).collect();
            if cells.len() != cols {
                return Err(ChainParseError::WrongEntryCount {
                    line,
                    expected: cols,
                    found: cells.len(),
                });
            }
            for (column, cell) in cells.iter().enumerate() {
                let poly = parse_polynomial(cell, nvars)
                    .map_err(|source| ChainParseError::Entry { line, column: column + 1, source })?;
                entries.push(poly);
            }
        }
        let matrix = PolyMatrix::new(rows, cols, entries)
            .expect("entry count and ambient checked above");
        if let Some(prev) = maps.last() {
            if prev.cols() != rows {
                return Err(ChainParseError::ShapeMismatch {
                    index: maps.len() + 1,
                    rows,
                    expected: prev.cols(),
                });
            }
        }
        maps.push(matrix);
    }
    if maps.is_empty() {
        return Err(ChainParseError::Empty);
    }
    let mut ranks = vec![maps[0].rows()];
    for m in &maps {
        ranks.push(m.cols());
    }
    Ok(MatrixChain { nvars, ranks, maps })
}

pub fn serialize_chain(chain: &MatrixChain) -> String {
    let mut out = format!("vars {}\n", chain.nvars);
    for m in &chain.maps {
        out.push_str(&format!("matrix {}x{}\n", m.rows(), m.cols()));
        for r in 0..m.rows() {
            let row: Vec<String> = (0..m.cols()).map(|c| m.entry(r, c).to_string()).collect();
            out.push_str(&row.join("; "));
            out.push('\n');
        }
    }
    out
}
