//! The embedded reference table of worked examples: one row per case,
//! with the generators and Betti sequence each parameter tuple must
//! reproduce.

use serde::Serialize;

use crate::komeda::{betti_formula, KomedaParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub alphas: [u64; 5],
    pub n: [u64; 4],
    pub betti: [u64; 4],
}

/// Golden fixture, pinned cell for cell.
pub const TABLE1: [Table1Row; 8] = [
    Table1Row { alphas: [2, 5, 3, 2, 2], n: [7, 12, 13, 22], betti: [1, 5, 6, 2] },
    Table1Row { alphas: [2, 4, 4, 2, 4], n: [25, 19, 22, 26], betti: [1, 5, 6, 2] },
    Table1Row { alphas: [2, 4, 4, 2, 5], n: [33, 23, 28, 26], betti: [1, 5, 7, 3] },
    Table1Row { alphas: [2, 5, 4, 2, 4], n: [25, 20, 35, 30], betti: [1, 6, 9, 4] },
    Table1Row { alphas: [1, 3, 2, 3, 3], n: [13, 14, 9, 15], betti: [1, 5, 6, 2] },
    Table1Row { alphas: [3, 6, 3, 4, 6], n: [61, 82, 51, 63], betti: [1, 6, 8, 3] },
    Table1Row { alphas: [1, 3, 2, 2, 4], n: [13, 11, 12, 9], betti: [1, 5, 6, 2] },
    Table1Row { alphas: [1, 4, 2, 2, 4], n: [13, 12, 19, 11], betti: [1, 5, 7, 3] },
];

#[derive(Debug, Clone, Serialize)]
pub struct CellDiff {
    pub row: usize,
    pub cell: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecomputedRow {
    pub alphas: [u64; 5],
    pub n: [u64; 4],
    pub case: String,
    pub betti: Option<[u64; 4]>,
}

pub fn recompute_row(alphas: [u64; 5]) -> Result<RecomputedRow, crate::komeda::ParamError> {
    let p = KomedaParams::new(alphas[0], alphas[1], alphas[2], alphas[3], alphas[4])?;
    let n = p.generators();
    let tag = p.classify()?;
    Ok(RecomputedRow {
        alphas,
        n,
        case: tag.to_string(),
        betti: betti_formula(tag).map(|b| b.0),
    })
}

/// Recompute every row against a fixture and report cell-level
/// differences. Taking the fixture as an argument lets the test harness
/// feed a tampered table to check its own sensitivity.
pub fn diff_against(fixture: &[Table1Row]) -> Vec<CellDiff> {
    let mut diffs = Vec::new();
    for (i, row) in fixture.iter().enumerate() {
        let index = i + 1;
        match recompute_row(row.alphas) {
            Err(e) => diffs.push(CellDiff {
                row: index,
                cell: "alphas".into(),
                expected: "arithmetic-valid parameters".into(),
                computed: e.to_string(),
            }),
            Ok(re) => {
                for (k, (&computed, &expected)) in re.n.iter().zip(row.n.iter()).enumerate() {
                    if computed != expected {
                        diffs.push(CellDiff {
                            row: index,
                            cell: format!("n{}", k + 1),
                            expected: expected.to_string(),
                            computed: computed.to_string(),
                        });
                    }
                }
                match re.betti {
                    None => diffs.push(CellDiff {
                        row: index,
                        cell: "betti".into(),
                        expected: format!("{:?}", row.betti),
                        computed: "no closed form for this case".into(),
                    }),
                    Some(b) => {
                        for (k, (&computed, &expected)) in
                            b.iter().zip(row.betti.iter()).enumerate()
                        {
                            if computed != expected {
                                diffs.push(CellDiff {
                                    row: index,
                                    cell: format!("beta{k}"),
                                    expected: expected.to_string(),
                                    computed: computed.to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    diffs
}

pub fn diff_table1() -> Vec<CellDiff> {
    diff_against(&TABLE1)
}
