//! Builds and renders the counting tables.
//!
//! Layout of the rise-count families: rows are sizes `n`, columns are rise
//! counts `d` running up to `max_n − 1`, and cells past a row's range stay
//! blank. The biword families use columns `m = 1..=max_m`. With source
//! `both`, disagreeing cells render as `formula≠oracle`.

use num_bigint::BigInt;
use num_traits::Zero;

use selfevac::formulas::{
    c_count, c_star_count, polynomial_of, s_star_total, s_total, PolynomialFamily,
};
use selfevac::oracles::{brute_c, brute_s_row, Caps, OracleError};

use crate::{Family, Format, Source};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Blank,
    Value(String),
    Mismatch { formula: String, oracle: String },
}

pub struct Table {
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<Cell>)>,
    pub any_mismatch: bool,
}

/// One table row described by the two sources; `in_range` is the number of
/// leading cells that belong to the row (the rest render blank when zero).
struct RowData {
    label: String,
    formula: Option<Vec<BigInt>>,
    oracle: Option<Vec<BigInt>>,
    in_range: usize,
}

fn padded(values: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = values.to_vec();
    out.resize(len, BigInt::zero());
    out
}

fn cells_for(row: &RowData, width: usize, any_mismatch: &mut bool) -> Vec<Cell> {
    let formula = row.formula.as_deref().map(|v| padded(v, width));
    let oracle = row.oracle.as_deref().map(|v| padded(v, width));
    (0..width)
        .map(|i| {
            let f = formula.as_ref().map(|v| v[i].clone());
            let o = oracle.as_ref().map(|v| v[i].clone());
            let agreed = match (&f, &o) {
                (Some(a), Some(b)) if a != b => {
                    *any_mismatch = true;
                    return Cell::Mismatch {
                        formula: a.to_string(),
                        oracle: b.to_string(),
                    };
                }
                (Some(a), _) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!("at least one source is always present"),
            };
            if i < row.in_range || !agreed.is_zero() {
                Cell::Value(agreed.to_string())
            } else {
                Cell::Blank
            }
        })
        .collect()
}

fn check_rise_table_caps(max_n: usize, caps: &Caps) -> Result<(), OracleError> {
    // Oracle rows and the odd formula rows both enumerate involutions.
    if max_n > caps.max_enumeration_n {
        return Err(OracleError::CapExceeded {
            what: "table row size".into(),
            requested: max_n,
            cap: caps.max_enumeration_n,
        });
    }
    Ok(())
}

pub fn build(
    family: Family,
    max_n: usize,
    max_m: usize,
    source: Source,
    caps: &Caps,
) -> Result<Table, OracleError> {
    let want_formula = source != Source::Oracle;
    let want_oracle = source != Source::Formula;
    let mut rows = Vec::new();

    let (corner, columns, width) = match family {
        Family::S | Family::SStar => {
            let width = max_n.max(1);
            (
                "n/d".to_string(),
                (0..width).map(|d| d.to_string()).collect::<Vec<_>>(),
                width,
            )
        }
        Family::C | Family::CStar => (
            "n/m".to_string(),
            (1..=max_m).map(|m| m.to_string()).collect::<Vec<_>>(),
            max_m,
        ),
        Family::STotals | Family::SStarTotals => {
            ("n".to_string(), vec!["count".to_string()], 1)
        }
    };

    match family {
        Family::S => {
            check_rise_table_caps(max_n, caps)?;
            for n in 0..=max_n {
                rows.push(RowData {
                    label: n.to_string(),
                    formula: want_formula.then(|| {
                        polynomial_of(PolynomialFamily::S, n)
                            .expect("family S covers all sizes")
                            .coefficients()
                            .to_vec()
                    }),
                    oracle: if want_oracle {
                        Some(brute_s_row(n, false, caps)?)
                    } else {
                        None
                    },
                    in_range: n.max(1),
                });
            }
        }
        Family::SStar => {
            if want_oracle {
                check_rise_table_caps(max_n, caps)?;
            }
            for n in (0..=max_n).step_by(2) {
                rows.push(RowData {
                    label: n.to_string(),
                    formula: want_formula.then(|| {
                        polynomial_of(PolynomialFamily::SStar, n)
                            .expect("even sizes only")
                            .coefficients()
                            .to_vec()
                    }),
                    oracle: if want_oracle {
                        Some(brute_s_row(n, true, caps)?)
                    } else {
                        None
                    },
                    in_range: n.saturating_sub(1).max(1),
                });
            }
        }
        Family::C => {
            for n in 0..=max_n {
                let mut formula = Vec::new();
                let mut oracle = Vec::new();
                for m in 1..=max_m {
                    if want_formula {
                        formula.push(c_count(n, m));
                    }
                    if want_oracle {
                        oracle.push(brute_c(n, m, false, caps)?);
                    }
                }
                rows.push(RowData {
                    label: n.to_string(),
                    formula: want_formula.then_some(formula),
                    oracle: want_oracle.then_some(oracle),
                    in_range: max_m,
                });
            }
        }
        Family::CStar => {
            for n in (0..=max_n).step_by(2) {
                let mut formula = Vec::new();
                let mut oracle = Vec::new();
                for m in 1..=max_m {
                    if want_formula {
                        formula.push(c_star_count(n, m).expect("even sizes only"));
                    }
                    if want_oracle {
                        oracle.push(brute_c(n, m, true, caps)?);
                    }
                }
                rows.push(RowData {
                    label: n.to_string(),
                    formula: want_formula.then_some(formula),
                    oracle: want_oracle.then_some(oracle),
                    in_range: max_m,
                });
            }
        }
        Family::STotals => {
            if want_oracle {
                check_rise_table_caps(max_n, caps)?;
            }
            for n in 0..=max_n {
                rows.push(RowData {
                    label: n.to_string(),
                    formula: want_formula.then(|| vec![s_total(n)]),
                    oracle: if want_oracle {
                        Some(vec![brute_s_row(n, false, caps)?.iter().sum()])
                    } else {
                        None
                    },
                    in_range: 1,
                });
            }
        }
        Family::SStarTotals => {
            if want_oracle {
                check_rise_table_caps(max_n, caps)?;
            }
            for n in (0..=max_n).step_by(2) {
                rows.push(RowData {
                    label: n.to_string(),
                    formula: want_formula
                        .then(|| vec![s_star_total(n).expect("even sizes only")]),
                    oracle: if want_oracle {
                        Some(vec![brute_s_row(n, true, caps)?.iter().sum()])
                    } else {
                        None
                    },
                    in_range: 1,
                });
            }
        }
    }

    let mut any_mismatch = false;
    let rendered_rows = rows
        .iter()
        .map(|row| (row.label.clone(), cells_for(row, width, &mut any_mismatch)))
        .collect();
    Ok(Table {
        corner,
        columns,
        rows: rendered_rows,
        any_mismatch,
    })
}

fn cell_text(cell: &Cell) -> String {
    match cell {
        Cell::Blank => String::new(),
        Cell::Value(v) => v.clone(),
        Cell::Mismatch { formula, oracle } => format!("{formula}≠{oracle}"),
    }
}

pub fn render(table: &Table, family: Family, source: Source, format: Format) -> String {
    match format {
        Format::Markdown => {
            let mut out = String::new();
            out.push_str(&format!("| {} |", table.corner));
            for c in &table.columns {
                out.push_str(&format!(" {c} |"));
            }
            out.push('\n');
            out.push_str("| --- |");
            for _ in &table.columns {
                out.push_str(" --- |");
            }
            out.push('\n');
            for (label, cells) in &table.rows {
                out.push_str(&format!("| {label} |"));
                for cell in cells {
                    out.push_str(&format!(" {} |", cell_text(cell)));
                }
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&table.corner);
            for c in &table.columns {
                out.push(',');
                out.push_str(c);
            }
            out.push('\n');
            for (label, cells) in &table.rows {
                out.push_str(label);
                for cell in cells {
                    out.push(',');
                    out.push_str(&cell_text(cell));
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let family_name = match family {
                Family::S => "S",
                Family::SStar => "S_star",
                Family::C => "c",
                Family::CStar => "c_star",
                Family::STotals => "s_totals",
                Family::SStarTotals => "s_star_totals",
            };
            let source_name = match source {
                Source::Formula => "formula",
                Source::Oracle => "oracle",
                Source::Both => "both",
            };
            let rows: Vec<serde_json::Value> = table
                .rows
                .iter()
                .map(|(label, cells)| {
                    let cells: Vec<serde_json::Value> = cells
                        .iter()
                        .map(|cell| match cell {
                            Cell::Blank => serde_json::Value::Null,
                            Cell::Value(v) => serde_json::Value::String(v.clone()),
                            Cell::Mismatch { formula, oracle } => serde_json::json!({
                                "formula": formula,
                                "oracle": oracle,
                            }),
                        })
                        .collect();
                    serde_json::json!({ "label": label, "cells": cells })
                })
                .collect();
            let value = serde_json::json!({
                "family": family_name,
                "source": source_name,
                "corner": table.corner,
                "columns": table.columns,
                "rows": rows,
                "all_match": !table.any_mismatch,
            });
            let mut text = serde_json::to_string_pretty(&value).expect("table serializes");
            text.push('\n');
            text
        }
    }
}
