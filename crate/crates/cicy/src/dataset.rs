//! Line-oriented dataset format for named configurations.
//!
//! A file holds any number of blocks:
//!
//! ```text
//! # comment; blank lines are ignored, '#' starts a comment anywhere
//! config quintic
//! dims 4
//! row 5
//! hodge 1 101        # optional known Hodge numbers
//! end
//! ```
//!
//! `dims` lists the factor dimensions; each `row` gives one row of the
//! degree matrix, and the number of polynomials is inferred from the first
//! row. Parsing stops at the first structural error, reporting its line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::config::ConfigurationMatrix;
use crate::topology::HodgePair;

/// A named configuration, optionally with externally supplied Hodge
/// numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigRecord {
    pub name: String,
    pub matrix: ConfigurationMatrix,
    pub hodge: Option<HodgePair>,
}

/// A parse failure, located at a 1-based input line.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn parse_numbers(line: usize, tokens: &[&str]) -> Result<Vec<u32>, ParseError> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<u32>().map_err(|_| ParseError {
                line,
                message: format!("expected a non-negative integer, found '{t}'"),
            })
        })
        .collect()
}

struct OpenBlock {
    name: String,
    start_line: usize,
    dims: Option<Vec<u32>>,
    rows: Vec<Vec<u32>>,
    hodge: Option<HodgePair>,
}

/// Parses a whole dataset, aborting at the first error.
pub fn parse_dataset(input: &str) -> Result<Vec<ConfigRecord>, ParseError> {
    let mut records: Vec<ConfigRecord> = Vec::new();
    let mut open: Option<OpenBlock> = None;

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };

        match keyword {
            "config" => {
                if let Some(block) = &open {
                    return fail(
                        line,
                        format!("'config' inside unfinished block '{}'", block.name),
                    );
                }
                let [name] = args else {
                    return fail(line, "'config' takes exactly one name");
                };
                if records.iter().any(|r| r.name == *name) {
                    return fail(line, format!("duplicate configuration name '{name}'"));
                }
                open = Some(OpenBlock {
                    name: (*name).to_string(),
                    start_line: line,
                    dims: None,
                    rows: Vec::new(),
                    hodge: None,
                });
            }
            "dims" => {
                let Some(block) = open.as_mut() else {
                    return fail(line, "'dims' outside a config block");
                };
                if block.dims.is_some() {
                    return fail(line, "duplicate 'dims'");
                }
                if args.is_empty() {
                    return fail(line, "'dims' needs at least one dimension");
                }
                block.dims = Some(parse_numbers(line, args)?);
            }
            "row" => {
                let Some(block) = open.as_mut() else {
                    return fail(line, "'row' outside a config block");
                };
                if block.dims.is_none() {
                    return fail(line, "'row' before 'dims'");
                }
                let row = parse_numbers(line, args)?;
                if let Some(first) = block.rows.first() {
                    if row.len() != first.len() {
                        return fail(
                            line,
                            format!("row has {} entries, expected {}", row.len(), first.len()),
                        );
                    }
                } else if row.is_empty() {
                    return fail(line, "'row' needs at least one degree");
                }
                block.rows.push(row);
            }
            "hodge" => {
                let Some(block) = open.as_mut() else {
                    return fail(line, "'hodge' outside a config block");
                };
                if block.hodge.is_some() {
                    return fail(line, "duplicate 'hodge'");
                }
                let values = parse_numbers(line, args)?;
                let [h11, h21] = values[..] else {
                    return fail(line, "'hodge' takes exactly two numbers: h11 h21");
                };
                block.hodge = Some(HodgePair { h11, h21 });
            }
            "end" => {
                let Some(block) = open.take() else {
                    return fail(line, "'end' outside a config block");
                };
                if !args.is_empty() {
                    return fail(line, "'end' takes no arguments");
                }
                let Some(dims) = block.dims else {
                    return fail(line, format!("block '{}' has no 'dims'", block.name));
                };
                match ConfigurationMatrix::new(dims, block.rows) {
                    Ok(matrix) => records.push(ConfigRecord {
                        name: block.name,
                        matrix,
                        hodge: block.hodge,
                    }),
                    Err(err) => {
                        return fail(line, format!("block '{}': {err}", block.name));
                    }
                }
            }
            other => {
                return fail(line, format!("unknown directive '{other}'"));
            }
        }
    }

    if let Some(block) = open {
        return fail(
            block.start_line,
            format!("block '{}' has no matching 'end'", block.name),
        );
    }
    Ok(records)
}

/// Renders records back into the dataset format; `parse_dataset` inverts
/// this exactly up to comments and whitespace.
pub fn write_dataset(records: &[ConfigRecord]) -> String {
    let mut out = String::new();
    for record in records {
        writeln!(out, "config {}", record.name).unwrap();
        let dims: Vec<String> = record.matrix.dims().iter().map(u32::to_string).collect();
        writeln!(out, "dims {}", dims.join(" ")).unwrap();
        for r in 0..record.matrix.factor_count() {
            let row: Vec<String> = record.matrix.row(r).iter().map(u32::to_string).collect();
            writeln!(out, "row {}", row.join(" ")).unwrap();
        }
        if let Some(hodge) = record.hodge {
            writeln!(out, "hodge {} {}", hodge.h11, hodge.h21).unwrap();
        }
        writeln!(out, "end").unwrap();
    }
    out
}
