//! Reference tables and sequence prefixes embedded from `data/`.
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::Count;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub n: usize,
    pub total: Count,
    /// Cells `f = 1..=n`.
    pub cells: Vec<Count>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTable {
    /// Short name, also the data file stem.
    pub name: &'static str,
    pub family: FamilyId,
    pub rows: Vec<GoldenRow>,
}

impl GoldenTable {
    pub fn max_n(&self) -> usize {
        self.rows.last().map_or(0, |r| r.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenSequence {
    pub name: String,
    pub values: Vec<Count>,
}

const TABLES: [(&str, FamilyId, &str); 10] = [
    ("p", FamilyId::P, include_str!("../data/p.tsv")),
    ("c", FamilyId::C, include_str!("../data/c.tsv")),
    ("kc2", FamilyId::KC(2), include_str!("../data/kc2.tsv")),
    ("kc3", FamilyId::KC(3), include_str!("../data/kc3.tsv")),
    ("m", FamilyId::M, include_str!("../data/m.tsv")),
    ("mv", FamilyId::Mv, include_str!("../data/mv.tsv")),
    ("x", FamilyId::X, include_str!("../data/x.tsv")),
    ("xt", FamilyId::Xt, include_str!("../data/xt.tsv")),
    ("x2", FamilyId::X2, include_str!("../data/x2.tsv")),
    ("x3", FamilyId::X3, include_str!("../data/x3.tsv")),
];

const SEQUENCES: &str = include_str!("../data/sequences.tsv");

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(line: usize, s: &str) -> Result<Count> {
    Count::from_str(s.trim()).map_err(|_| Error::Parse {
        pos: line,
        msg: format!("line {line}: not a count: {s:?}"),
    })
}

/// Parses a table in the `N total cell...` TSV layout. Each row must hold
/// exactly `N` cells summing to the total.
pub fn parse_table(name: &'static str, family: FamilyId, text: &str) -> Result<GoldenTable> {
    let mut rows = Vec::new();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split('\t').collect();
        let n: usize = fields[0].trim().parse().map_err(|_| Error::Parse {
            pos: line,
            msg: format!("line {line}: bad N"),
        })?;
        if fields.len() != n + 2 {
            return Err(Error::Parse {
                pos: line,
                msg: format!(
                    "line {line}: expected {} cells, found {}",
                    n,
                    fields.len().saturating_sub(2)
                ),
            });
        }
        let total = number(line, fields[1])?;
        let cells = fields[2..]
            .iter()
            .map(|s| number(line, s))
            .collect::<Result<Vec<_>>>()?;
        if cells.iter().sum::<Count>() != total {
            return Err(Error::Parse {
                pos: line,
                msg: format!("line {line}: cells do not sum to the total"),
            });
        }
        rows.push(GoldenRow { n, total, cells });
    }
    Ok(GoldenTable { name, family, rows })
}

/// The ten reference tables, in order.
pub fn tables() -> Vec<GoldenTable> {
    TABLES
        .iter()
        .map(|&(name, fam, text)| {
            parse_table(name, fam, text).expect("embedded table is well formed")
        })
        .collect()
}

pub fn table(name: &str) -> Option<GoldenTable> {
    tables().into_iter().find(|t| t.name == name)
}

pub fn sequences() -> Vec<GoldenSequence> {
    data_lines(SEQUENCES)
        .map(|(line, l)| {
            let (name, vals) = l.split_once('\t').expect("name and values");
            GoldenSequence {
                name: name.to_string(),
                values: vals
                    .split(',')
                    .map(|v| number(line, v))
                    .collect::<Result<_>>()
                    .expect("embedded sequence is well formed"),
            }
        })
        .collect()
}

pub fn sequence(name: &str) -> Option<GoldenSequence> {
    sequences().into_iter().find(|s| s.name == name)
}
