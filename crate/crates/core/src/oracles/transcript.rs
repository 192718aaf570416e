use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::RowOrdering;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QueryKind {
    Edge,
    Threshold,
    Comparison,
    ChargedCompare,
}

impl QueryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            QueryKind::Edge => "EDGE",
            QueryKind::Threshold => "THRESHOLD",
            QueryKind::Comparison => "COMPARISON",
            QueryKind::ChargedCompare => "CHARGED_COMPARE",
        }
    }

    /// Whether a record of this kind is one edge query's worth of access.
    pub fn is_edge_equivalent(self) -> bool {
        !matches!(self, QueryKind::ChargedCompare)
    }
}

/// Indices are 0-based here; exports shift them to 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Query {
    Edge { row: usize, col: usize },
    Threshold { col: usize, t: usize },
    Comparison { r: usize, b: usize },
    ChargedCompare { a: usize, b: usize, width: usize },
}

impl Query {
    pub fn kind(&self) -> QueryKind {
        match self {
            Query::Edge { .. } => QueryKind::Edge,
            Query::Threshold { .. } => QueryKind::Threshold,
            Query::Comparison { .. } => QueryKind::Comparison,
            Query::ChargedCompare { .. } => QueryKind::ChargedCompare,
        }
    }

    fn export_args(&self) -> Vec<usize> {
        match *self {
            Query::Edge { row, col } => vec![row + 1, col + 1],
            // t is a value, not an index
            Query::Threshold { col, t } => vec![col + 1, t],
            Query::Comparison { r, b } => vec![r + 1, b + 1],
            Query::ChargedCompare { a, b, width } => vec![a + 1, b + 1, width],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Answer {
    Bit(bool),
    Order(RowOrdering),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Bit(b) => write!(f, "{}", u8::from(*b)),
            Answer::Order(o) => write!(f, "{o}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QueryRecord {
    pub query: Query,
    pub answer: Answer,
    pub charge: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranscriptFormat {
    Csv,
    Text,
}

impl FromStr for TranscriptFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TranscriptFormat::Csv),
            "text" | "txt" => Ok(TranscriptFormat::Text),
            other => Err(Error::Parse(format!("unknown transcript format `{other}`"))),
        }
    }
}

/// Append-only log of oracle interactions with running totals.
///
/// Totals are always maintained. Individual records are kept unless the
/// transcript was created with [`Transcript::totals_only`], which large
/// sweeps use to avoid holding millions of records.
#[derive(Debug, Clone, Default)]
pub struct Transcript {
    records: Vec<QueryRecord>,
    keep_records: bool,
    total_queries: u64,
    total_charge: u64,
}

impl Transcript {
    pub fn new() -> Self {
        Transcript {
            keep_records: true,
            ..Default::default()
        }
    }

    pub fn totals_only() -> Self {
        Transcript {
            keep_records: false,
            ..Default::default()
        }
    }

    pub fn push(&mut self, query: Query, answer: Answer, charge: u64) {
        debug_assert!(charge >= 1);
        if query.kind().is_edge_equivalent() {
            self.total_queries += 1;
        }
        self.total_charge += charge;
        if self.keep_records {
            self.records.push(QueryRecord {
                query,
                answer,
                charge,
            });
        }
    }

    pub fn records(&self) -> &[QueryRecord] {
        &self.records
    }

    pub fn keeps_records(&self) -> bool {
        self.keep_records
    }

    /// Edge queries plus threshold and comparison queries, each of which is
    /// exactly one edge query in disguise.
    pub fn total_queries(&self) -> u64 {
        self.total_queries
    }

    pub fn total_charge(&self) -> u64 {
        self.total_charge
    }

    /// Bit answers in order, skipping charged comparisons.
    pub fn answer_bits(&self) -> Vec<bool> {
        self.records
            .iter()
            .filter_map(|r| match r.answer {
                Answer::Bit(b) => Some(b),
                Answer::Order(_) => None,
            })
            .collect()
    }

    /// One record per line: `kind,args...,answer,charge` (CSV) or the same
    /// fields separated by single spaces (text). Indices are 1-based.
    pub fn export<W: Write>(&self, mut w: W, format: TranscriptFormat) -> Result<()> {
        let sep = match format {
            TranscriptFormat::Csv => ",",
            TranscriptFormat::Text => " ",
        };
        for rec in &self.records {
            let mut fields = vec![rec.query.kind().as_str().to_string()];
            fields.extend(rec.query.export_args().iter().map(usize::to_string));
            fields.push(rec.answer.to_string());
            fields.push(rec.charge.to_string());
            writeln!(w, "{}", fields.join(sep))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_follow_records() {
        let mut t = Transcript::new();
        t.push(Query::Edge { row: 0, col: 1 }, Answer::Bit(true), 1);
        t.push(Query::Threshold { col: 1, t: 2 }, Answer::Bit(false), 1);
        t.push(
            Query::ChargedCompare {
                a: 0,
                b: 1,
                width: 9,
            },
            Answer::Order(RowOrdering::Less),
            3,
        );
        assert_eq!(t.total_queries(), 2);
        assert_eq!(t.total_charge(), 5);
        assert_eq!(t.records().len(), 3);
        assert_eq!(t.answer_bits(), vec![true, false]);

        let mut out = Vec::new();
        t.export(&mut out, TranscriptFormat::Csv).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "EDGE,1,2,1,1\nTHRESHOLD,2,2,0,1\nCHARGED_COMPARE,1,2,9,LESS,3\n"
        );
        let mut out = Vec::new();
        t.export(&mut out, TranscriptFormat::Text).unwrap();
        assert!(String::from_utf8(out)
            .unwrap()
            .starts_with("EDGE 1 2 1 1\n"));
    }

    #[test]
    fn totals_only_drops_records() {
        let mut t = Transcript::totals_only();
        for _ in 0..10 {
            t.push(Query::Edge { row: 0, col: 0 }, Answer::Bit(true), 1);
        }
        assert!(t.records().is_empty());
        assert_eq!(t.total_queries(), 10);
        assert_eq!(t.total_charge(), 10);
    }
}
