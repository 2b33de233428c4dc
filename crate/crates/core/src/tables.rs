//! Preconfigured searches with their expected parameter sets.
//!
//! The expected rows live in `fixtures/reference_tables.txt`, compiled in.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::code::Params;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ring::RingSpec;
use crate::search::{search_lcd, search_reversible_lcd, SearchReport, SearchSpec};

const REFERENCE_TABLES: &str = include_str!("../fixtures/reference_tables.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMode {
    Lcd,
    ReversibleLcd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TablePreset {
    pub id: u32,
    pub group: String,
    pub mode: TableMode,
    /// Expected `(n, k, d)` rows.
    pub expected: BTreeSet<(usize, usize, usize)>,
}

/// Parses the reference table format: `table <id> <group> lcd|rev` headers,
/// each followed by `n k d` lines. `#` starts a comment.
pub fn parse_reference_tables(text: &str) -> Result<Vec<TablePreset>> {
    let mut out: Vec<TablePreset> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "table" {
            let [_, id, group, mode] = fields[..] else {
                return Err(err("expected `table <id> <group> <mode>`"));
            };
            let id: u32 = id.parse().map_err(|_| err("bad table id"))?;
            if out.iter().any(|t| t.id == id) {
                return Err(err("duplicate table id"));
            }
            let mode = match mode {
                "lcd" => TableMode::Lcd,
                "rev" => TableMode::ReversibleLcd,
                _ => return Err(err("mode must be lcd or rev")),
            };
            GroupTable::parse(group).map_err(|e| err(&e.to_string()))?;
            out.push(TablePreset {
                id,
                group: group.to_string(),
                mode,
                expected: BTreeSet::new(),
            });
        } else {
            let table = out
                .last_mut()
                .ok_or_else(|| err("row before any table header"))?;
            let nums = fields
                .iter()
                .map(|f| f.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| err("rows are three integers"))?;
            let [n, k, d] = nums[..] else {
                return Err(err("rows are three integers"));
            };
            table.expected.insert((n, k, d));
        }
    }
    Ok(out)
}

/// All bundled presets, ordered by id.
pub fn reference_tables() -> Vec<TablePreset> {
    let mut t = parse_reference_tables(REFERENCE_TABLES).expect("bundled reference tables parse");
    t.sort_by_key(|p| p.id);
    t
}

pub fn reference_table(id: u32) -> Result<TablePreset> {
    reference_tables()
        .into_iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::InvalidArgument(format!("no table {id}")))
}

impl TablePreset {
    /// Every symmetric `v` over F2, keeping codes of dimension `2..=n-1`.
    pub fn search_spec(&self) -> Result<SearchSpec> {
        let group = Arc::new(GroupTable::parse(&self.group)?);
        let n = group.order();
        let mut spec = SearchSpec::new(group, RingSpec::F2);
        spec.min_k = 2;
        spec.max_k = Some(n.saturating_sub(1));
        Ok(spec)
    }

    pub fn run(&self) -> Result<TableCheck> {
        self.run_with(self.search_spec()?)
    }

    /// Runs with a caller-adjusted spec (for example a thread count).
    pub fn run_with(&self, spec: SearchSpec) -> Result<TableCheck> {
        let report = match self.mode {
            TableMode::Lcd => search_lcd(&spec)?,
            TableMode::ReversibleLcd => search_reversible_lcd(&spec)?,
        };
        Ok(TableCheck::new(self, report))
    }
}

#[derive(Debug, Clone)]
pub struct TableCheck {
    pub id: u32,
    pub found: BTreeSet<(usize, usize, usize)>,
    pub missing: BTreeSet<(usize, usize, usize)>,
    pub unexpected: BTreeSet<(usize, usize, usize)>,
    pub report: SearchReport,
}

impl TableCheck {
    fn new(preset: &TablePreset, report: SearchReport) -> Self {
        let found: BTreeSet<_> = report
            .table
            .parameter_sets()
            .iter()
            .filter_map(|p| p.d.map(|d| (p.n, p.k, d)))
            .collect();
        TableCheck {
            id: preset.id,
            missing: preset.expected.difference(&found).copied().collect(),
            unexpected: found.difference(&preset.expected).copied().collect(),
            found,
            report,
        }
    }

    /// Exact equality of the found and expected sets, with no reversibility failures.
    pub fn matches(&self) -> bool {
        self.missing.is_empty()
            && self.unexpected.is_empty()
            && self.report.reversibility_failures.is_empty()
    }

    /// Every expected row was found.
    pub fn covers_expected(&self) -> bool {
        self.missing.is_empty()
    }
}

impl fmt::Display for TableCheck {
    /// Diff-style listing: ` ` for matching rows, `-` missing, `+` unexpected.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let all: BTreeSet<_> = self.found.union(&self.missing).copied().collect();
        let mut rows: Vec<_> = all.into_iter().collect();
        rows.sort_by_key(|&(n, k, d)| (n, k, std::cmp::Reverse(d)));
        for (n, k, d) in rows {
            let p = Params { n, k, d: Some(d) };
            let mark = if self.missing.contains(&(n, k, d)) {
                '-'
            } else if self.unexpected.contains(&(n, k, d)) {
                '+'
            } else {
                ' '
            };
            writeln!(f, "{mark} {p}")?;
        }
        for r in &self.report.reversibility_failures {
            writeln!(
                f,
                "! {} not reversible (v = {})",
                r.params, r.provenance.v_bits
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_parse() {
        let t = reference_tables();
        assert_eq!(
            t.iter().map(|p| p.id).collect::<Vec<_>>(),
            (1..=16).collect::<Vec<_>>()
        );
        assert_eq!(t[7].expected.len(), 21);
        assert_eq!(t[13].mode, TableMode::ReversibleLcd);
        assert!(t.iter().all(|p| p
            .expected
            .iter()
            .all(|&(n, _, _)| n == GroupTable::parse(&p.group).unwrap().order())));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_reference_tables("28 4 7").is_err());
        assert!(parse_reference_tables("table 1 c28").is_err());
        assert!(parse_reference_tables("table 1 c28 foo").is_err());
        assert!(parse_reference_tables("table 1 x28 lcd").is_err());
        assert!(parse_reference_tables("table 1 c28 lcd\n28 4").is_err());
        assert!(parse_reference_tables("table 1 c28 lcd\ntable 1 c28 lcd").is_err());
        assert_eq!(parse_reference_tables("# nothing\n").unwrap(), vec![]);
    }

    #[test]
    fn unknown_table() {
        assert!(reference_table(17).is_err());
        assert_eq!(reference_table(14).unwrap().group, "d22:rev");
    }

    #[test]
    fn small_preset_diff() {
        let preset = parse_reference_tables("table 99 c7 lcd\n7 3 4\n7 2 9\n")
            .unwrap()
            .remove(0);
        let check = preset.run().unwrap();
        assert!(!check.matches());
        assert!(check.missing.contains(&(7, 2, 9)));
        assert!(check.to_string().contains("- [7,2,9]"));
    }
}
