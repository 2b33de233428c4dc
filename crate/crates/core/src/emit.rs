//! Text formats for result tables: CSV and JSON (both lossless) and Markdown.
//!
//! One record per row with the fields
//! `group, listing, ring, v_bits, n, k, d, lcd, reversible, basis_rows_hex`.
//! Each basis row is hex encoded four columns per digit, column 0 being the
//! high bit of the first digit; the last digit is zero padded.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::{CodeFlags, CodeRecord, LinearCode, Params, Provenance};
use crate::error::{Error, Result};
use crate::gf2lin::BitMatrix;
use crate::group::{GroupTable, ListingKind};
use crate::groupring::GroupRingElement;
use crate::ring::RingSpec;
use crate::search::ResultTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// The serialized form of a [`CodeRecord`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordRow {
    pub group: String,
    pub listing: String,
    pub ring: String,
    pub v_bits: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub lcd: bool,
    pub reversible: bool,
    pub basis_rows_hex: Vec<String>,
}

impl From<&CodeRecord> for RecordRow {
    fn from(r: &CodeRecord) -> Self {
        let basis = r.code.basis();
        RecordRow {
            group: r.provenance.group.clone(),
            listing: r.provenance.listing.id().to_string(),
            ring: r.provenance.ring.id(),
            v_bits: r.provenance.v_bits.clone(),
            n: r.params.n,
            k: r.params.k,
            d: r.params.d,
            lcd: r.flags.lcd,
            reversible: r.flags.reversible,
            basis_rows_hex: (0..basis.n_rows()).map(|i| row_to_hex(basis, i)).collect(),
        }
    }
}

impl RecordRow {
    /// Rebuilds the record, re-deriving the group invariance flag from the group.
    pub fn to_record(&self) -> Result<CodeRecord> {
        let group = Arc::new(GroupTable::parse(&self.group)?);
        let listing = ListingKind::parse(&self.listing)?;
        if listing != group.listing() {
            return Err(Error::Parse(format!(
                "listing {} does not match group {}",
                self.listing, self.group
            )));
        }
        let ring = RingSpec::parse(&self.ring)?;
        // validates the coefficient string against the group and ring
        GroupRingElement::from_v_bits(group.clone(), ring, &self.v_bits)?;
        let width = ring.basis_len();
        if self.n != group.order() * width {
            return Err(Error::Parse(format!(
                "length {} does not fit {} over {ring}",
                self.n, self.group
            )));
        }
        let mut basis = BitMatrix::empty(self.n);
        for hex in &self.basis_rows_hex {
            basis.push_row(&hex_to_row(hex, self.n)?)?;
        }
        let code = LinearCode::from_generator(&basis);
        if code.basis() != &basis || code.dimension() != self.k {
            return Err(Error::Parse(
                "basis rows are not a reduced echelon basis of dimension k".into(),
            ));
        }
        if (self.k == 0) != self.d.is_none() {
            return Err(Error::Parse("d must be present exactly when k > 0".into()));
        }
        Ok(CodeRecord {
            params: Params {
                n: self.n,
                k: self.k,
                d: self.d,
            },
            flags: CodeFlags {
                lcd: self.lcd,
                reversible: self.reversible,
                g_invariant: code.is_g_invariant_blocks(&group, width)?,
            },
            code,
            provenance: Provenance {
                group: self.group.clone(),
                listing,
                ring,
                v_bits: self.v_bits.clone(),
            },
        })
    }
}

pub fn row_to_hex(m: &BitMatrix, r: usize) -> String {
    let n = m.n_cols();
    let mut out = String::with_capacity(n.div_ceil(4));
    for start in (0..n).step_by(4) {
        let nibble = (0..4).fold(0u32, |acc, i| {
            let c = start + i;
            (acc << 1) | u32::from(c < n && m.get(r, c))
        });
        out.push(char::from_digit(nibble, 16).expect("nibble"));
    }
    out
}

pub fn hex_to_row(hex: &str, n: usize) -> Result<Vec<u64>> {
    if hex.len() != n.div_ceil(4) {
        return Err(Error::Parse(format!(
            "hex row {hex:?} has the wrong length for {n} columns"
        )));
    }
    let mut words = vec![0u64; n.div_ceil(64)];
    for (i, ch) in hex.chars().enumerate() {
        let nibble = ch
            .to_digit(16)
            .ok_or_else(|| Error::Parse(format!("invalid hex digit {ch:?}")))?;
        for b in 0..4 {
            if (nibble >> (3 - b)) & 1 == 1 {
                let c = i * 4 + b;
                if c >= n {
                    return Err(Error::Parse(format!("hex row {hex:?} sets padding bits")));
                }
                words[c / 64] |= 1 << (c % 64);
            }
        }
    }
    Ok(words)
}

const CSV_HEADER: [&str; 10] = [
    "group",
    "listing",
    "ring",
    "v_bits",
    "n",
    "k",
    "d",
    "lcd",
    "reversible",
    "basis_rows_hex",
];

/// Renders a table. Records appear in table order (ascending `k`, then descending `d`).
pub fn emit_table(table: &ResultTable, format: Format) -> Result<String> {
    let rows: Vec<RecordRow> = table.records.iter().map(RecordRow::from).collect();
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&rows).map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).map_err(csv_err)?;
            for r in &rows {
                let d = r.d.map(|d| d.to_string()).unwrap_or_default();
                w.write_record([
                    r.group.as_str(),
                    &r.listing,
                    &r.ring,
                    &r.v_bits,
                    &r.n.to_string(),
                    &r.k.to_string(),
                    &d,
                    &r.lcd.to_string(),
                    &r.reversible.to_string(),
                    &r.basis_rows_hex.join(" "),
                ])
                .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
        }
        Format::Markdown => {
            let mut s = String::from(
                "| group | ring | [n,k,d] | lcd | reversible | v |\n|---|---|---|---|---|---|\n",
            );
            for (rec, row) in table.records.iter().zip(&rows) {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | `{}` |",
                    row.group, row.ring, rec.params, row.lcd, row.reversible, row.v_bits
                );
            }
            Ok(s)
        }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(format!("csv: {e}"))
}

/// Parses JSON or CSV output of [`emit_table`].
pub fn parse_table(text: &str, format: Format) -> Result<ResultTable> {
    let rows: Vec<RecordRow> = match format {
        Format::Json => {
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("json: {e}")))?
        }
        Format::Csv => {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(true)
                .from_reader(text.as_bytes());
            let header = reader.headers().map_err(csv_err)?.clone();
            if header.iter().ne(CSV_HEADER) {
                return Err(Error::Parse("unexpected csv header".into()));
            }
            let mut rows = Vec::new();
            for rec in reader.records() {
                let rec = rec.map_err(csv_err)?;
                if rec.len() != CSV_HEADER.len() {
                    return Err(Error::Parse("wrong number of csv fields".into()));
                }
                let num = |i: usize| -> Result<usize> {
                    rec[i]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad number {:?}", &rec[i])))
                };
                let flag = |i: usize| -> Result<bool> {
                    rec[i]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad flag {:?}", &rec[i])))
                };
                rows.push(RecordRow {
                    group: rec[0].to_string(),
                    listing: rec[1].to_string(),
                    ring: rec[2].to_string(),
                    v_bits: rec[3].to_string(),
                    n: num(4)?,
                    k: num(5)?,
                    d: if rec[6].is_empty() {
                        None
                    } else {
                        Some(num(6)?)
                    },
                    lcd: flag(7)?,
                    reversible: flag(8)?,
                    basis_rows_hex: rec[9].split_whitespace().map(str::to_string).collect(),
                });
            }
            rows
        }
        Format::Markdown => {
            return Err(Error::InvalidArgument(
                "markdown tables are not parsed".into(),
            ))
        }
    };
    let records = rows
        .iter()
        .map(RecordRow::to_record)
        .collect::<Result<Vec<_>>>()?;
    Ok(ResultTable { records })
}
