//! Linear codes from group rings: the row space of `sigma(v)` for `v` in
//! `RG`, with LCD (trivial hull) and reversibility classification and
//! exhaustive searches over symmetric elements `v = v^T`.

pub mod code;
pub mod emit;
pub mod error;
pub mod gf2lin;
pub mod group;
pub mod groupring;
pub mod report;
pub mod ring;
pub mod search;
pub mod tables;

pub use code::{CodeFlags, CodeRecord, LinearCode, Params, Provenance};
pub use emit::{emit_table, parse_table, Format, RecordRow};
pub use error::{Error, Result};
pub use gf2lin::{intersect_row_spaces, min_weight, null_space, rref, BitMatrix, EchelonForm};
pub use group::{GroupTable, ListingKind};
pub use groupring::{closed_form_sigma, ClosedFormFamily, GroupRingElement};
pub use report::{CheckReport, GrayReport};
pub use ring::{gray_lift_code, RingElement, RingMatrix, RingSpec};
pub use search::{
    enumerate_symmetric, search_lcd, search_reversible_lcd, ResultTable, SearchReport, SearchSpec,
};
pub use tables::{reference_table, reference_tables, TableCheck, TableMode, TablePreset};
