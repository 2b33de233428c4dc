//! Classification summaries of a single code `C(v)`, as printed by the CLI.

use std::fmt;

use serde::Serialize;

use crate::code::LinearCode;
use crate::emit::row_to_hex;
use crate::error::{Error, Result};
use crate::groupring::GroupRingElement;
use crate::ring::{gray_lift_code, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub group: String,
    pub listing: String,
    pub ring: String,
    pub v: String,
    pub v_bits: String,
    pub sigma_rows: usize,
    pub sigma_cols: usize,
    /// Binary length; `|G| * 2^k` over `R_k`.
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub symmetric: bool,
    pub trivial: bool,
    pub lcd: bool,
    /// Reversibility index used: 1 over F2, `2^k` over `R_k`.
    pub reversible_index: usize,
    pub reversible: bool,
    pub g_invariant: bool,
}

impl CheckReport {
    /// Classifies `C(v)`, the row space of `sigma(v)` (its Gray image over `R_k`).
    pub fn new(v: &GroupRingElement) -> Result<Self> {
        let (report, _) = Self::with_code(v)?;
        Ok(report)
    }

    fn with_code(v: &GroupRingElement) -> Result<(Self, LinearCode)> {
        let ring = v.ring();
        let width = ring.basis_len();
        let gen = if ring == RingSpec::F2 {
            v.sigma_f2()?
        } else {
            gray_lift_code(&v.sigma())?
        };
        let code = LinearCode::from_generator(&gen);
        let group = v.group();
        let report = CheckReport {
            group: group.label().to_string(),
            listing: group.listing().id().to_string(),
            ring: ring.id(),
            v: v.to_string(),
            v_bits: v.v_bits(),
            sigma_rows: group.order(),
            sigma_cols: group.order(),
            n: code.length(),
            k: code.dimension(),
            d: code.min_distance().ok(),
            symmetric: v.is_symmetric(),
            trivial: code.is_trivial(),
            lcd: code.is_lcd(),
            reversible_index: width,
            reversible: code.is_reversible(width)?,
            g_invariant: code.is_g_invariant_blocks(group, width)?,
        };
        Ok((report, code))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group        {} ({})", self.group, self.listing)?;
        writeln!(f, "ring         {}", self.ring)?;
        writeln!(f, "v            {}", self.v)?;
        writeln!(
            f,
            "sigma(v)     {}x{} over {}",
            self.sigma_rows, self.sigma_cols, self.ring
        )?;
        match self.d {
            Some(d) => writeln!(f, "code         [{},{},{}]", self.n, self.k, d)?,
            None => writeln!(f, "code         [{},0] (zero code)", self.n)?,
        }
        writeln!(f, "symmetric    {}", yes_no(self.symmetric))?;
        let trivial = if self.trivial { " (trivial)" } else { "" };
        writeln!(f, "lcd          {}{trivial}", yes_no(self.lcd))?;
        writeln!(
            f,
            "reversible   {} (index {})",
            yes_no(self.reversible),
            self.reversible_index
        )?;
        writeln!(f, "g-invariant  {}", yes_no(self.g_invariant))
    }
}

/// A [`CheckReport`] for an `R_k` element together with the Gray image basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrayReport {
    #[serde(flatten)]
    pub check: CheckReport,
    pub basis_rows_hex: Vec<String>,
}

impl GrayReport {
    pub fn new(v: &GroupRingElement) -> Result<Self> {
        if v.ring() == RingSpec::F2 {
            return Err(Error::UnsupportedRing(
                "the Gray map needs r1, r2 or r3".into(),
            ));
        }
        let (check, code) = CheckReport::with_code(v)?;
        let basis = code.basis();
        Ok(GrayReport {
            check,
            basis_rows_hex: (0..basis.n_rows()).map(|i| row_to_hex(basis, i)).collect(),
        })
    }
}

impl fmt::Display for GrayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        writeln!(f, "basis ({} rows, hex)", self.basis_rows_hex.len())?;
        for row in &self.basis_rows_hex {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;
    use std::sync::Arc;

    fn element(group: &str, ring: RingSpec, v: &str) -> GroupRingElement {
        GroupRingElement::parse(Arc::new(GroupTable::parse(group).unwrap()), ring, v).unwrap()
    }

    #[test]
    fn c4_all_ones_is_symmetric_not_lcd() {
        let r = CheckReport::new(&element("c4", RingSpec::F2, "1111")).unwrap();
        assert!(r.symmetric && !r.lcd);
        assert_eq!((r.n, r.k, r.d), (4, 1, Some(4)));
        assert!(r.to_string().contains("lcd          no\n"));
    }

    #[test]
    fn d6_printed_example() {
        let r = CheckReport::new(&element("d6:aibj", RingSpec::F2, "000111")).unwrap();
        assert_eq!((r.k, r.d, r.lcd), (2, Some(3), true));
        assert_eq!((r.sigma_rows, r.sigma_cols), (6, 6));
    }

    #[test]
    fn zero_code_is_trivially_lcd() {
        let r = CheckReport::new(&element("c4", RingSpec::F2, "0000")).unwrap();
        assert_eq!((r.k, r.d, r.lcd, r.trivial), (0, None, true, true));
        assert!(r.to_string().contains("yes (trivial)"));
    }

    #[test]
    fn gray_report() {
        let r1 = RingSpec::rk(1).unwrap();
        let g = GrayReport::new(&element("c3", r1, "1,1,1")).unwrap();
        assert_eq!(g.check.n, 6);
        assert_eq!(g.check.reversible_index, 2);
        assert_eq!(g.basis_rows_hex.len(), g.check.k);
        assert!(GrayReport::new(&element("c3", RingSpec::F2, "111")).is_err());
    }
}
