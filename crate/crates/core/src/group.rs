//! Finite groups as Cayley tables over an explicit element listing.
//!
//! The listing fixes code coordinates: position `i` of a codeword belongs to
//! the `i`-th listed element. Different listings of the same group give
//! different (permutation-equivalent) codes, and reversibility depends on it.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by the built-in constructors.
pub const MAX_ORDER: usize = 1024;

/// Orders up to this bound get an exhaustive associativity check on construction.
pub const ASSOCIATIVITY_CHECK_MAX_ORDER: usize = 48;

/// How the elements of a cyclic or dihedral group are listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ListingKind {
    /// `e, a, ..., a^(n-1)`
    Cyclic,
    /// `e, a, ..., a^(n-1), b, ab, ..., a^(n-1)b`
    DihedralAiBj,
    /// `e, a, ..., a^(n-1), b, ba, ..., ba^(n-1)`
    DihedralBjAi,
    /// `e, a, ..., a^(n-1), ba^(n-1), ba^(n-2), ..., ba, b`
    DihedralReversible,
}

impl ListingKind {
    pub fn id(self) -> &'static str {
        match self {
            ListingKind::Cyclic => "cyclic",
            ListingKind::DihedralAiBj => "aibj",
            ListingKind::DihedralBjAi => "bjai",
            ListingKind::DihedralReversible => "rev",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(ListingKind::Cyclic),
            "aibj" => Ok(ListingKind::DihedralAiBj),
            "bjai" => Ok(ListingKind::DihedralBjAi),
            "rev" => Ok(ListingKind::DihedralReversible),
            _ => Err(Error::Parse(format!("unknown listing {s:?}"))),
        }
    }

    pub fn is_dihedral(self) -> bool {
        self != ListingKind::Cyclic
    }
}

impl fmt::Display for ListingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A finite group given by its multiplication table on listing positions.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    listing: ListingKind,
    label: String,
    names: Vec<String>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("names", &self.names)
            .finish()
    }
}

impl GroupTable {
    /// Validates a Cayley table (`mul[i * n + j]` is the position of `g_i g_j`)
    /// and derives the inverse map.
    pub fn from_cayley(
        mul: Vec<u32>,
        names: Vec<String>,
        listing: ListingKind,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroup(
                "a group has at least one element".into(),
            ));
        }
        if mul.len() != n * n {
            return Err(Error::InvalidGroup(format!(
                "table of size {} for {n} elements",
                mul.len()
            )));
        }
        if mul.iter().any(|&x| x as usize >= n) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let at = |i: usize, j: usize| mul[i * n + j] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![0u32; n];
        for (i, slot) in inv.iter_mut().enumerate() {
            let j = (0..n)
                .find(|&j| at(i, j) == identity && at(j, i) == identity)
                .ok_or_else(|| {
                    Error::InvalidGroup(format!("element {} has no inverse", names[i]))
                })?;
            *slot = j as u32;
        }
        if n <= ASSOCIATIVITY_CHECK_MAX_ORDER {
            for i in 0..n {
                for j in 0..n {
                    let ij = at(i, j);
                    for k in 0..n {
                        if at(ij, k) != at(i, at(j, k)) {
                            return Err(Error::InvalidGroup(format!(
                                "not associative at ({}, {}, {})",
                                names[i], names[j], names[k]
                            )));
                        }
                    }
                }
            }
        }
        Ok(GroupTable {
            order: n,
            mul,
            inv,
            identity,
            listing,
            label: label.into(),
            names,
        })
    }

    /// The cyclic group `C_n = <a | a^n = e>` listed as `e, a, ..., a^(n-1)`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidGroup(format!(
                "cyclic group order must be in 1..={MAX_ORDER}, got {n}"
            )));
        }
        let mul = (0..n * n).map(|x| ((x / n + x % n) % n) as u32).collect();
        let names = (0..n).map(|i| power_name("a", i)).collect();
        GroupTable::from_cayley(mul, names, ListingKind::Cyclic, format!("c{n}"))
    }

    /// The dihedral group `D_2n = <a, b | a^n = b^2 = e, ba = a^(n-1) b>` of
    /// order `two_n` under a dihedral listing.
    pub fn dihedral(two_n: usize, listing: ListingKind) -> Result<Self> {
        if two_n < 2 || !two_n.is_multiple_of(2) || two_n > MAX_ORDER {
            return Err(Error::InvalidGroup(format!(
                "dihedral group order must be even and in 2..={MAX_ORDER}, got {two_n}"
            )));
        }
        if !listing.is_dihedral() {
            return Err(Error::InvalidGroup(
                "dihedral group requires a dihedral listing".into(),
            ));
        }
        let n = two_n / 2;
        // Element a^i b^s is the pair (i, s).
        let listed: Vec<(usize, usize)> = (0..two_n)
            .map(|p| {
                if p < n {
                    return (p, 0);
                }
                let t = p - n;
                match listing {
                    ListingKind::DihedralAiBj => (t, 1),
                    // b a^t = a^(-t) b
                    ListingKind::DihedralBjAi => ((n - t) % n, 1),
                    // position n + t holds b a^(n-1-t) = a^(t+1) b (mod n)
                    _ => ((t + 1) % n, 1),
                }
            })
            .collect();
        let mut position = vec![0u32; two_n];
        for (p, &(i, s)) in listed.iter().enumerate() {
            position[s * n + i] = p as u32;
        }
        let mut mul = Vec::with_capacity(two_n * two_n);
        for &(i, s) in &listed {
            for &(k, t) in &listed {
                // a^i b^s a^k b^t = a^(i + (-1)^s k) b^(s + t)
                let exp = if s == 0 { (i + k) % n } else { (i + n - k) % n };
                mul.push(position[((s + t) % 2) * n + exp]);
            }
        }
        let names = (0..two_n)
            .map(|p| {
                if p < n {
                    return power_name("a", p);
                }
                let t = p - n;
                match listing {
                    ListingKind::DihedralAiBj => match t {
                        0 => "b".into(),
                        1 => "ab".into(),
                        _ => format!("a{t}b"),
                    },
                    ListingKind::DihedralBjAi => suffix_power("b", t),
                    _ => suffix_power("b", n - 1 - t),
                }
            })
            .collect();
        GroupTable::from_cayley(mul, names, listing, format!("d{two_n}:{}", listing.id()))
    }

    /// Parses `c<n>` or `d<2n>:aibj|bjai|rev`.
    pub fn parse(id: &str) -> Result<Self> {
        let id = id.trim();
        let bad = || {
            Error::Parse(format!(
                "unknown group id {id:?}; expected c<n> or d<2n>:aibj|bjai|rev"
            ))
        };
        let order = |digits: &str| -> Result<usize> {
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse().map_err(|_| bad())
        };
        if let Some(rest) = id.strip_prefix('c') {
            return GroupTable::cyclic(order(rest)?);
        }
        if let Some(rest) = id.strip_prefix('d') {
            let (digits, listing) = rest.split_once(':').ok_or_else(bad)?;
            let listing = ListingKind::parse(listing)?;
            if listing == ListingKind::Cyclic {
                return Err(bad());
            }
            return GroupTable::dihedral(order(digits)?, listing);
        }
        Err(bad())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn listing(&self) -> ListingKind {
        self.listing
    }

    /// Identifier in `c<n>` / `d<2n>:<listing>` form.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn position_of(&self, name: &str) -> Option<usize> {
        let name = name.trim();
        if name == "1" {
            return Some(self.identity);
        }
        self.names.iter().position(|n| n == name)
    }

    /// Listing positions grouped into orbits of the inverse map: `{i}` for
    /// involutions and the identity, `{i, pos(g_i^-1)}` otherwise. Orbits are
    /// ordered by their smallest position.
    pub fn inverse_pair_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut orbits = Vec::new();
        for i in 0..self.order {
            if seen[i] {
                continue;
            }
            let j = self.inv(i);
            seen[i] = true;
            seen[j] = true;
            orbits.push(if i == j { vec![i] } else { vec![i, j] });
        }
        orbits
    }
}

fn power_name(base: &str, i: usize) -> String {
    match i {
        0 => "e".into(),
        1 => base.into(),
        _ => format!("{base}{i}"),
    }
}

fn suffix_power(prefix: &str, i: usize) -> String {
    match i {
        0 => prefix.into(),
        1 => format!("{prefix}a"),
        _ => format!("{prefix}a{i}"),
    }
}
