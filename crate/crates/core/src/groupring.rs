//! Group ring elements `v = sum alpha_g g` and the matrix embedding
//! `sigma(v)`, whose `(i, j)` entry is `alpha_{g_i^-1 g_j}`.
//!
//! The coefficient vector of an element, indexed by listing position, is
//! also its codeword image; there is no separate map between the two.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2lin::{null_space, BitMatrix};
use crate::group::{GroupTable, ListingKind};
use crate::ring::{RingElement, RingMatrix, RingSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Arc<GroupTable>,
    ring: RingSpec,
    coeffs: Vec<RingElement>,
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupRingElement({} over {}: {})",
            self.group.label(),
            self.ring,
            self
        )
    }
}

impl GroupRingElement {
    pub fn zero(group: Arc<GroupTable>, ring: RingSpec) -> Self {
        let coeffs = vec![ring.zero(); group.order()];
        GroupRingElement {
            group,
            ring,
            coeffs,
        }
    }

    pub fn one(group: Arc<GroupTable>, ring: RingSpec) -> Self {
        let mut v = Self::zero(group, ring);
        let e = v.group.identity();
        v.coeffs[e] = ring.one();
        v
    }

    pub fn from_coeffs(
        group: Arc<GroupTable>,
        ring: RingSpec,
        coeffs: Vec<RingElement>,
    ) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.spec() != ring) {
            return Err(Error::RingMismatch(ring.id(), bad.spec().id()));
        }
        Ok(GroupRingElement {
            group,
            ring,
            coeffs,
        })
    }

    /// An element of `F_2 G` from its coefficient bits.
    pub fn from_bits(group: Arc<GroupTable>, bits: &[bool]) -> Result<Self> {
        let coeffs = bits
            .iter()
            .map(|&b| {
                if b {
                    RingSpec::F2.one()
                } else {
                    RingSpec::F2.zero()
                }
            })
            .collect();
        Self::from_coeffs(group, RingSpec::F2, coeffs)
    }

    /// An element of `F_2 G` whose coefficient at position `i` is bit `i` of `mask` (order at most 64).
    pub fn from_mask(group: Arc<GroupTable>, mask: u64) -> Result<Self> {
        if group.order() > 64 {
            return Err(Error::InvalidArgument(
                "from_mask needs a group of order at most 64".into(),
            ));
        }
        let bits: Vec<bool> = (0..group.order()).map(|i| (mask >> i) & 1 == 1).collect();
        Self::from_bits(group, &bits)
    }

    /// Parses an element.
    ///
    /// Over `F_2`: a `0`/`1` string over the listing (`000111`), or element
    /// names joined by `+` (`b+ab+a2b`; `1` and `e` denote the identity).
    /// Over `R_k`: the coefficients as a comma-separated list in ring notation
    /// (`1+u1,0,u1,...`), or the concatenated coefficient bit strings
    /// produced by [`GroupRingElement::v_bits`].
    pub fn parse(group: Arc<GroupTable>, ring: RingSpec, s: &str) -> Result<Self> {
        let s = s.trim();
        let n = group.order();
        if ring == RingSpec::F2 {
            if s.len() == n && s.chars().all(|c| c == '0' || c == '1') {
                let bits: Vec<bool> = s.chars().map(|c| c == '1').collect();
                return Self::from_bits(group, &bits);
            }
            let mut v = Self::zero(group, ring);
            if s == "0" {
                return Ok(v);
            }
            for term in s.split('+').map(str::trim) {
                let p = v.group.position_of(term).ok_or_else(|| {
                    Error::Parse(format!("{term:?} is not an element of {}", v.group.label()))
                })?;
                v.coeffs[p] = v.coeffs[p].add(ring.one())?;
            }
            return Ok(v);
        }
        if !s.contains(',')
            && s.len() == n * ring.basis_len()
            && s.chars().all(|c| c == '0' || c == '1')
        {
            return Self::from_v_bits(group, ring, s);
        }
        let coeffs = s
            .split(',')
            .map(|t| RingElement::parse(ring, t))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(group, ring, coeffs)
    }

    /// Inverse of [`GroupRingElement::v_bits`].
    pub fn from_v_bits(group: Arc<GroupTable>, ring: RingSpec, s: &str) -> Result<Self> {
        let width = ring.basis_len();
        if s.len() != group.order() * width || !s.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::Parse(format!(
                "expected {} bits for {} over {ring}",
                group.order() * width,
                group.label()
            )));
        }
        let bytes = s.as_bytes();
        let coeffs = bytes
            .chunks(width)
            .map(|chunk| {
                let bits = chunk.iter().enumerate().fold(0u8, |acc, (i, &c)| {
                    if c == b'1' {
                        acc | (1 << i)
                    } else {
                        acc
                    }
                });
                ring.element(bits)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(group, ring, coeffs)
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    /// Coefficients indexed by listing position; this is also the codeword `Psi(v)`.
    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coefficient(&self, position: usize) -> RingElement {
        self.coeffs[position]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficient bits: one character per position over `F_2`, or the
    /// `2^k` monomial coefficients of each position concatenated over `R_k`.
    pub fn v_bits(&self) -> String {
        let width = self.ring.basis_len();
        self.coeffs
            .iter()
            .flat_map(|c| (0..width).map(move |i| if c.coefficient(i) { '1' } else { '0' }))
            .collect()
    }

    /// Coefficient mask of an `F_2` element; `None` over `R_k` or for orders above 64.
    pub fn to_mask(&self) -> Option<u64> {
        if self.ring != RingSpec::F2 || self.coeffs.len() > 64 {
            return None;
        }
        Some(self.coeffs.iter().enumerate().fold(0u64, |acc, (i, c)| {
            if c.is_zero() {
                acc
            } else {
                acc | (1 << i)
            }
        }))
    }

    fn check(&self, rhs: &GroupRingElement) -> Result<()> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch(self.ring.id(), rhs.ring.id()));
        }
        if !Arc::ptr_eq(&self.group, &rhs.group) && self.group != rhs.group {
            return Err(Error::GroupMismatch(
                self.group.label().into(),
                rhs.group.label().into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &GroupRingElement) -> Result<GroupRingElement> {
        self.check(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(*b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupRingElement {
            coeffs,
            ..self.clone()
        })
    }

    /// Convolution product: the coefficient of `g_k` is `sum_{g_i g_j = g_k} alpha_i beta_j`.
    pub fn mul(&self, rhs: &GroupRingElement) -> Result<GroupRingElement> {
        self.check(rhs)?;
        let g = &self.group;
        let mut coeffs = vec![self.ring.zero(); g.order()];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let k = g.mul(i, j);
                coeffs[k] = coeffs[k].add(a.mul(*b)?)?;
            }
        }
        Ok(GroupRingElement {
            coeffs,
            ..self.clone()
        })
    }

    /// The canonical involution `v^T = sum alpha_g g^-1`.
    pub fn transpose_involution(&self) -> GroupRingElement {
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[self.group.inv(i)] = *c;
        }
        GroupRingElement {
            coeffs,
            ..self.clone()
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.coeffs.len()).all(|i| self.coeffs[i] == self.coeffs[self.group.inv(i)])
    }

    /// `sigma(v)` with entry `(i, j) = alpha_{g_i^-1 g_j}`; row `i` is the coefficient vector of `g_i^-1 v`.
    pub fn sigma(&self) -> RingMatrix {
        let g = &self.group;
        let n = g.order();
        let mut m = RingMatrix::zeros(self.ring, n, n);
        for i in 0..n {
            let inv = g.inv(i);
            for j in 0..n {
                m.set(i, j, self.coeffs[g.mul(inv, j)]);
            }
        }
        m
    }

    /// `sigma(v)` as a [`BitMatrix`]; `F_2` only.
    pub fn sigma_f2(&self) -> Result<BitMatrix> {
        if self.ring != RingSpec::F2 {
            return Err(Error::UnsupportedRing(format!(
                "sigma_f2 over {}",
                self.ring
            )));
        }
        let g = &self.group;
        let n = g.order();
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            let inv = g.inv(i);
            for j in 0..n {
                if !self.coeffs[g.mul(inv, j)].is_zero() {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Basis of `{ w : v w = 0 }` as coefficient-vector rows. Since the left
    /// ideal `I(v)` is spanned by the `g v`, this is also the right annihilator of `I(v)`.
    pub fn right_annihilator_basis(&self) -> Result<BitMatrix> {
        if self.ring != RingSpec::F2 {
            return Err(Error::UnsupportedRing(format!(
                "right annihilator over {}",
                self.ring
            )));
        }
        let g = &self.group;
        let n = g.order();
        // (v w)_k = sum_j v_{g_k g_j^-1} w_j
        let mut map = BitMatrix::zeros(n, n);
        for k in 0..n {
            for j in 0..n {
                if !self.coeffs[g.mul(k, g.inv(j))].is_zero() {
                    map.set(k, j, true);
                }
            }
        }
        Ok(null_space(&map))
    }

    /// Builds the symmetric element taking `free[o]` on every position of the
    /// `o`-th inverse-pair orbit of the group.
    pub fn from_free_coefficients(
        group: Arc<GroupTable>,
        ring: RingSpec,
        free: &[RingElement],
    ) -> Result<Self> {
        let orbits = group.inverse_pair_orbits();
        if free.len() != orbits.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} free coefficients for {} orbits",
                free.len(),
                orbits.len()
            )));
        }
        let mut coeffs = vec![ring.zero(); group.order()];
        for (orbit, &c) in orbits.iter().zip(free) {
            for &p in orbit {
                coeffs[p] = c;
            }
        }
        Self::from_coeffs(group, ring, coeffs)
    }

    /// The free coefficients of a symmetric element, one per orbit.
    pub fn free_coefficients(&self) -> Option<Vec<RingElement>> {
        if !self.is_symmetric() {
            return None;
        }
        Some(
            self.group
                .inverse_pair_orbits()
                .iter()
                .map(|o| self.coeffs[o[0]])
                .collect(),
        )
    }
}

/// Element names joined by `+` over `F_2`; coefficient list otherwise.
impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ring != RingSpec::F2 {
            let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            return f.write_str(&parts.join(","));
        }
        let terms: Vec<&str> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| self.group.element_names()[i].as_str())
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

/// Group and listing families with a direct block/circulant form of
/// `sigma(v)` for symmetric `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormFamily {
    CyclicEven,
    CyclicOdd,
    DihedralAiBjEven,
    DihedralAiBjOdd,
    DihedralBjAiEven,
    DihedralBjAiOdd,
}

impl ClosedFormFamily {
    /// The family matching a group's listing, if there is one.
    pub fn for_group(g: &GroupTable) -> Option<Self> {
        let order = g.order();
        match g.listing() {
            ListingKind::Cyclic if order.is_multiple_of(2) => Some(Self::CyclicEven),
            ListingKind::Cyclic => Some(Self::CyclicOdd),
            ListingKind::DihedralAiBj if (order / 2).is_multiple_of(2) => {
                Some(Self::DihedralAiBjEven)
            }
            ListingKind::DihedralAiBj => Some(Self::DihedralAiBjOdd),
            ListingKind::DihedralBjAi if (order / 2).is_multiple_of(2) => {
                Some(Self::DihedralBjAiEven)
            }
            ListingKind::DihedralBjAi => Some(Self::DihedralBjAiOdd),
            ListingKind::DihedralReversible => None,
        }
    }

    fn is_cyclic(self) -> bool {
        matches!(self, Self::CyclicEven | Self::CyclicOdd)
    }

    fn wants_even(self) -> bool {
        matches!(
            self,
            Self::CyclicEven | Self::DihedralAiBjEven | Self::DihedralBjAiEven
        )
    }

    /// Number of free coefficients for a group of the given order.
    pub fn free_count(self, order: usize) -> usize {
        if self.is_cyclic() {
            order / 2 + 1
        } else {
            let n = order / 2;
            n / 2 + 1 + n
        }
    }
}

/// Circulant: row `i` is the first row shifted right by `i`.
fn circ(first: &[bool]) -> Vec<Vec<bool>> {
    let n = first.len();
    (0..n)
        .map(|i| (0..n).map(|j| first[(j + n - i) % n]).collect())
        .collect()
}

/// Reverse circulant: row `i` is the first row shifted left by `i`.
fn revcirc(first: &[bool]) -> Vec<Vec<bool>> {
    let n = first.len();
    (0..n)
        .map(|i| (0..n).map(|j| first[(j + i) % n]).collect())
        .collect()
}

fn transpose(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

/// First row `alpha_e, alpha_a, ..., alpha_a^{n/2}, ..., alpha_a` of the
/// palindromic circulant.
fn palindrome(rotations: &[bool], n: usize) -> Vec<bool> {
    (0..n).map(|j| rotations[j.min(n - j)]).collect()
}

/// `sigma(v)` for symmetric `v` over `F_2`, assembled from circulant blocks.
///
/// `order` is the group order. `free` lists `alpha_e, alpha_a, ...,
/// alpha_{a^floor(n/2)}` followed, for dihedral families, by the `n`
/// reflection coefficients in listing order (`b, ab, a^2 b, ...` or
/// `b, ba, ba^2, ...`). The result equals `sigma` of the expanded element.
pub fn closed_form_sigma(
    family: ClosedFormFamily,
    order: usize,
    free: &[bool],
) -> Result<BitMatrix> {
    let n = if family.is_cyclic() { order } else { order / 2 };
    if n == 0
        || (!family.is_cyclic() && !order.is_multiple_of(2))
        || (n % 2 == 0) != family.wants_even()
    {
        return Err(Error::InvalidArgument(format!(
            "order {order} does not belong to {family:?}"
        )));
    }
    let expected = family.free_count(order);
    if free.len() != expected {
        return Err(Error::DimensionMismatch(format!(
            "{family:?} of order {order} takes {expected} free coefficients, got {}",
            free.len()
        )));
    }
    let rotations = &free[..n / 2 + 1];
    let a = circ(&palindrome(rotations, n));
    let blocks: Vec<Vec<bool>> = match family {
        ClosedFormFamily::CyclicEven | ClosedFormFamily::CyclicOdd => a,
        ClosedFormFamily::DihedralAiBjEven | ClosedFormFamily::DihedralAiBjOdd => {
            let b = circ(&free[n / 2 + 1..]);
            let (bt, at) = (transpose(&b), transpose(&a));
            stack_blocks(&a, &b, &bt, &at)
        }
        ClosedFormFamily::DihedralBjAiEven | ClosedFormFamily::DihedralBjAiOdd => {
            let b = revcirc(&free[n / 2 + 1..]);
            stack_blocks(&a, &b, &b, &a)
        }
    };
    let mut m = BitMatrix::zeros(order, order);
    for (i, row) in blocks.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x {
                m.set(i, j, true);
            }
        }
    }
    Ok(m)
}

fn stack_blocks(
    tl: &[Vec<bool>],
    tr: &[Vec<bool>],
    bl: &[Vec<bool>],
    br: &[Vec<bool>],
) -> Vec<Vec<bool>> {
    let top = tl
        .iter()
        .zip(tr)
        .map(|(l, r)| l.iter().chain(r).copied().collect());
    let bottom = bl
        .iter()
        .zip(br)
        .map(|(l, r)| l.iter().chain(r).copied().collect());
    top.chain(bottom).collect()
}
