//! The coefficient rings `F_2` and `R_k = F_2[u_1, ..., u_k] / <u_i^2, u_i u_j - u_j u_i>`
//! together with the Gray map `phi_k : R_k -> F_2^(2^k)`.
//!
//! An element of `R_k` is stored as a bit mask over the `2^k` square-free
//! monomials. Monomial `s` is the product of the `u_i` with bit `i - 1` set
//! in `s`, so the order is binary counting over subsets: `1, u1, u2, u1u2, u3, ...`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2lin::{rref, BitMatrix};

/// Largest supported `k`.
pub const MAX_K: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    F2,
    Rk(u32),
}

impl RingSpec {
    pub fn rk(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::UnsupportedRing(format!(
                "R_{k} (supported: 1..={MAX_K})"
            )));
        }
        Ok(RingSpec::Rk(k))
    }

    /// Number of generators `u_i`; zero for `F_2`.
    pub fn k(self) -> u32 {
        match self {
            RingSpec::F2 => 0,
            RingSpec::Rk(k) => k,
        }
    }

    /// Dimension over `F_2`, i.e. the number of monomials.
    pub fn basis_len(self) -> usize {
        1 << self.k()
    }

    pub fn cardinality(self) -> u64 {
        1u64 << self.basis_len()
    }

    pub fn zero(self) -> RingElement {
        RingElement {
            spec: self,
            bits: 0,
        }
    }

    pub fn one(self) -> RingElement {
        RingElement {
            spec: self,
            bits: 1,
        }
    }

    pub fn element(self, bits: u8) -> Result<RingElement> {
        if u64::from(bits) >= self.cardinality() {
            return Err(Error::InvalidArgument(format!(
                "{bits:#x} is not an element of {self}"
            )));
        }
        Ok(RingElement { spec: self, bits })
    }

    /// All elements, in increasing order of their coefficient masks.
    pub fn elements(self) -> impl Iterator<Item = RingElement> {
        (0..self.cardinality()).map(move |b| RingElement {
            spec: self,
            bits: b as u8,
        })
    }

    /// The monomials `1, u1, u2, u1u2, ...` as ring elements.
    pub fn monomials(self) -> impl Iterator<Item = RingElement> {
        (0..self.basis_len()).map(move |s| RingElement {
            spec: self,
            bits: 1 << s,
        })
    }

    /// Parses `f2`, `r1`, `r2`, `r3`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f2" => Ok(RingSpec::F2),
            other => match other.strip_prefix('r').and_then(|k| k.parse::<u32>().ok()) {
                Some(k) => RingSpec::rk(k),
                None => Err(Error::Parse(format!("unknown ring {s:?}"))),
            },
        }
    }

    pub fn id(self) -> String {
        match self {
            RingSpec::F2 => "f2".into(),
            RingSpec::Rk(k) => format!("r{k}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// An element of `F_2` or `R_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    spec: RingSpec,
    bits: u8,
}

impl RingElement {
    pub fn spec(self) -> RingSpec {
        self.spec
    }

    /// Coefficient mask over the monomials.
    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn coefficient(self, monomial: usize) -> bool {
        (self.bits >> monomial) & 1 == 1
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, rhs: RingElement) -> Result<RingElement> {
        self.check(rhs)?;
        Ok(RingElement {
            spec: self.spec,
            bits: self.bits ^ rhs.bits,
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: RingElement) -> Result<RingElement> {
        self.check(rhs)?;
        Ok(RingElement {
            spec: self.spec,
            bits: mul_bits(self.bits, rhs.bits, self.spec.basis_len()),
        })
    }

    fn check(self, rhs: RingElement) -> Result<()> {
        if self.spec != rhs.spec {
            return Err(Error::RingMismatch(self.spec.id(), rhs.spec.id()));
        }
        Ok(())
    }

    /// The Gray image `phi_k(self)` as `2^k` bits.
    pub fn gray_phi(self) -> Result<Vec<bool>> {
        let k = self.spec.k();
        if k == 0 {
            return Err(Error::UnsupportedRing(
                "the Gray map is defined on R_k with k >= 1".into(),
            ));
        }
        let image = gray_bits(self.bits, k);
        Ok((0..self.spec.basis_len())
            .map(|i| (image >> i) & 1 == 1)
            .collect())
    }

    /// Parses `1+u1+u1u2`-style notation, or a `0`/`1` string of exactly
    /// `2^k` coefficients in monomial order when `2^k > 1`.
    pub fn parse(spec: RingSpec, s: &str) -> Result<RingElement> {
        let s = s.trim();
        let len = spec.basis_len();
        if len > 1 && s.len() == len && s.chars().all(|c| c == '0' || c == '1') {
            let bits = s.chars().enumerate().fold(
                0u8,
                |acc, (i, c)| if c == '1' { acc | (1 << i) } else { acc },
            );
            return Ok(RingElement { spec, bits });
        }
        let mut bits = 0u8;
        for term in s.split('+').map(str::trim) {
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            match term {
                "0" => continue,
                "1" => {
                    bits ^= 1;
                    continue;
                }
                _ => {}
            }
            let mut rest = term;
            let mut mask = 0usize;
            let mut vanishes = false;
            while !rest.is_empty() {
                let Some(tail) = rest.strip_prefix('u') else {
                    return Err(Error::Parse(format!("bad term {term:?}")));
                };
                let digits = tail.chars().take_while(char::is_ascii_digit).count();
                if digits == 0 {
                    return Err(Error::Parse(format!("bad term {term:?}")));
                }
                let i: u32 = tail[..digits]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index in {term:?}")))?;
                if i == 0 || i > spec.k() {
                    return Err(Error::Parse(format!("u{i} is not a generator of {spec}")));
                }
                let b = 1usize << (i - 1);
                if mask & b != 0 {
                    vanishes = true;
                }
                mask |= b;
                rest = &tail[digits..];
            }
            if !vanishes {
                bits ^= 1 << mask;
            }
        }
        Ok(RingElement { spec, bits })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for s in 0..self.spec.basis_len() {
            if !self.coefficient(s) {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if s == 0 {
                f.write_str("1")?;
            } else {
                for i in 0..self.spec.k() {
                    if s & (1 << i) != 0 {
                        write!(f, "u{}", i + 1)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Product of two coefficient masks over `len` monomials; monomials sharing a
/// generator annihilate because `u_i^2 = 0`.
#[inline]
pub(crate) fn mul_bits(a: u8, b: u8, len: usize) -> u8 {
    let mut out = 0u8;
    for s in 0..len {
        if (a >> s) & 1 == 0 {
            continue;
        }
        for t in 0..len {
            if (b >> t) & 1 == 1 && s & t == 0 {
                out ^= 1 << (s | t);
            }
        }
    }
    out
}

/// `phi_k` on a coefficient mask. Output bit `i` is coordinate `i`.
///
/// Splits `c = c1 + u_k c2` where `c1` holds the monomials without `u_k` (the
/// lower half of the mask) and `c2` the upper half, then
/// `phi_k(c) = (phi_{k-1}(c2), phi_{k-1}(c1) + phi_{k-1}(c2))` with `phi_0` the identity.
pub(crate) fn gray_bits(bits: u8, k: u32) -> u8 {
    if k == 0 {
        return bits & 1;
    }
    let half = 1u32 << (k - 1);
    let low = bits & ((1u16 << half) - 1) as u8;
    let high = ((u16::from(bits) >> half) & ((1u16 << half) - 1)) as u8;
    let p_high = gray_bits(high, k - 1);
    let p_low = gray_bits(low, k - 1);
    p_high | ((p_low ^ p_high) << half)
}

/// A matrix with entries in `F_2` or `R_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    spec: RingSpec,
    n_rows: usize,
    n_cols: usize,
    entries: Vec<RingElement>,
}

impl RingMatrix {
    pub fn zeros(spec: RingSpec, n_rows: usize, n_cols: usize) -> Self {
        RingMatrix {
            spec,
            n_rows,
            n_cols,
            entries: vec![spec.zero(); n_rows * n_cols],
        }
    }

    pub fn from_rows(spec: RingSpec, n_cols: usize, rows: &[Vec<RingElement>]) -> Result<Self> {
        let mut m = RingMatrix::zeros(spec, 0, n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {n_cols}-column matrix",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|e| e.spec != spec) {
                return Err(Error::RingMismatch(spec.id(), bad.spec.id()));
            }
            m.entries.extend_from_slice(row);
            m.n_rows += 1;
        }
        Ok(m)
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, r: usize, c: usize) -> RingElement {
        self.entries[r * self.n_cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: RingElement) {
        debug_assert_eq!(e.spec, self.spec);
        self.entries[r * self.n_cols + c] = e;
    }

    pub fn row(&self, r: usize) -> &[RingElement] {
        &self.entries[r * self.n_cols..(r + 1) * self.n_cols]
    }

    /// Reinterprets an `F_2` matrix as a [`BitMatrix`].
    pub fn to_bit_matrix(&self) -> Result<BitMatrix> {
        if self.spec != RingSpec::F2 {
            return Err(Error::UnsupportedRing(format!(
                "expected an F2 matrix, found {}",
                self.spec
            )));
        }
        let mut m = BitMatrix::zeros(self.n_rows, self.n_cols);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if !self.get(r, c).is_zero() {
                    m.set(r, c, true);
                }
            }
        }
        Ok(m)
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut t = RingMatrix::zeros(self.spec, self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }
}

/// Gray image of a single vector over `R_k`: coordinate `j` expands to the
/// `2^k` binary coordinates `j * 2^k .. (j + 1) * 2^k`.
pub fn gray_lift_vector(spec: RingSpec, v: &[RingElement]) -> Result<Vec<bool>> {
    let k = spec.k();
    if k == 0 {
        return Err(Error::UnsupportedRing(
            "the Gray map is defined on R_k with k >= 1".into(),
        ));
    }
    let mut out = Vec::with_capacity(v.len() << k);
    for e in v {
        if e.spec != spec {
            return Err(Error::RingMismatch(spec.id(), e.spec.id()));
        }
        let image = gray_bits(e.bits, k);
        out.extend((0..spec.basis_len()).map(|i| (image >> i) & 1 == 1));
    }
    Ok(out)
}

/// Binary generator (in RREF) of the Gray image of the `R_k`-linear code
/// spanned by the rows of `gen`.
///
/// The `R_k`-span is the `F_2`-span of `m * row` over all monomials `m` and
/// rows, so those products are mapped and row reduced.
pub fn gray_lift_code(gen: &RingMatrix) -> Result<BitMatrix> {
    let spec = gen.spec;
    if spec.k() == 0 {
        return Err(Error::UnsupportedRing(
            "gray_lift_code needs R_k with k >= 1".into(),
        ));
    }
    let len = spec.basis_len();
    let n_bin = gen.n_cols * len;
    let mut m = BitMatrix::zeros(gen.n_rows * len, n_bin);
    for r in 0..gen.n_rows {
        for (mi, mono) in spec.monomials().enumerate() {
            let out_row = r * len + mi;
            for c in 0..gen.n_cols {
                let prod = mono.mul(gen.get(r, c))?;
                let image = gray_bits(prod.bits, spec.k());
                for t in 0..len {
                    if (image >> t) & 1 == 1 {
                        m.set(out_row, c * len + t, true);
                    }
                }
            }
        }
    }
    Ok(rref(&m).matrix)
}
