//! Binary linear codes and the predicates used to classify them.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2lin::{intersect_row_spaces, min_weight, null_space, rref, BitMatrix};
use crate::group::{GroupTable, ListingKind};
use crate::ring::RingSpec;

/// A binary linear code, stored as the RREF of a generator matrix. Two codes
/// are equal exactly when their RREF bases agree.
#[derive(Clone)]
pub struct LinearCode {
    basis: BitMatrix,
    pivots: Vec<usize>,
    min_distance: OnceLock<usize>,
}

impl LinearCode {
    pub fn from_generator(gen: &BitMatrix) -> Self {
        let e = rref(gen);
        LinearCode {
            basis: e.matrix,
            pivots: e.pivot_cols,
            min_distance: OnceLock::new(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_generator(&BitMatrix::empty(n))
    }

    pub fn full(n: usize) -> Self {
        Self::from_generator(&BitMatrix::identity(n))
    }

    pub fn length(&self) -> usize {
        self.basis.n_cols()
    }

    pub fn dimension(&self) -> usize {
        self.basis.n_rows()
    }

    /// RREF generator matrix.
    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn is_trivial(&self) -> bool {
        self.dimension() == 0 || self.dimension() == self.length()
    }

    /// Membership of a packed word of the code's length.
    pub fn contains(&self, word: &[u64]) -> bool {
        let mut w = word.to_vec();
        self.basis.reduce_against_rref(&self.pivots, &mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn dual(&self) -> LinearCode {
        Self::from_generator(&null_space(&self.basis))
    }

    /// `C ∩ C^⊥`.
    pub fn hull(&self) -> LinearCode {
        let dual = null_space(&self.basis);
        let basis = intersect_row_spaces(&self.basis, &dual).expect("code and dual share a length");
        Self::from_generator(&basis)
    }

    /// True when the hull is zero. The trivial codes `{0}` and `F_2^n` are LCD.
    pub fn is_lcd(&self) -> bool {
        self.hull().dimension() == 0
    }

    /// LCD test through the Gram matrix: for a full-rank generator `G`, the
    /// code is LCD iff `G G^T` is invertible.
    pub fn is_lcd_by_gram(&self) -> bool {
        gram_is_invertible(&self.basis).expect("RREF basis has full row rank")
    }

    /// Exact minimum distance, computed once and cached.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.min_distance.get() {
            return Ok(d);
        }
        let d = min_weight(&self.basis)?;
        Ok(*self.min_distance.get_or_init(|| d))
    }

    pub fn params(&self) -> Params {
        Params {
            n: self.length(),
            k: self.dimension(),
            d: self.min_distance().ok(),
        }
    }

    /// Invariance under left translation by every group element, coordinate
    /// `j` moving to the position of `g_p g_j`.
    pub fn is_g_invariant(&self, g: &GroupTable) -> Result<bool> {
        self.is_g_invariant_blocks(g, 1)
    }

    /// As [`LinearCode::is_g_invariant`] for a code whose coordinates come in
    /// blocks of `width` per group element (the Gray image of an `R_k` code).
    pub fn is_g_invariant_blocks(&self, g: &GroupTable, width: usize) -> Result<bool> {
        if width == 0 || self.length() != g.order() * width {
            return Err(Error::DimensionMismatch(format!(
                "code of length {} against group of order {} with block width {width}",
                self.length(),
                g.order()
            )));
        }
        for p in 0..g.order() {
            let perm: Vec<usize> = (0..self.length())
                .map(|c| g.mul(p, c / width) * width + c % width)
                .collect();
            let moved = self.basis.permute_columns(&perm);
            if !moved.rows().all(|r| self.contains(r)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reversible of index `alpha`: reversing the order of the length-`alpha`
    /// blocks of a codeword gives a codeword. Checking the basis suffices.
    pub fn is_reversible(&self, alpha: usize) -> Result<bool> {
        let n = self.length();
        if alpha == 0 || !n.is_multiple_of(alpha) {
            return Err(Error::InvalidArgument(format!(
                "index {alpha} does not divide length {n}"
            )));
        }
        let blocks = n / alpha;
        let perm: Vec<usize> = (0..n)
            .map(|c| (blocks - 1 - c / alpha) * alpha + c % alpha)
            .collect();
        let reversed = self.basis.permute_columns(&perm);
        let closed = reversed.rows().all(|r| self.contains(r));
        Ok(closed)
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for LinearCode {}

impl Hash for LinearCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearCode[{}, {}] {:?}",
            self.length(),
            self.dimension(),
            self.basis
        )
    }
}

/// Whether `gen * gen^T` is invertible over GF(2). `gen` must have full row rank.
pub fn gram_is_invertible(gen: &BitMatrix) -> Result<bool> {
    let k = gen.n_rows();
    if rref(gen).rank != k {
        return Err(Error::InvalidArgument(
            "generator does not have full row rank".into(),
        ));
    }
    let gram = gen.mul(&gen.transpose())?;
    Ok(rref(&gram).rank == k)
}

/// `[n, k, d]`; `d` is absent for the zero code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{},{},{}]", self.n, self.k, d),
            None => write!(f, "[{},{},-]", self.n, self.k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeFlags {
    pub lcd: bool,
    /// Reversible of index 1 over `F_2`, of index `2^k` for the Gray image of an `R_k` code.
    pub reversible: bool,
    pub g_invariant: bool,
}

/// Where a code came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Provenance {
    /// Group identifier such as `c28` or `d24:rev`.
    pub group: String,
    pub listing: ListingKind,
    pub ring: RingSpec,
    /// Coefficients of the generating element; see [`crate::GroupRingElement::v_bits`].
    pub v_bits: String,
}

/// A code found by a search, with its parameters and classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRecord {
    pub code: LinearCode,
    pub params: Params,
    pub flags: CodeFlags,
    pub provenance: Provenance,
}
