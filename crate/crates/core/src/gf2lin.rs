//! Linear algebra over GF(2) on word-packed rows.
//!
//! Column `j` of a row lives in bit `j % 64` of word `j / 64`. Padding bits
//! beyond `n_cols` are always zero, so whole-word comparisons and popcounts
//! are exact.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Largest dimension for which [`min_weight`] enumerates every codeword.
pub const FULL_ENUMERATION_MAX_RANK: usize = 24;

#[inline]
fn words_for(n_cols: usize) -> usize {
    n_cols.div_ceil(WORD)
}

/// A dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n_rows: usize,
    n_cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        let stride = words_for(n_cols);
        BitMatrix {
            n_rows,
            n_cols,
            stride,
            data: vec![0; n_rows * stride],
        }
    }

    /// A matrix with no rows, i.e. the generator of the zero code of length `n_cols`.
    pub fn empty(n_cols: usize) -> Self {
        Self::zeros(0, n_cols)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of at most 64 columns each, bit `j` of a word being column `j`.
    pub fn from_words(n_cols: usize, rows: &[u64]) -> Result<Self> {
        if n_cols > WORD {
            return Err(Error::DimensionMismatch(format!(
                "from_words supports at most 64 columns, got {n_cols}"
            )));
        }
        let mut m = Self::zeros(0, n_cols);
        for &r in rows {
            m.push_row(&[r])?;
        }
        Ok(m)
    }

    /// Builds a matrix from strings of `0`/`1` characters, column 0 first.
    pub fn from_bit_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let n_cols = rows.first().map_or(0, |r| r.as_ref().trim().len());
        let mut m = Self::zeros(rows.len(), n_cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref().trim();
            if r.len() != n_cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} columns, expected {n_cols}",
                    r.len()
                )));
            }
            for (j, ch) in r.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} in bit row"
                        )))
                    }
                }
            }
        }
        if m.n_rows > 0 && m.n_cols == 0 {
            return Err(Error::DimensionMismatch(
                "rows must have at least one column".into(),
            ));
        }
        Ok(m)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Number of 64-bit words per row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.n_rows && c < self.n_cols);
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.n_rows && c < self.n_cols);
        let w = &mut self.data[r * self.stride + c / WORD];
        let bit = 1u64 << (c % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> + '_ {
        (0..self.n_rows).map(move |r| self.row(r))
    }

    /// Appends a row given as packed words; bits beyond `n_cols` are rejected.
    pub fn push_row(&mut self, words: &[u64]) -> Result<()> {
        if words.len() != self.stride {
            return Err(Error::DimensionMismatch(format!(
                "row has {} words, expected {}",
                words.len(),
                self.stride
            )));
        }
        if let Some(&last) = words.last() {
            let used = self.n_cols - (self.stride - 1) * WORD;
            if used < WORD && last >> used != 0 {
                return Err(Error::DimensionMismatch(
                    "row has bits set beyond the last column".into(),
                ));
            }
        }
        self.data.extend_from_slice(words);
        self.n_rows += 1;
        Ok(())
    }

    pub fn row_weight(&self, r: usize) -> usize {
        weight(self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn row_to_string(&self, r: usize) -> String {
        (0..self.n_cols)
            .map(|c| if self.get(r, c) { '1' } else { '0' })
            .collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        let mut out = BitMatrix::zeros(self.n_rows, rhs.n_cols);
        for r in 0..self.n_rows {
            for k in 0..self.n_cols {
                if self.get(r, k) {
                    let stride = out.stride;
                    let (dst, src) = (r * stride, k * rhs.stride);
                    for w in 0..stride {
                        out.data[dst + w] ^= rhs.data[src + w];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum over GF(2).
    pub fn add(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_rows != rhs.n_rows || self.n_cols != rhs.n_cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(BitMatrix {
            data,
            ..self.clone()
        })
    }

    /// Stacks `rhs` below `self`.
    pub fn vstack(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.n_cols != rhs.n_cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack matrices with {} and {} columns",
                self.n_cols, rhs.n_cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(BitMatrix {
            n_rows: self.n_rows + rhs.n_rows,
            n_cols: self.n_cols,
            stride: self.stride,
            data,
        })
    }

    /// Returns the matrix whose rows are `self`'s rows in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(0, self.n_cols);
        for &r in rows {
            out.data.extend_from_slice(self.row(r));
            out.n_rows += 1;
        }
        out
    }

    /// Applies a column permutation: column `c` of the input lands in column `perm[c]`.
    pub fn permute_columns(&self, perm: &[usize]) -> BitMatrix {
        debug_assert_eq!(perm.len(), self.n_cols);
        let mut out = BitMatrix::zeros(self.n_rows, self.n_cols);
        for r in 0..self.n_rows {
            for (c, &to) in perm.iter().enumerate() {
                if self.get(r, c) {
                    out.set(r, to, true);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// True when the row vector `words` lies in the row space of this matrix,
    /// which must already be in reduced row echelon form with pivots `pivots`.
    pub(crate) fn reduce_against_rref(&self, pivots: &[usize], words: &mut [u64]) {
        for (r, &p) in pivots.iter().enumerate() {
            if (words[p / WORD] >> (p % WORD)) & 1 == 1 {
                for (w, x) in words.iter_mut().zip(self.row(r)) {
                    *w ^= x;
                }
            }
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.n_rows, self.n_cols)?;
        for r in 0..self.n_rows {
            writeln!(f, "  {}", self.row_to_string(r))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n_rows {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row_to_string(r))?;
        }
        Ok(())
    }
}

/// Rows separated by newlines, `;` or `,`.
impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s
            .split(['\n', ';', ','])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .collect();
        BitMatrix::from_bit_strings(&rows)
    }
}

#[inline]
pub(crate) fn weight(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Reduced row echelon form of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonForm {
    /// The nonzero rows of the RREF; exactly `rank` of them.
    pub matrix: BitMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// Gauss-Jordan elimination choosing, for each column left to right, the
/// topmost remaining row with a one in that column.
pub fn rref(m: &BitMatrix) -> EchelonForm {
    let mut a = m.clone();
    let stride = a.stride;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..a.n_cols {
        if rank == a.n_rows {
            break;
        }
        let (w, bit) = (col / WORD, 1u64 << (col % WORD));
        let Some(p) = (rank..a.n_rows).find(|&r| a.data[r * stride + w] & bit != 0) else {
            continue;
        };
        if p != rank {
            for i in 0..stride {
                a.data.swap(p * stride + i, rank * stride + i);
            }
        }
        for r in 0..a.n_rows {
            if r != rank && a.data[r * stride + w] & bit != 0 {
                for i in 0..stride {
                    let x = a.data[rank * stride + i];
                    a.data[r * stride + i] ^= x;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    a.data.truncate(rank * stride);
    a.n_rows = rank;
    EchelonForm {
        matrix: a,
        rank,
        pivot_cols: pivots,
    }
}

/// In-place RREF of rows that fit a single word. Returns the rank; the first
/// `rank` entries of `rows` hold the reduced basis afterwards.
#[inline]
pub(crate) fn rref_single_word(rows: &mut [u64], n_cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == rows.len() {
            break;
        }
        let bit = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Basis (as rows) of `{ x : m * x^T = 0 }`.
pub fn null_space(m: &BitMatrix) -> BitMatrix {
    let e = rref(m);
    let n = m.n_cols;
    let mut is_pivot = vec![false; n];
    for &p in &e.pivot_cols {
        is_pivot[p] = true;
    }
    let mut out = BitMatrix::zeros(0, n);
    let mut v = vec![0u64; words_for(n)];
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        v.iter_mut().for_each(|w| *w = 0);
        v[free / WORD] |= 1 << (free % WORD);
        for (r, &p) in e.pivot_cols.iter().enumerate() {
            if e.matrix.get(r, free) {
                v[p / WORD] |= 1 << (p % WORD);
            }
        }
        out.data.extend_from_slice(&v);
        out.n_rows += 1;
    }
    out
}

/// RREF basis of the intersection of the row spaces of `a` and `b`,
/// computed as the dual of the sum of their duals.
pub fn intersect_row_spaces(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    if a.n_cols != b.n_cols {
        return Err(Error::DimensionMismatch(format!(
            "cannot intersect row spaces of length {} and {}",
            a.n_cols, b.n_cols
        )));
    }
    let duals = null_space(a).vstack(&null_space(b))?;
    Ok(rref(&null_space(&duals)).matrix)
}

/// Exact minimum Hamming weight of the nonzero vectors in the row space of `gen`.
///
/// Codes of dimension at most [`FULL_ENUMERATION_MAX_RANK`] are enumerated in
/// full; larger ones go through [`min_weight_information_sets`].
pub fn min_weight(gen: &BitMatrix) -> Result<usize> {
    let basis = rref(gen).matrix;
    if basis.n_rows == 0 {
        return Err(Error::ZeroCode);
    }
    if basis.n_rows <= FULL_ENUMERATION_MAX_RANK {
        min_weight_exhaustive(&basis)
    } else {
        min_weight_information_sets(&basis)
    }
}

/// Minimum weight by walking all `2^k - 1` nonzero codewords in Gray-code order.
pub fn min_weight_exhaustive(gen: &BitMatrix) -> Result<usize> {
    let basis = rref(gen).matrix;
    let k = basis.n_rows;
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    if k >= 40 {
        return Err(Error::InvalidArgument(format!(
            "refusing to enumerate 2^{k} codewords"
        )));
    }
    let mut best = usize::MAX;
    if basis.stride == 1 {
        let rows: Vec<u64> = basis.data.clone();
        let mut acc = 0u64;
        for i in 1u64..(1u64 << k) {
            acc ^= rows[i.trailing_zeros() as usize];
            best = best.min(acc.count_ones() as usize);
        }
    } else {
        let mut acc = vec![0u64; basis.stride];
        for i in 1u64..(1u64 << k) {
            let row = basis.row(i.trailing_zeros() as usize);
            for (a, x) in acc.iter_mut().zip(row) {
                *a ^= x;
            }
            best = best.min(weight(&acc));
        }
    }
    Ok(best)
}

/// Brouwer-Zimmermann minimum weight.
///
/// The generator is brought into systematic form on a sequence of disjoint
/// information sets (the later ones possibly of deficient rank `r_j`). After
/// all messages of weight at most `w` have been encoded with every such
/// generator, any codeword not yet seen has weight at least
/// `sum_j max(0, w + 1 - (k - r_j))`; the search stops once this bound
/// reaches the lightest codeword found so far.
pub fn min_weight_information_sets(gen: &BitMatrix) -> Result<usize> {
    let basis = rref(gen).matrix;
    let k = basis.n_rows;
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let n = basis.n_cols;
    let stride = basis.stride;

    let mut available = vec![true; n];
    let mut generators: Vec<(BitMatrix, usize)> = Vec::new();
    loop {
        let mut g = if generators.is_empty() {
            basis.clone()
        } else {
            generators[0].0.clone()
        };
        let mut rank = 0;
        #[allow(clippy::needless_range_loop)]
        for col in 0..n {
            if !available[col] || rank == k {
                continue;
            }
            let (w, bit) = (col / WORD, 1u64 << (col % WORD));
            let Some(p) = (rank..k).find(|&r| g.data[r * stride + w] & bit != 0) else {
                continue;
            };
            for i in 0..stride {
                g.data.swap(p * stride + i, rank * stride + i);
            }
            for r in 0..k {
                if r != rank && g.data[r * stride + w] & bit != 0 {
                    for i in 0..stride {
                        let x = g.data[rank * stride + i];
                        g.data[r * stride + i] ^= x;
                    }
                }
            }
            available[col] = false;
            rank += 1;
        }
        if rank == 0 {
            break;
        }
        generators.push((g, rank));
        if !available.iter().any(|&a| a) {
            break;
        }
    }

    let contribution = |w: usize, r: usize| (w + 1).saturating_sub(k - r);

    let mut upper = usize::MAX;
    for w in 1..=k {
        for j in 0..generators.len() {
            let (g, _) = &generators[j];
            upper = upper.min(min_weight_of_combinations(g, w));
            let lower: usize = generators
                .iter()
                .enumerate()
                .map(|(i, (_, r))| {
                    if i <= j {
                        contribution(w, *r)
                    } else {
                        contribution(w - 1, *r)
                    }
                })
                .sum();
            if lower >= upper {
                return Ok(upper);
            }
        }
    }
    // Every message has been encoded at least once.
    Ok(upper)
}

/// Lightest sum of exactly `w` distinct rows of `g`.
fn min_weight_of_combinations(g: &BitMatrix, w: usize) -> usize {
    fn walk(g: &BitMatrix, start: usize, left: usize, acc: &mut [u64], best: &mut usize) {
        if left == 0 {
            *best = (*best).min(weight(acc));
            return;
        }
        for r in start..=g.n_rows - left {
            let row = g.row(r);
            acc.iter_mut().zip(row).for_each(|(a, x)| *a ^= x);
            walk(g, r + 1, left - 1, acc, best);
            acc.iter_mut().zip(row).for_each(|(a, x)| *a ^= x);
        }
    }
    let mut best = usize::MAX;
    let mut acc = vec![0u64; g.stride];
    if w <= g.n_rows {
        walk(g, 0, w, &mut acc, &mut best);
    }
    best
}
