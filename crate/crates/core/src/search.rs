//! Exhaustive search for LCD codes `C(v) = rowspace(sigma(v))`.
//!
//! Candidates are indexed by integers whose base-`|R|` digits are the free
//! coefficients, the first free slot being the most significant digit, so
//! integer order is lexicographic order on coefficient vectors. With
//! `symmetric` set the free slots are the inverse-pair orbits of the group
//! (only `v = v^T` is generated); otherwise every listing position is free.
//!
//! Codes are deduplicated by RREF. Each distinct code remembers the smallest
//! candidate index producing it, so the result does not depend on how the
//! index range is split across workers.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::code::{CodeFlags, CodeRecord, LinearCode, Params, Provenance};
use crate::error::{Error, Result};
use crate::gf2lin::{rref, rref_single_word, BitMatrix};
use crate::group::{GroupTable, ListingKind};
use crate::groupring::GroupRingElement;
use crate::ring::{gray_lift_code, RingSpec};

/// Default cap on the number of candidates a search may enumerate.
pub const DEFAULT_BUDGET: u64 = 1 << 30;

const MIN_CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub group: Arc<GroupTable>,
    pub ring: RingSpec,
    /// Enumerate only `v = v^T`.
    pub symmetric: bool,
    /// Keep `{0}` and the full space.
    pub include_trivial: bool,
    pub min_k: usize,
    /// Inclusive; `None` means the code length.
    pub max_k: Option<usize>,
    pub budget: u64,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl SearchSpec {
    pub fn new(group: Arc<GroupTable>, ring: RingSpec) -> Self {
        SearchSpec {
            group,
            ring,
            symmetric: true,
            include_trivial: false,
            min_k: 0,
            max_k: None,
            budget: DEFAULT_BUDGET,
            threads: None,
        }
    }

    /// Length of the binary codes produced: group order times `2^k` for `R_k`.
    pub fn code_length(&self) -> usize {
        self.group.order() * self.ring.basis_len()
    }

    /// The free coefficient slots, each a set of listing positions sharing one coefficient.
    pub fn free_slots(&self) -> Vec<Vec<usize>> {
        if self.symmetric {
            self.group.inverse_pair_orbits()
        } else {
            (0..self.group.order()).map(|p| vec![p]).collect()
        }
    }

    /// `|R|^slots`, or `None` when that overflows `u64`.
    pub fn candidate_count(&self) -> Option<u64> {
        let slots = u32::try_from(self.free_slots().len()).ok()?;
        self.ring.cardinality().checked_pow(slots)
    }

    fn validate(&self) -> Result<u64> {
        let slots = self.free_slots().len();
        let total = self
            .candidate_count()
            .filter(|&t| t <= self.budget)
            .ok_or_else(|| Error::BudgetExceeded {
                candidates: format!("{}^{slots}", self.ring.cardinality()),
                budget: self.budget,
            })?;
        if let Some(max_k) = self.max_k {
            if max_k < self.min_k {
                return Err(Error::InvalidArgument(format!(
                    "max_k {max_k} < min_k {}",
                    self.min_k
                )));
            }
        }
        Ok(total)
    }

    fn k_in_range(&self, k: usize) -> bool {
        k >= self.min_k && self.max_k.is_none_or(|m| k <= m)
    }

    /// The group ring element for a candidate index.
    pub fn element_at(&self, index: u64) -> Result<GroupRingElement> {
        let slots = self.free_slots();
        let q = self.ring.cardinality();
        let mut coeffs = vec![self.ring.zero(); self.group.order()];
        let mut rest = index;
        for slot in slots.iter().rev() {
            let digit = self.ring.element((rest % q) as u8)?;
            rest /= q;
            for &p in slot {
                coeffs[p] = digit;
            }
        }
        if rest != 0 {
            return Err(Error::InvalidArgument(format!(
                "candidate index {index} out of range"
            )));
        }
        GroupRingElement::from_coeffs(self.group.clone(), self.ring, coeffs)
    }

    /// Binary generator of `C(v)` (its Gray image over `R_k`), not reduced.
    pub fn generator_of(&self, v: &GroupRingElement) -> Result<BitMatrix> {
        if self.ring == RingSpec::F2 {
            v.sigma_f2()
        } else {
            gray_lift_code(&v.sigma())
        }
    }
}

/// One record per distinct `(k, d)`, ordered by ascending `k` then descending
/// `d`; each represented by the lexicographically smallest generating `v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResultTable {
    pub records: Vec<CodeRecord>,
}

impl ResultTable {
    /// Builds the table from records that are already ordered by preference
    /// within each `(k, d)` (earlier wins).
    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a CodeRecord>) -> Self {
        let mut best: BTreeMap<(usize, std::cmp::Reverse<Option<usize>>), &CodeRecord> =
            BTreeMap::new();
        for r in records {
            best.entry((r.params.k, std::cmp::Reverse(r.params.d)))
                .or_insert(r);
        }
        ResultTable {
            records: best.into_values().cloned().collect(),
        }
    }

    pub fn parameter_sets(&self) -> Vec<Params> {
        self.records.iter().map(|r| r.params).collect()
    }

    /// Largest `d` for each `k`.
    pub fn best_per_dimension(&self) -> Vec<Params> {
        let mut out: Vec<Params> = Vec::new();
        for p in self.parameter_sets() {
            match out.last() {
                Some(last) if last.k == p.k => {}
                _ => out.push(p),
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Everything a search produces.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub table: ResultTable,
    /// Every distinct LCD code in range, by ascending `k`, descending `d`,
    /// then generating index.
    pub codes: Vec<CodeRecord>,
    pub candidates: u64,
    /// Distinct row spaces seen before any filtering.
    pub distinct_codes: usize,
    /// LCD survivors that failed the reversibility check (reversible searches only).
    pub reversibility_failures: Vec<CodeRecord>,
}

/// Maps each distinct RREF basis (packed words) to the smallest index producing it.
type CodeMap = HashMap<Vec<u64>, u64>;

fn merge(mut a: CodeMap, b: CodeMap) -> CodeMap {
    let (mut big, small) = if a.len() >= b.len() {
        (a, b)
    } else {
        (b, std::mem::take(&mut a))
    };
    for (key, idx) in small {
        big.entry(key)
            .and_modify(|e| *e = (*e).min(idx))
            .or_insert(idx);
    }
    big
}

/// Enumerates every candidate and collects the distinct codes.
fn collect_codes(spec: &SearchSpec, total: u64) -> Result<CodeMap> {
    let n_bin = spec.code_length();
    let chunks = split_range(
        total,
        spec.threads.unwrap_or_else(rayon::current_num_threads),
    );
    let run = || -> Result<CodeMap> {
        if spec.ring == RingSpec::F2 && n_bin <= 64 {
            let kernel = FastKernel::new(spec);
            Ok(chunks
                .par_iter()
                .map(|&(lo, hi)| kernel.run(lo, hi))
                .reduce(CodeMap::new, merge))
        } else {
            chunks
                .par_iter()
                .map(|&(lo, hi)| generic_chunk(spec, lo, hi))
                .try_reduce(CodeMap::new, |a, b| Ok(merge(a, b)))
        }
    };
    match spec.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

fn split_range(total: u64, workers: usize) -> Vec<(u64, u64)> {
    let pieces = (workers.max(1) as u64 * 8)
        .min(total.div_ceil(MIN_CHUNK))
        .max(1);
    let size = total.div_ceil(pieces).max(1);
    (0..pieces)
        .map(|i| (i * size, ((i + 1) * size).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn generic_chunk(spec: &SearchSpec, lo: u64, hi: u64) -> Result<CodeMap> {
    let mut map = CodeMap::new();
    for idx in lo..hi {
        let v = spec.element_at(idx)?;
        let basis = rref(&spec.generator_of(&v)?).matrix;
        let key: Vec<u64> = basis.rows().flatten().copied().collect();
        map.entry(key)
            .and_modify(|e| *e = (*e).min(idx))
            .or_insert(idx);
    }
    Ok(map)
}

/// `F_2` search for codes of length at most 64.
///
/// Row `i` of `sigma(v)` is the XOR of one precomputed mask per nonzero free
/// slot. Walking each chunk in Gray-code order flips a single slot per step,
/// so a step costs one XOR per row plus a row reduction.
struct FastKernel {
    n: usize,
    slots: usize,
    /// `masks[s * n + i]`: columns of row `i` carrying the coefficient of slot `s`.
    masks: Vec<u64>,
}

impl FastKernel {
    fn new(spec: &SearchSpec) -> Self {
        let g = &spec.group;
        let n = g.order();
        let free = spec.free_slots();
        let mut slot_of = vec![0usize; n];
        for (s, slot) in free.iter().enumerate() {
            for &p in slot {
                slot_of[p] = s;
            }
        }
        let mut masks = vec![0u64; free.len() * n];
        for i in 0..n {
            let inv = g.inv(i);
            for j in 0..n {
                masks[slot_of[g.mul(inv, j)] * n + i] |= 1 << j;
            }
        }
        FastKernel {
            n,
            slots: free.len(),
            masks,
        }
    }

    /// Slot flipped by the Gray-code step at bit `b` (bit 0 is the last slot).
    #[inline]
    fn slot_for_bit(&self, b: usize) -> usize {
        self.slots - 1 - b
    }

    fn run(&self, lo: u64, hi: u64) -> CodeMap {
        let n = self.n;
        let mut rows = vec![0u64; n];
        let start = lo ^ (lo >> 1);
        for b in 0..self.slots {
            if (start >> b) & 1 == 1 {
                let s = self.slot_for_bit(b);
                rows.iter_mut()
                    .zip(&self.masks[s * n..(s + 1) * n])
                    .for_each(|(r, m)| *r ^= m);
            }
        }
        let mut map = CodeMap::new();
        let mut scratch = vec![0u64; n];
        for t in lo..hi {
            if t != lo {
                let s = self.slot_for_bit(t.trailing_zeros() as usize);
                rows.iter_mut()
                    .zip(&self.masks[s * n..(s + 1) * n])
                    .for_each(|(r, m)| *r ^= m);
            }
            let value = t ^ (t >> 1);
            scratch.copy_from_slice(&rows);
            let rank = rref_single_word(&mut scratch, n);
            let key = &scratch[..rank];
            match map.get_mut(key) {
                Some(best) => *best = (*best).min(value),
                None => {
                    map.insert(key.to_vec(), value);
                }
            }
        }
        map
    }
}

/// Searches for LCD codes `C(v)`; see the module docs for enumeration order.
pub fn search_lcd(spec: &SearchSpec) -> Result<SearchReport> {
    run_search(spec, false)
}

/// As [`search_lcd`] on a group listed as `e, a, ..., a^(n-1), ba^(n-1), ..., ba, b`,
/// additionally checking that every survivor is reversible (of index `2^k` over `R_k`).
pub fn search_reversible_lcd(spec: &SearchSpec) -> Result<SearchReport> {
    if spec.group.listing() != ListingKind::DihedralReversible {
        return Err(Error::InvalidArgument(format!(
            "reversible search needs a dihedral group with the rev listing, got {}",
            spec.group.label()
        )));
    }
    run_search(spec, true)
}

fn run_search(spec: &SearchSpec, check_reversible: bool) -> Result<SearchReport> {
    let total = spec.validate()?;
    let found = collect_codes(spec, total)?;
    let distinct = found.len();
    let n_bin = spec.code_length();
    let width = spec.ring.basis_len();

    let mut candidates: Vec<(Vec<u64>, u64)> = found.into_iter().collect();
    candidates.sort_by_key(|(_, idx)| *idx);

    let mut codes = Vec::new();
    for (key, idx) in candidates {
        let k = key.len() / n_bin.div_ceil(64);
        let trivial = k == 0 || k == n_bin;
        if (trivial && !spec.include_trivial) || !spec.k_in_range(k) {
            continue;
        }
        let basis = basis_from_key(n_bin, &key)?;
        let code = LinearCode::from_generator(&basis);
        if !code.is_lcd() {
            continue;
        }
        let v = spec.element_at(idx)?;
        let flags = CodeFlags {
            lcd: true,
            reversible: code.is_reversible(width)?,
            g_invariant: code.is_g_invariant_blocks(&spec.group, width)?,
        };
        codes.push((
            idx,
            CodeRecord {
                params: code.params(),
                code,
                flags,
                provenance: Provenance {
                    group: spec.group.label().to_string(),
                    listing: spec.group.listing(),
                    ring: spec.ring,
                    v_bits: v.v_bits(),
                },
            },
        ));
    }
    codes.sort_by(|(ia, a), (ib, b)| {
        (a.params.k, std::cmp::Reverse(a.params.d), ia).cmp(&(
            b.params.k,
            std::cmp::Reverse(b.params.d),
            ib,
        ))
    });
    let codes: Vec<CodeRecord> = codes.into_iter().map(|(_, r)| r).collect();
    let reversibility_failures = if check_reversible {
        codes
            .iter()
            .filter(|r| !r.flags.reversible)
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    Ok(SearchReport {
        table: ResultTable::from_records(&codes),
        codes,
        candidates: total,
        distinct_codes: distinct,
        reversibility_failures,
    })
}

fn basis_from_key(n_cols: usize, key: &[u64]) -> Result<BitMatrix> {
    let stride = n_cols.div_ceil(64);
    let mut m = BitMatrix::empty(n_cols);
    for row in key.chunks(stride) {
        m.push_row(row)?;
    }
    Ok(m)
}

/// Lazily yields every symmetric element of `RG`, in candidate-index order.
pub fn enumerate_symmetric(
    group: Arc<GroupTable>,
    ring: RingSpec,
    budget: u64,
) -> Result<impl Iterator<Item = GroupRingElement>> {
    let mut spec = SearchSpec::new(group, ring);
    spec.budget = budget;
    let total = spec.validate()?;
    Ok((0..total).map(move |i| {
        spec.element_at(i)
            .expect("index within the validated range")
    }))
}
