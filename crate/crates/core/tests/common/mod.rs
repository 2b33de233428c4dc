//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use grouplcd::{BitMatrix, GroupRingElement, LinearCode, RingElement, RingSpec};

pub fn r1() -> RingSpec {
    RingSpec::rk(1).unwrap()
}

/// `a + b u` with bit 0 holding `a` and bit 1 holding `b`.
pub fn r1_element(a: bool, b: bool) -> RingElement {
    r1().element(u8::from(a) | (u8::from(b) << 1)).unwrap()
}

pub fn dot(x: &[RingElement], y: &[RingElement]) -> RingElement {
    x.iter().zip(y).fold(r1().zero(), |acc, (a, b)| {
        acc.add(a.mul(*b).unwrap()).unwrap()
    })
}

/// Every vector of `R_1^n`.
pub fn all_vectors(n: usize) -> Vec<Vec<RingElement>> {
    let elems: Vec<RingElement> = r1().elements().collect();
    (0..4usize.pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let e = elems[i % 4];
                    i /= 4;
                    e
                })
                .collect()
        })
        .collect()
}

/// The `R_1`-span of `rows`, by enumerating all combinations.
pub fn ring_span(rows: &[Vec<RingElement>], n: usize) -> BTreeSet<Vec<RingElement>> {
    let elems: Vec<RingElement> = r1().elements().collect();
    let mut out = BTreeSet::new();
    for mut i in 0..4usize.pow(rows.len() as u32) {
        let mut w = vec![r1().zero(); n];
        for row in rows {
            let c = elems[i % 4];
            i /= 4;
            for (x, y) in w.iter_mut().zip(row) {
                *x = x.add(c.mul(*y).unwrap()).unwrap();
            }
        }
        out.insert(w);
    }
    out
}

pub fn to_bit_matrix(words: impl IntoIterator<Item = Vec<bool>>, n: usize) -> BitMatrix {
    let mut m = BitMatrix::empty(n);
    for w in words {
        let mut row = vec![0u64; n.div_ceil(64)];
        for (i, &b) in w.iter().enumerate() {
            if b {
                row[i / 64] |= 1 << (i % 64);
            }
        }
        m.push_row(&row).unwrap();
    }
    m
}

/// The row space of the transposed right annihilator of `v`.
pub fn annihilator_code(v: &GroupRingElement) -> LinearCode {
    let ann = v.right_annihilator_basis().unwrap();
    let g = v.group();
    let mut rows = BitMatrix::zeros(ann.n_rows(), g.order());
    for i in 0..ann.n_rows() {
        for j in 0..g.order() {
            if ann.get(i, j) {
                rows.set(i, g.inv(j), true);
            }
        }
    }
    LinearCode::from_generator(&rows)
}
