use std::collections::BTreeSet;
use std::sync::Arc;

mod common;

use common::{all_vectors, dot, r1, r1_element, ring_span, to_bit_matrix};
use grouplcd::ring::gray_lift_vector;
use grouplcd::search::enumerate_symmetric;
use grouplcd::{gray_lift_code, GroupTable, LinearCode, RingElement, RingMatrix, RingSpec};
use rand::{Rng, SeedableRng};

#[test]
fn phi1_table() {
    for a in [false, true] {
        for b in [false, true] {
            assert_eq!(r1_element(a, b).gray_phi().unwrap(), vec![b, a ^ b]);
        }
    }
}

#[test]
fn phi_is_a_linear_bijection() {
    for k in 1..=3 {
        let spec = RingSpec::rk(k).unwrap();
        let mut images = BTreeSet::new();
        for x in spec.elements() {
            let px = x.gray_phi().unwrap();
            images.insert(px.clone());
            for y in spec.elements() {
                let sum = x.add(y).unwrap().gray_phi().unwrap();
                let py = y.gray_phi().unwrap();
                assert_eq!(
                    sum,
                    px.iter().zip(&py).map(|(a, b)| a ^ b).collect::<Vec<_>>()
                );
            }
        }
        assert_eq!(images.len() as u64, spec.cardinality());
    }
}

#[test]
fn random_r1_codes() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let elems: Vec<RingElement> = r1().elements().collect();
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let n_rows = rng.gen_range(1..=3);
        let rows: Vec<Vec<RingElement>> = (0..n_rows)
            .map(|_| (0..n).map(|_| elems[rng.gen_range(0..4)]).collect())
            .collect();
        let code = ring_span(&rows, n);
        let dual: Vec<Vec<RingElement>> = all_vectors(n)
            .into_iter()
            .filter(|x| rows.iter().all(|r| dot(r, x).is_zero()))
            .collect();
        assert_eq!(
            code.len() * dual.len(),
            4usize.pow(n as u32),
            "Frobenius size identity"
        );

        let lifted = LinearCode::from_generator(
            &gray_lift_code(&RingMatrix::from_rows(r1(), n, &rows).unwrap()).unwrap(),
        );
        // |phi(C)| = |C| and phi(C) is the image of every codeword
        let images: BTreeSet<Vec<bool>> = code
            .iter()
            .map(|w| gray_lift_vector(r1(), w).unwrap())
            .collect();
        assert_eq!(images.len(), code.len());
        assert_eq!(1usize << lifted.dimension(), code.len());
        let image_code = LinearCode::from_generator(&to_bit_matrix(images, 2 * n));
        assert_eq!(image_code, lifted);

        // phi(C^perp) = phi(C)^perp
        let dual_image = LinearCode::from_generator(&to_bit_matrix(
            dual.iter().map(|w| gray_lift_vector(r1(), w).unwrap()),
            2 * n,
        ));
        assert_eq!(dual_image, lifted.dual());
    }
}

#[test]
fn gray_lifts_of_reversible_listing_codes_are_reversible() {
    for id in ["d2:rev", "d4:rev", "d6:rev", "d8:rev"] {
        let g = Arc::new(GroupTable::parse(id).unwrap());
        for v in enumerate_symmetric(g, r1(), 1 << 20).unwrap() {
            let ring_gen = v.sigma();
            let c = LinearCode::from_generator(&gray_lift_code(&ring_gen).unwrap());
            assert!(c.is_reversible(2).unwrap(), "{id}, v = {v}");
        }
    }
}

#[test]
fn r2_lift_dimensions() {
    // |phi(C)| = |C| over R_2 for the codes generated by single monomials
    let r2 = RingSpec::rk(2).unwrap();
    for mono in r2.monomials() {
        let lifted = gray_lift_code(&RingMatrix::from_rows(r2, 1, &[vec![mono]]).unwrap()).unwrap();
        let span: BTreeSet<u8> = r2.elements().map(|c| c.mul(mono).unwrap().bits()).collect();
        assert_eq!(1usize << lifted.n_rows(), span.len());
    }
}
