#![no_main]

use std::sync::Arc;

use grouplcd::{GroupRingElement, GroupTable, RingSpec};
use libfuzzer_sys::fuzz_target;

// input: `<group id>\n<ring>\n<element>`
fuzz_target!(|input: &str| {
    let mut parts = input.splitn(3, '\n');
    let (Some(group), Some(ring), Some(element)) = (parts.next(), parts.next(), parts.next()) else {
        return;
    };
    let (Ok(g), Ok(ring)) = (GroupTable::parse(group), RingSpec::parse(ring)) else {
        return;
    };
    if g.order() > 64 {
        return;
    }
    let g = Arc::new(g);
    if let Ok(v) = GroupRingElement::parse(g.clone(), ring, element) {
        let again = GroupRingElement::from_v_bits(g, ring, &v.v_bits()).unwrap();
        assert_eq!(again, v);
        assert_eq!(v.transpose_involution().transpose_involution(), v);
    }
});
