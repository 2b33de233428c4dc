#![no_main]

use grouplcd::{RingElement, RingSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    for spec in [RingSpec::F2, RingSpec::Rk(1), RingSpec::Rk(2), RingSpec::Rk(3)] {
        if let Ok(e) = RingElement::parse(spec, input) {
            assert_eq!(RingElement::parse(spec, &e.to_string()).unwrap(), e);
        }
    }
});
