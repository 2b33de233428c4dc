#![no_main]

use grouplcd::GroupTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    if let Ok(g) = GroupTable::parse(input) {
        assert_eq!(GroupTable::parse(g.label()).unwrap().element_names(), g.element_names());
        for i in 0..g.order() {
            assert_eq!(g.mul(i, g.inv(i)), g.identity());
        }
    }
});
