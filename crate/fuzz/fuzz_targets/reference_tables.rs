#![no_main]

use grouplcd::tables::parse_reference_tables;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    let _ = parse_reference_tables(input);
});
