#![no_main]

use grouplcd::{emit_table, parse_table, Format};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(&data[..data.len().min(64 * 1024)]) else {
        return;
    };
    if let Ok(table) = parse_table(text, Format::Json) {
        let out = emit_table(&table, Format::Json).unwrap();
        assert_eq!(parse_table(&out, Format::Json).unwrap(), table);
    }
});
