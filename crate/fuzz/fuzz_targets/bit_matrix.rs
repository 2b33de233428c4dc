#![no_main]

use grouplcd::{rref, BitMatrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    if input.len() > 4096 {
        return;
    }
    if let Ok(m) = input.parse::<BitMatrix>() {
        assert_eq!(m.to_string().parse::<BitMatrix>().unwrap(), m);
        let e = rref(&m);
        assert_eq!(rref(&e.matrix).matrix, e.matrix);
    }
});
