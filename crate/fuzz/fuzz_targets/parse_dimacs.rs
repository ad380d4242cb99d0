#![no_main]

use divsat::formula::dimacs::{emit_dimacs, parse_dimacs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(phi) = parse_dimacs(data) {
        let text = emit_dimacs(&phi);
        assert_eq!(parse_dimacs(text.as_bytes()).unwrap(), phi);
    }
});
