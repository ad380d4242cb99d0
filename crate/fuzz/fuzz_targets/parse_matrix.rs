#![no_main]

use divsat::xor::{emit_matrix, parse_matrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(sys) = parse_matrix(data) {
        let text = emit_matrix(&sys);
        assert_eq!(parse_matrix(text.as_bytes()).unwrap(), sys);
    }
});
