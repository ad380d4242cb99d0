#![no_main]

use divsat::reductions::{emit_set_system, parse_set_system};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(ss) = parse_set_system(data) {
        let text = emit_set_system(&ss);
        assert_eq!(parse_set_system(text.as_bytes()).unwrap(), ss);
    }
});
