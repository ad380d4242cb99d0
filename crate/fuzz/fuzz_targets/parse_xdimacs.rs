#![no_main]

use divsat::formula::dimacs::{emit_xdimacs, parse_xdimacs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(phi) = parse_xdimacs(data) {
        let text = emit_xdimacs(&phi);
        assert_eq!(parse_xdimacs(text.as_bytes()).unwrap(), phi);
    }
});
