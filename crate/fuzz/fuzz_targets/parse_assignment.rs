#![no_main]

use divsat::formula::Assignment;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(a) = text.parse::<Assignment>() {
            assert_eq!(a.to_string().parse::<Assignment>().unwrap(), a);
        }
    }
});
