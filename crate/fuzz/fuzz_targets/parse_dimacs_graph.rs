#![no_main]

use divsat::graph::{emit_dimacs_graph, parse_dimacs_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_dimacs_graph(data) {
        let text = emit_dimacs_graph(&g, &[]);
        assert_eq!(parse_dimacs_graph(text.as_bytes()).unwrap(), g);
    }
});
