#![no_main]

use libfuzzer_sys::fuzz_target;
use sigtutte::io::{parse_graph_json, render_graph_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_graph_json(text) else { return };
    let again = parse_graph_json(&render_graph_json(&doc)).expect("rendered graph parses");
    assert_eq!(again, doc);
});
