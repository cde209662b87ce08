#![no_main]

use libfuzzer_sys::fuzz_target;
use sigtutte::io::{parse_graph_document, render_graph};
use sigtutte::tutte::{signed_tutte_dc, signed_tutte_subset};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_graph_document(text) else { return };
    let again = parse_graph_document(&render_graph(&doc)).expect("rendered graph parses");
    assert_eq!(again, doc);
    // keep polynomial work small
    if doc.graph.edge_count() <= 8 && doc.graph.vertex_count() <= 16 {
        assert_eq!(signed_tutte_subset(&doc.graph), signed_tutte_dc(&doc.graph));
    }
});
