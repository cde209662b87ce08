#![no_main]

use libfuzzer_sys::fuzz_target;
use sigtutte::io::{parse_matroid, render_matroid};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = parse_matroid(text) else { return };
    let _ = m.validate();
    let again = parse_matroid(&render_matroid(&m)).expect("rendered matroid parses");
    assert_eq!(again, m);
});
