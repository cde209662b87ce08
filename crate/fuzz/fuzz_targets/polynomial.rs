#![no_main]

use libfuzzer_sys::fuzz_target;
use sigtutte::TriPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = text.parse::<TriPoly>() else { return };
    let again: TriPoly = p.to_string().parse().expect("rendered polynomial parses");
    assert_eq!(again, p);
});
