#![no_main]

use libfuzzer_sys::fuzz_target;
use sigtutte::FiniteAbelianGroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = text.parse::<FiniteAbelianGroup>() else { return };
    let again: FiniteAbelianGroup = g.to_string().parse().expect("rendered group parses");
    assert_eq!(again, g);
    assert_eq!(g.order(), g.two_g_order() * g.two_torsion_order());
});
