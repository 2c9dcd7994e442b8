#![no_main]

use inverse_hom::serial::{from_json, GroupoidDoc};
use inverse_hom::steinberg::bisections;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = from_json::<GroupoidDoc>(text) else { return };
    if let Ok(g) = doc.build() {
        if g.arrows() <= 8 {
            let _ = bisections(&g);
        }
    }
});
