#![no_main]

use inverse_hom::serial::{from_json, MonoidDoc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = from_json::<MonoidDoc>(text) {
        if let Ok(s) = doc.build() {
            assert_eq!(MonoidDoc::from_monoid(&s).build().unwrap().table(), s.table());
        }
    }
});
