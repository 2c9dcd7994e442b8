#![no_main]

use inverse_hom::field::{PrimeField, Rationals};
use inverse_hom::invmon::symmetric_inverse_monoid;
use inverse_hom::serial::{from_json, ModuleDoc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = from_json::<ModuleDoc>(text) else { return };
    let s = symmetric_inverse_monoid(2).unwrap();
    if let Ok(m) = doc.build(&s, Rationals) {
        assert_eq!(ModuleDoc::from_module(&m).build(&s, Rationals).unwrap(), m);
    }
    let _ = doc.build(&s, PrimeField::new(3).unwrap());
});
