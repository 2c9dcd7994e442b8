#![no_main]

use inverse_hom::field::{PrimeField, Rationals};
use inverse_hom::serial::{from_json, AlgebraDoc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = from_json::<AlgebraDoc>(text) else { return };
    if let Ok(a) = doc.build(Rationals) {
        assert!(AlgebraDoc::from_algebra(&a).build(Rationals).is_ok());
    }
    let _ = doc.build(PrimeField::new(2).unwrap());
});
