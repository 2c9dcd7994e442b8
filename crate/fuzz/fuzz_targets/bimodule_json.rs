#![no_main]

use inverse_hom::crossprod::matrix_algebra;
use inverse_hom::field::Rationals;
use inverse_hom::serial::{from_json, BimoduleDoc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = from_json::<BimoduleDoc>(text) else { return };
    let _ = doc.build(&matrix_algebra(Rationals, 2));
});
