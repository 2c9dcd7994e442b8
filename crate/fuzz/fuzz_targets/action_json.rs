#![no_main]

use inverse_hom::crossprod::diagonal_algebra;
use inverse_hom::field::Rationals;
use inverse_hom::invmon::chain_semilattice;
use inverse_hom::serial::{from_json, ActionDoc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = from_json::<ActionDoc>(text) else { return };
    let s = chain_semilattice(2).unwrap();
    let _ = doc.build(&s, &diagonal_algebra(Rationals, 2));
});
