#![no_main]

use inverse_hom::field::{Field, PrimeField, Rationals};
use inverse_hom::serial::parse_field;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = Rationals.parse(s) {
        assert_eq!(Rationals.parse(&Rationals.format(&x)).unwrap(), x);
    }
    let f = PrimeField::new(7).unwrap();
    if let Ok(x) = f.parse(s) {
        assert_eq!(f.parse(&f.format(&x)).unwrap(), x);
    }
    let _ = parse_field(s);
});
