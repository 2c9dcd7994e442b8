#![no_main]

use inverse_hom::field::Rationals;
use inverse_hom::invmon::chain_semilattice;
use inverse_hom::monhom::Side;
use inverse_hom::serial::{
    action_from_shorthand, algebra_from_shorthand, bimodule_from_shorthand, groupoid_from_shorthand, module_from_shorthand,
    monoid_from_shorthand,
};
use libfuzzer_sys::fuzz_target;

// First byte picks the parser.
fuzz_target!(|data: &[u8]| {
    let Some((&which, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let c2 = chain_semilattice(2).unwrap();
    match which % 6 {
        0 => drop(monoid_from_shorthand(s)),
        1 => drop(module_from_shorthand(s, &c2, Rationals, Side::Left)),
        2 => drop(algebra_from_shorthand(s, Rationals, Some(&c2))),
        3 => {
            if let Ok(a) = algebra_from_shorthand("ke", Rationals, Some(&c2)) {
                let _ = action_from_shorthand(s, &c2, &a);
            }
        }
        4 => {
            if let Ok(a) = algebra_from_shorthand("dual", Rationals, None) {
                let _ = bimodule_from_shorthand(s, &a);
            }
        }
        _ => drop(groupoid_from_shorthand(s)),
    }
});
