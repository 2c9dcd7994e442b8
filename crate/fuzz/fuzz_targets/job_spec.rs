#![no_main]

use inverse_hom::serial::from_json;
use inverse_hom_cli::job::JobSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = from_json::<JobSpec>(text) {
        let again = serde_json::to_string(&spec).unwrap();
        assert_eq!(from_json::<JobSpec>(&again).unwrap(), spec);
    }
});
