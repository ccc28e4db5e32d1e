#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(gens) = smolab::groups::parse_group_spec(text) {
            let _ = smolab::groups::build_group(&gens, 256, "fuzz");
        }
    }
});
