#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = smolab::euler::EulerProduct::from_satake_csv(text, None, "fuzz");
    }
});
