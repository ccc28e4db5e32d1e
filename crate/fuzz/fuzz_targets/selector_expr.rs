#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(e) = smolab::primes::parse_selector_expr(text) {
            let _ = e.resolve_with(&mut |_| Ok(String::new()));
        }
    }
});
