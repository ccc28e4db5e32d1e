#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(e) = smolab::groups::catalog::parse_catalog_expr(text) {
            assert_eq!(smolab::groups::catalog::parse_catalog_expr(&e.to_string()).as_ref(), Ok(&e));
        }
    }
});
