#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = smolab::groups::Permutation::parse(text) {
            let q = smolab::groups::Permutation::parse(&p.to_string()).expect("display parses");
            assert_eq!(q.extended(p.degree()), p);
        }
    }
});
