#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(fs) = smolab::primes::FieldSpec::parse(text) {
            for p in [2, 3, 5, 7, 11, 13] {
                let _ = fs.residue_degree(p);
            }
        }
    }
});
